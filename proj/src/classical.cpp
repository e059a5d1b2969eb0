#include "depmeas/classical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace depmeas {

namespace {

void check_support(const JointTable& t, const NumericSupport& s) {
  if (s.x.size() != t.rows() || s.y.size() != t.cols())
    throw std::invalid_argument("numeric support lengths do not match table dimensions");
  for (std::size_t i = 1; i < s.x.size(); ++i)
    if (!(s.x[i - 1] < s.x[i]))
      throw std::invalid_argument("x support must be strictly increasing");
  for (std::size_t j = 1; j < s.y.size(); ++j)
    if (!(s.y[j - 1] < s.y[j]))
      throw std::invalid_argument("y support must be strictly increasing");
}

void check_sample_size(double n) {
  if (!(n > 0.0) || !std::isfinite(n))
    throw std::invalid_argument("sample size must be positive");
}

// Ranks 1..n of a tie-free sample, by value order.
std::vector<double> ranks_of(const std::vector<double>& v, const char* which) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  for (std::size_t k = 1; k < order.size(); ++k)
    if (v[order[k - 1]] == v[order[k]])
      throw std::invalid_argument(std::string("spearman_rho: tied values in ") + which);
  std::vector<double> rank(v.size());
  for (std::size_t k = 0; k < order.size(); ++k)
    rank[order[k]] = static_cast<double>(k + 1);
  return rank;
}

}  // namespace

double phi_coefficient(const JointTable& t) {
  if (t.rows() != 2 || t.cols() != 2)
    throw std::invalid_argument("phi coefficient is defined for 2x2 tables only");
  const MarginalPair m = marginals(t);
  const double det = t.at(0, 0) * t.at(1, 1) - t.at(0, 1) * t.at(1, 0);
  return det / std::sqrt(m.row[0] * m.row[1] * m.col[0] * m.col[1]);
}

double covariance(const JointTable& t, const NumericSupport& s) {
  check_support(t, s);
  const MarginalPair m = marginals(t);
  double ex = 0.0, ey = 0.0, exy = 0.0;
  for (std::size_t i = 0; i < t.rows(); ++i) ex += s.x[i] * m.row[i];
  for (std::size_t j = 0; j < t.cols(); ++j) ey += s.y[j] * m.col[j];
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) exy += s.x[i] * s.y[j] * t.at(i, j);
  return exy - ex * ey;
}

double variance_x(const JointTable& t, const NumericSupport& s) {
  check_support(t, s);
  const MarginalPair m = marginals(t);
  double ex = 0.0, exx = 0.0;
  for (std::size_t i = 0; i < t.rows(); ++i) {
    ex += s.x[i] * m.row[i];
    exx += s.x[i] * s.x[i] * m.row[i];
  }
  return exx - ex * ex;
}

double variance_y(const JointTable& t, const NumericSupport& s) {
  check_support(t, s);
  const MarginalPair m = marginals(t);
  double ey = 0.0, eyy = 0.0;
  for (std::size_t j = 0; j < t.cols(); ++j) {
    ey += s.y[j] * m.col[j];
    eyy += s.y[j] * s.y[j] * m.col[j];
  }
  return eyy - ey * ey;
}

double pearson_rho(const JointTable& t, const NumericSupport& s) {
  const double vx = variance_x(t, s);
  const double vy = variance_y(t, s);
  if (vx <= 0.0 || vy <= 0.0)
    throw std::domain_error("pearson_rho: a variable has zero variance");
  return covariance(t, s) / std::sqrt(vx * vy);
}

double spearman_rho(const PairedSample& sample) {
  const std::size_t n = sample.xs.size();
  if (sample.ys.size() != n)
    throw std::invalid_argument("spearman_rho: sample coordinates have different lengths");
  if (n < 2) throw std::invalid_argument("spearman_rho: needs at least two observations");
  const std::vector<double> rx = ranks_of(sample.xs, "x");
  const std::vector<double> ry = ranks_of(sample.ys, "y");
  double sum_d2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = rx[i] - ry[i];
    sum_d2 += d * d;
  }
  const double nn = static_cast<double>(n);
  return 1.0 - 6.0 * sum_d2 / (nn * (nn * nn - 1.0));
}

double mutual_information(const JointTable& t) {
  const MarginalPair m = marginals(t);
  double mi = 0.0;
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) {
      const double p = t.at(i, j);
      if (p > 0.0) mi += p * std::log(p / (m.row[i] * m.col[j]));  // 0 log 0 -> 0
    }
  return mi;
}

double conditional_mutual_information(const TriTable& t) {
  // Slice marginals first, in fixed index order.
  std::vector<double> pz(t.nz(), 0.0);
  std::vector<double> pxz(t.nx() * t.nz(), 0.0);
  std::vector<double> pyz(t.ny() * t.nz(), 0.0);
  for (std::size_t x = 0; x < t.nx(); ++x)
    for (std::size_t y = 0; y < t.ny(); ++y)
      for (std::size_t z = 0; z < t.nz(); ++z) {
        const double p = t.at(x, y, z);
        pz[z] += p;
        pxz[x * t.nz() + z] += p;
        pyz[y * t.nz() + z] += p;
      }
  double ci = 0.0;
  for (std::size_t x = 0; x < t.nx(); ++x)
    for (std::size_t y = 0; y < t.ny(); ++y)
      for (std::size_t z = 0; z < t.nz(); ++z) {
        const double p = t.at(x, y, z);
        if (p <= 0.0) continue;  // 0 log 0 -> 0, and pz > 0 whenever p > 0
        ci += p * std::log(p * pz[z] / (pxz[x * t.nz() + z] * pyz[y * t.nz() + z]));
      }
  return ci;
}

double chi_squared(const JointTable& t, double n) {
  check_sample_size(n);
  const MarginalPair m = marginals(t);
  double sum = 0.0;
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) {
      const double expected = m.row[i] * m.col[j];
      const double d = t.at(i, j) - expected;
      sum += d * d / expected;
    }
  return n * sum;
}

double degree_of_dependence_ea(const JointTable& t) {
  // Conditional-probability route, kept deliberately distinct from the
  // chi_squared accumulation: sum_ij p_ij (p_{i|j} - p_i.) / p_i.
  const MarginalPair m = marginals(t);
  double sum = 0.0;
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) {
      const double cond = t.at(i, j) / m.col[j];
      sum += t.at(i, j) * (cond - m.row[i]) / m.row[i];
    }
  return sum;
}

double cramers_v(const JointTable& t, double n) {
  const double k = static_cast<double>(std::min(t.rows(), t.cols()) - 1);
  return std::sqrt(chi_squared(t, n) / (n * k));
}

double tschuprow_t(const JointTable& t, double n) {
  const double k = std::sqrt(static_cast<double>((t.rows() - 1) * (t.cols() - 1)));
  return std::sqrt(chi_squared(t, n) / (n * k));
}

TwoProportionResult two_proportion(const TwoProportionInput& in) {
  if (!(in.p > 0.0 && in.p < 1.0))
    throw std::domain_error("two_proportion: pooled proportion must lie strictly in (0, 1)");
  if (in.p1 < 0.0 || in.p1 > 1.0 || in.q1 < 0.0 || in.q1 > 1.0)
    throw std::domain_error("two_proportion: group proportions must lie in [0, 1]");
  if (in.a < 1 || in.b < 1)
    throw std::invalid_argument("two_proportion: group sizes must be at least 1");
  TwoProportionResult r;
  r.factor = (in.p1 - in.q1) / std::sqrt(in.p * (1.0 - in.p));
  r.z = r.factor / std::sqrt(1.0 / static_cast<double>(in.a) +
                             1.0 / static_cast<double>(in.b));
  return r;
}

}  // namespace depmeas
