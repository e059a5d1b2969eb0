#include "depmeas/table.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace depmeas {

namespace {

constexpr double kProbSumTol = 1e-9;

// Shared validation for both factories. `require_unit_sum` distinguishes the
// probability entry point (sum must already be 1 within tolerance) from the
// counts entry point (any positive total is accepted).
DenseTable validate_and_normalize(const std::vector<std::vector<double>>& m,
                                  bool require_unit_sum) {
  const std::size_t rows = m.size();
  if (rows < 2) throw std::invalid_argument("joint table needs at least 2 rows");
  const std::size_t cols = m[0].size();
  if (cols < 2) throw std::invalid_argument("joint table needs at least 2 columns");

  DenseTable t = DenseTable::zeros(rows, cols);
  double total = 0.0;
  for (std::size_t i = 0; i < rows; ++i) {
    if (m[i].size() != cols)
      throw std::invalid_argument("joint table rows have unequal lengths");
    for (std::size_t j = 0; j < cols; ++j) {
      const double v = m[i][j];
      if (!std::isfinite(v)) throw std::invalid_argument("joint table entry is not finite");
      if (v < 0.0)
        throw std::invalid_argument("joint table entry is negative at (" +
                                    std::to_string(i) + ", " + std::to_string(j) + ")");
      t.at(i, j) = v;
      total += v;
    }
  }
  if (total <= 0.0) throw std::domain_error("joint table has no mass");
  if (require_unit_sum && std::abs(total - 1.0) > kProbSumTol)
    throw std::invalid_argument("probability table sums to " + std::to_string(total) +
                                ", expected 1 within 1e-9");

  for (std::size_t i = 0; i < rows; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < cols; ++j) s += t.at(i, j);
    if (s <= 0.0) throw std::domain_error("row " + std::to_string(i) + " has zero mass");
  }
  for (std::size_t j = 0; j < cols; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < rows; ++i) s += t.at(i, j);
    if (s <= 0.0) throw std::domain_error("column " + std::to_string(j) + " has zero mass");
  }

  // The one renormalization this type performs. Inputs already summing to 1
  // at machine precision are taken as-is: dividing by a total within an ulp
  // of 1 would only inject rounding noise, and the passthrough is what lets a
  // normalized table round-trip through a report file bit for bit.
  if (std::abs(total - 1.0) > 1e-13)
    for (double& v : t.cells) v /= total;
  return t;
}

void check_labels(const char* which, const std::vector<std::string>& labels,
                  std::size_t expected) {
  if (!labels.empty() && labels.size() != expected)
    throw std::invalid_argument(std::string(which) + " label count does not match dimension");
}

}  // namespace

JointTable JointTable::from_counts(const std::vector<std::vector<double>>& counts,
                                   std::vector<std::string> row_labels,
                                   std::vector<std::string> col_labels) {
  DenseTable t = validate_and_normalize(counts, /*require_unit_sum=*/false);
  check_labels("row", row_labels, t.rows);
  check_labels("column", col_labels, t.cols);
  return JointTable(std::move(t), std::move(row_labels), std::move(col_labels));
}

JointTable JointTable::from_probs(const std::vector<std::vector<double>>& probs,
                                  std::vector<std::string> row_labels,
                                  std::vector<std::string> col_labels) {
  DenseTable t = validate_and_normalize(probs, /*require_unit_sum=*/true);
  check_labels("row", row_labels, t.rows);
  check_labels("column", col_labels, t.cols);
  return JointTable(std::move(t), std::move(row_labels), std::move(col_labels));
}

MarginalPair marginals(const JointTable& t) {
  MarginalPair m;
  m.row.assign(t.rows(), 0.0);
  m.col.assign(t.cols(), 0.0);
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) m.row[i] += t.at(i, j);
  for (std::size_t j = 0; j < t.cols(); ++j)
    for (std::size_t i = 0; i < t.rows(); ++i) m.col[j] += t.at(i, j);
  return m;
}

JointTable independence_product(const JointTable& t) {
  const MarginalPair m = marginals(t);
  DenseTable prod = DenseTable::zeros(t.rows(), t.cols());
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) prod.at(i, j) = m.row[i] * m.col[j];
  return JointTable(std::move(prod), t.row_labels(), t.col_labels());
}

JointTable transpose(const JointTable& t) {
  DenseTable tr = DenseTable::zeros(t.cols(), t.rows());
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) tr.at(j, i) = t.at(i, j);
  return JointTable(std::move(tr), t.col_labels(), t.row_labels());
}

TriTable TriTable::from_probs(std::vector<double> flat, std::size_t nx,
                              std::size_t ny, std::size_t nz) {
  if (nx < 1 || ny < 1 || nz < 1)
    throw std::invalid_argument("three-way table dimensions must be positive");
  if (flat.size() != nx * ny * nz)
    throw std::invalid_argument("three-way table size does not match dimensions");
  double total = 0.0;
  for (double v : flat) {
    if (!std::isfinite(v)) throw std::invalid_argument("three-way table entry is not finite");
    if (v < 0.0) throw std::invalid_argument("three-way table entry is negative");
    total += v;
  }
  if (std::abs(total - 1.0) > kProbSumTol)
    throw std::invalid_argument("three-way table sums to " + std::to_string(total) +
                                ", expected 1 within 1e-9");
  if (std::abs(total - 1.0) > 1e-13)
    for (double& v : flat) v /= total;
  return TriTable(std::move(flat), nx, ny, nz);
}

}  // namespace depmeas
