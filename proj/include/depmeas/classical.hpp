#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "depmeas/table.hpp"

namespace depmeas {

// Numeric values attached to the row states (x) and column states (y).
// Each vector must be strictly increasing and match the table dimension.
struct NumericSupport {
  std::vector<double> x;
  std::vector<double> y;
};

// Paired observations of two numeric variables, same length, no ties within
// either coordinate.
struct PairedSample {
  std::vector<double> xs;
  std::vector<double> ys;
};

struct TwoProportionInput {
  double p1 = 0.0;  // success proportion in the first group, in [0, 1]
  double q1 = 0.0;  // success proportion in the second group, in [0, 1]
  double p = 0.0;   // pooled success proportion, in (0, 1)
  long a = 0;       // first group size, >= 1
  long b = 0;       // second group size, >= 1
};

struct TwoProportionResult {
  double factor = 0.0;  // (p1 - q1) / sqrt(p (1 - p))
  double z = 0.0;       // factor / sqrt(1/a + 1/b)
};

// phi coefficient of a 2x2 table: (p00 p11 - p01 p10) / sqrt(p0. p1. p.0 p.1).
// Identical in magnitude to the Pearson correlation of the two indicators.
double phi_coefficient(const JointTable& t);

// E[XY] - E[X]E[Y] under the joint table with the given numeric supports.
double covariance(const JointTable& t, const NumericSupport& s);
double variance_x(const JointTable& t, const NumericSupport& s);
double variance_y(const JointTable& t, const NumericSupport& s);

// Pearson correlation of the numeric supports under the joint table.
double pearson_rho(const JointTable& t, const NumericSupport& s);

// Spearman rank correlation via the exact tie-free formula
//   1 - 6 sum_i d_i^2 / (n (n^2 - 1)),
// where d_i is the rank difference of the i-th observation pair. Ties in
// either coordinate are rejected.
double spearman_rho(const PairedSample& sample);

// Mutual information in nats; 0 * log 0 terms contribute exactly 0.
double mutual_information(const JointTable& t);

// Conditional mutual information I(X; Y | Z) in nats.
double conditional_mutual_information(const TriTable& t);

// Pearson chi-squared statistic for sample size n:
//   n * sum_ij (p_ij - p_i. p_.j)^2 / (p_i. p_.j)
double chi_squared(const JointTable& t, double n);

// Degree of dependence E{A}: sum_ij p_ij (p_ij - p_i. p_.j) / (p_i. p_.j).
// Satisfies chi_squared(t, n) == n * degree_of_dependence_ea(t) algebraically,
// but the two are computed by independent routes.
double degree_of_dependence_ea(const JointTable& t);

// Cramer's V: sqrt(chi^2 / (n * min(rows - 1, cols - 1))).
double cramers_v(const JointTable& t, double n);

// Tschuprow's T: sqrt(chi^2 / (n * sqrt((rows - 1)(cols - 1)))).
double tschuprow_t(const JointTable& t, double n);

// Standardized two-proportion comparison; see TwoProportionResult.
TwoProportionResult two_proportion(const TwoProportionInput& in);

}  // namespace depmeas
