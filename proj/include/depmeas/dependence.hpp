#pragma once

#include <cstddef>
#include <vector>

#include "depmeas/table.hpp"

namespace depmeas {

enum class Axis { kX, kY };

// Relative tolerance used to call two cells tied for a row/column maximum.
inline constexpr double kArgmaxTieRelTol = 1e-12;

// Enumeration stops with an error once the tie combinations exceed this cap.
inline constexpr std::size_t kDefaultCandidateCap = 4096;

struct TieSite {
  std::size_t state;                  // row index (Axis::kX) or column index (Axis::kY)
  std::vector<std::size_t> choices;   // tied argmax positions, ascending
};

// Full-dependence tables for one axis. For Axis::kX each candidate moves every
// row's total mass onto one argmax cell of that row; ties branch, one candidate
// per combination of choices, enumerated in lexicographic choice order.
struct CandidateSet {
  Axis axis = Axis::kX;
  std::vector<DenseTable> tables;     // nonempty; each row (or column) has one nonzero
  std::vector<TieSite> tie_sites;     // only states with two or more tied choices
};

CandidateSet full_dep_candidates(const JointTable& table, Axis axis,
                                 std::size_t candidate_cap = kDefaultCandidateCap);

// Normalization variants for rho_m. "definition1" scales the distance to
// independence by the square root of the geometric-mean product of candidate
// distances; "example4-compat" matches the example-4 fixture's printed
// convention, dropping that outer square root whenever either axis has more
// than one candidate. The two agree exactly when both axes have a single
// candidate.
enum class RhoMVariant { kDefinition1, kExample4Compat };

struct RhoMResult {
  double value = 0.0;
  double numerator = 0.0;    // hellinger(independence product, table)
  double denominator = 0.0;  // geometric-mean normalizer
  std::size_t x_candidates = 0;
  std::size_t y_candidates = 0;
  RhoMVariant variant = RhoMVariant::kDefinition1;
  bool exceeds_unit = false;  // raw ratio landed above 1 + 1e-9 (reported unclamped)
};

// Hellinger-based dependence coefficient: the distance from the table to its
// independence product, normalized by the geometric mean of the distances from
// the independence product to every full-dependence candidate of each axis.
// 0 iff the table equals its independence product.
RhoMResult rho_m(const JointTable& table,
                 RhoMVariant variant = RhoMVariant::kDefinition1,
                 std::size_t candidate_cap = kDefaultCandidateCap);

// 2x2 only: the signed deviation of the top-left cell from independence,
// p(0,0) - p_row(0) * p_col(0). Every cell of a 2x2 table deviates from
// independence by exactly this magnitude (the sign flips off-diagonal), and
// phi is this value divided by the root product of all four marginals.
double phi_component_distance(const JointTable& table);

}  // namespace depmeas
