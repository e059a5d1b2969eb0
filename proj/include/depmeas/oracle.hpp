#pragma once

#include <cstdint>
#include <span>
#include <string>

#include <json.hpp>

#include "depmeas/parallel.hpp"
#include "depmeas/table.hpp"

namespace depmeas {

enum class Prop1Mode { kVertexEnumeration, kRandomSearch };

// Outcome of one brute-force verification claim. `details` carries the
// computed values; `witness` is null unless the claim failed, in which case it
// holds the counterexample. Serialization is byte-deterministic for a given
// seed: keys are sorted and no timestamps or environment data are recorded.
struct OracleReport {
  std::string claim;
  std::int64_t trials = 0;
  double worst_margin = 0.0;
  bool pass = false;
  nlohmann::json details = nlohmann::json::object();
  nlohmann::json witness;
};

// Checks that the point mass on p's smallest coordinate maximizes the
// Hellinger distance from p. Vertex mode enumerates every simplex vertex;
// random mode samples `trials` distributions and checks none lands farther
// than the closed form sqrt(1 - sqrt(min p)).
OracleReport verify_prop1(std::span<const double> p, Prop1Mode mode,
                          std::int64_t trials, std::uint64_t seed,
                          ExecMode exec = ExecMode::kParallel);

// Enumerates all permutations sigma of sum_i mass_i * x_i * y_sigma(i) and
// checks the identity attains the maximum and the full reversal the minimum.
// Holds when the weights mass_i * x_i increase with increasing x and y (always
// the case for uniform mass, or for ascending mass with positive supports).
OracleReport verify_cov_max(std::span<const double> support_x,
                            std::span<const double> support_y,
                            std::span<const double> mass);

// Samples `trials` joint tables uniformly from the simplex (rejecting
// near-degenerate marginals) and tracks the largest rho_m observed. The bound
// 1 is recorded empirically, not asserted: a value above 1 + 1e-9 fails the
// claim and ships the offending table as witness.
OracleReport search_rho_m_bound(std::size_t rows, std::size_t cols,
                                std::int64_t trials, std::uint64_t seed,
                                ExecMode exec = ExecMode::kParallel);

// Recomputes the example-4 fixture under both normalization variants and
// records which one lands within 5e-3 of the printed reference value 0.5731.
OracleReport resolve_example4_variant();

// Recomputes mutual information for the four comparison fixtures by two
// independent routes (direct sum and entropy decomposition) and records
// whether the p/q and r/s orderings match the reference text.
OracleReport verify_mi_examples();

// Step-by-step recomputation of the example-1 fixture's rho_m with direct
// formulas (no shared code with rho_m itself), recorded next to the printed
// reference value 0.2783 and the library's own result.
OracleReport recompute_example1();

// Stable JSON for a set of reports, keyed by claim id.
nlohmann::json provenance_json(std::span<const OracleReport> reports);

// Serialized provenance; byte-identical across runs with equal seeds.
std::string provenance_text(std::span<const OracleReport> reports);

void write_provenance(const std::string& path, std::span<const OracleReport> reports);

}  // namespace depmeas
