#include "depmeas/dependence.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "depmeas/hellinger.hpp"

namespace depmeas {

namespace {

// Argmax positions along one row (axis X) or one column (axis Y), with
// relative-tolerance ties, ascending.
std::vector<std::size_t> tied_argmax(const JointTable& t, Axis axis, std::size_t state) {
  const std::size_t extent = axis == Axis::kX ? t.cols() : t.rows();
  auto cell = [&](std::size_t k) {
    return axis == Axis::kX ? t.at(state, k) : t.at(k, state);
  };
  double best = cell(0);
  for (std::size_t k = 1; k < extent; ++k) best = std::max(best, cell(k));
  std::vector<std::size_t> ties;
  for (std::size_t k = 0; k < extent; ++k)
    if (best - cell(k) <= kArgmaxTieRelTol * best) ties.push_back(k);
  return ties;
}

}  // namespace

CandidateSet full_dep_candidates(const JointTable& table, Axis axis,
                                 std::size_t candidate_cap) {
  const std::size_t states = axis == Axis::kX ? table.rows() : table.cols();
  const MarginalPair marg = marginals(table);
  const std::vector<double>& mass = axis == Axis::kX ? marg.row : marg.col;

  CandidateSet set;
  set.axis = axis;

  std::vector<std::vector<std::size_t>> choices(states);
  std::size_t count = 1;
  for (std::size_t s = 0; s < states; ++s) {
    choices[s] = tied_argmax(table, axis, s);
    if (choices[s].size() > 1) set.tie_sites.push_back({s, choices[s]});
    if (count > candidate_cap / choices[s].size())
      throw std::runtime_error("full-dependence candidates exceed cap of " +
                               std::to_string(candidate_cap));
    count *= choices[s].size();
  }

  // Mixed-radix enumeration, state 0 most significant, each state's tied
  // choices ascending: candidates come out in lexicographic choice order.
  std::vector<std::size_t> pick(states, 0);
  set.tables.reserve(count);
  for (std::size_t c = 0; c < count; ++c) {
    DenseTable cand = DenseTable::zeros(table.rows(), table.cols());
    for (std::size_t s = 0; s < states; ++s) {
      const std::size_t hit = choices[s][pick[s]];
      if (axis == Axis::kX)
        cand.at(s, hit) = mass[s];
      else
        cand.at(hit, s) = mass[s];
    }
    set.tables.push_back(std::move(cand));
    for (std::size_t s = states; s-- > 0;) {
      if (++pick[s] < choices[s].size()) break;
      pick[s] = 0;
    }
  }
  return set;
}

RhoMResult rho_m(const JointTable& table, RhoMVariant variant,
                 std::size_t candidate_cap) {
  const JointTable indep = independence_product(table);
  const CandidateSet cx = full_dep_candidates(table, Axis::kX, candidate_cap);
  const CandidateSet cy = full_dep_candidates(table, Axis::kY, candidate_cap);

  RhoMResult r;
  r.variant = variant;
  r.numerator = hellinger(indep.flat(), table.flat());
  r.x_candidates = cx.tables.size();
  r.y_candidates = cy.tables.size();

  auto distances = [&](const CandidateSet& set) {
    std::vector<double> d(set.tables.size());
    for (std::size_t i = 0; i < set.tables.size(); ++i) {
      d[i] = hellinger(indep.flat(), set.tables[i].cells);
      if (d[i] <= 0.0)
        throw std::domain_error("rho_m: a full-dependence candidate coincides with "
                                "the independence product; normalizer undefined");
    }
    return d;
  };
  const std::vector<double> dx = distances(cx);
  const std::vector<double> dy = distances(cy);

  if (dx.size() == 1 && dy.size() == 1) {
    // Single candidate per axis: both variants reduce to the plain root
    // product, computed directly so exact cases stay exact (a table equal to
    // its own sole candidate yields value 1.0 with no drift).
    r.denominator = std::sqrt(dx[0] * dy[0]);
    r.value = r.numerator / r.denominator;
  } else {
    // Geometric means in log space: candidate sets can reach the cap, and a
    // product of hundreds of sub-unit distances underflows.
    double log_mean = 0.0;
    double acc = 0.0;
    for (double d : dx) acc += std::log(d);
    log_mean += acc / static_cast<double>(dx.size());
    acc = 0.0;
    for (double d : dy) acc += std::log(d);
    log_mean += acc / static_cast<double>(dy.size());
    r.denominator = variant == RhoMVariant::kDefinition1 ? std::exp(0.5 * log_mean)
                                                         : std::exp(log_mean);
    r.value = r.numerator / r.denominator;
  }
  r.exceeds_unit = r.value > 1.0 + 1e-9;
  return r;
}

double phi_component_distance(const JointTable& table) {
  if (table.rows() != 2 || table.cols() != 2)
    throw std::invalid_argument("component distance is defined for 2x2 tables only");
  const MarginalPair m = marginals(table);
  return table.at(0, 0) - m.row[0] * m.col[0];
}

}  // namespace depmeas
