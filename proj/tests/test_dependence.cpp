#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "depmeas/dependence.hpp"
#include "depmeas/fixtures.hpp"
#include "depmeas/hellinger.hpp"
#include "depmeas/rng.hpp"
#include "helpers.hpp"

using depmeas::Axis;
using depmeas::CandidateSet;
using depmeas::full_dep_candidates;
using depmeas::JointTable;
using depmeas::rho_m;
using depmeas::RhoMResult;
using depmeas::RhoMVariant;
namespace fixtures = depmeas::fixtures;

namespace {

// Nonzero cells of one candidate as (row, col, mass) triples, row-major.
std::vector<std::tuple<std::size_t, std::size_t, double>> nonzeros(
    const depmeas::DenseTable& t) {
  std::vector<std::tuple<std::size_t, std::size_t, double>> out;
  for (std::size_t i = 0; i < t.rows; ++i)
    for (std::size_t j = 0; j < t.cols; ++j)
      if (t.at(i, j) != 0.0) out.push_back({i, j, t.at(i, j)});
  return out;
}

bool same_pattern(const std::vector<std::tuple<std::size_t, std::size_t, double>>& got,
                  const std::vector<std::tuple<std::size_t, std::size_t, double>>& want,
                  double mass_tol) {
  if (got.size() != want.size()) return false;
  for (std::size_t k = 0; k < got.size(); ++k) {
    if (std::get<0>(got[k]) != std::get<0>(want[k])) return false;
    if (std::get<1>(got[k]) != std::get<1>(want[k])) return false;
    if (std::abs(std::get<2>(got[k]) - std::get<2>(want[k])) > mass_tol) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("example2 candidates are unique and match the printed tables") {
  const JointTable t = fixtures::example2();

  const CandidateSet cx = full_dep_candidates(t, Axis::kX);
  REQUIRE(cx.tables.size() == 1);
  CHECK(cx.tie_sites.empty());
  CHECK(same_pattern(nonzeros(cx.tables[0]),
                     {{0, 2, 0.28}, {1, 0, 0.42}, {2, 1, 0.30}}, 1e-12));

  const CandidateSet cy = full_dep_candidates(t, Axis::kY);
  REQUIRE(cy.tables.size() == 1);
  CHECK(same_pattern(nonzeros(cy.tables[0]),
                     {{0, 2, 0.31}, {1, 0, 0.39}, {2, 1, 0.30}}, 1e-12));
}

TEST_CASE("example4 ties branch into exactly two candidates per axis") {
  const JointTable t = fixtures::example4();

  const CandidateSet cx = full_dep_candidates(t, Axis::kX);
  REQUIRE(cx.tables.size() == 2);
  REQUIRE(cx.tie_sites.size() == 1);
  CHECK(cx.tie_sites[0].state == 2);  // row 2 ties at columns 1 and 2
  CHECK(cx.tie_sites[0].choices == std::vector<std::size_t>{1, 2});
  // Printed candidate patterns: they differ only in where row 2's mass goes.
  CHECK(same_pattern(nonzeros(cx.tables[0]),
                     {{0, 0, 0.15}, {1, 4, 0.29}, {2, 1, 0.23}, {3, 3, 0.19}, {4, 1, 0.14}},
                     1e-12));
  CHECK(same_pattern(nonzeros(cx.tables[1]),
                     {{0, 0, 0.15}, {1, 4, 0.29}, {2, 2, 0.23}, {3, 3, 0.19}, {4, 1, 0.14}},
                     1e-12));

  const CandidateSet cy = full_dep_candidates(t, Axis::kY);
  REQUIRE(cy.tables.size() == 2);
  REQUIRE(cy.tie_sites.size() == 1);
  CHECK(cy.tie_sites[0].state == 1);  // column 1 ties at rows 2 and 4
  CHECK(cy.tie_sites[0].choices == std::vector<std::size_t>{2, 4});
}

TEST_CASE("every candidate preserves its axis marginal with one nonzero per state") {
  depmeas::SplitMix64 g(31);
  for (int rep = 0; rep < 25; ++rep) {
    const JointTable t = testutil::random_table(g, 4, 3);
    const depmeas::MarginalPair m = marginals(t);
    for (const Axis axis : {Axis::kX, Axis::kY}) {
      const CandidateSet set = full_dep_candidates(t, axis);
      REQUIRE(set.tables.size() == 1);  // random tables do not tie
      const depmeas::DenseTable& cand = set.tables[0];
      const std::size_t states = axis == Axis::kX ? t.rows() : t.cols();
      for (std::size_t s = 0; s < states; ++s) {
        double mass = 0.0;
        int hits = 0;
        const std::size_t extent = axis == Axis::kX ? t.cols() : t.rows();
        for (std::size_t k = 0; k < extent; ++k) {
          const double v = axis == Axis::kX ? cand.at(s, k) : cand.at(k, s);
          if (v != 0.0) {
            ++hits;
            mass += v;
          }
        }
        CHECK(hits == 1);
        CHECK(mass == (axis == Axis::kX ? m.row[s] : m.col[s]));  // bitwise
      }
    }
  }
}

TEST_CASE("candidate cap stops combinatorial blowups") {
  // A uniform 13x13 table ties on every row: 13^13 combinations.
  const std::size_t n = 13;
  std::vector<std::vector<double>> cells(n, std::vector<double>(n, 1.0));
  const JointTable t = JointTable::from_counts(cells);
  CHECK_THROWS_AS(full_dep_candidates(t, Axis::kX), std::runtime_error);
  // A generous cap admits a small branch set: 2x2 uniform gives 4 candidates.
  const JointTable u = JointTable::from_counts({{1.0, 1.0}, {1.0, 1.0}});
  CHECK(full_dep_candidates(u, Axis::kX).tables.size() == 4);
  CHECK_THROWS_AS(full_dep_candidates(u, Axis::kX, 3), std::runtime_error);
}

TEST_CASE("rho_m on the reference fixtures (frozen oracle values)") {
  CHECK(rho_m(fixtures::example1()).value ==
        doctest::Approx(0.27491052470339494).epsilon(1e-12));
  CHECK(rho_m(fixtures::example2()).value ==
        doctest::Approx(0.41088431355726346).epsilon(1e-12));
  CHECK(rho_m(fixtures::example2_linear()).value ==
        doctest::Approx(0.4069672207653714).epsilon(1e-12));
  CHECK(rho_m(fixtures::example3()).value ==
        doctest::Approx(0.3864519784016576).epsilon(1e-12));
  CHECK(rho_m(fixtures::example4()).value ==
        doctest::Approx(0.5730714798412136).epsilon(1e-12));
  CHECK(rho_m(fixtures::example4(), RhoMVariant::kExample4Compat).value ==
        doctest::Approx(0.7816943377069946).epsilon(1e-12));
}

TEST_CASE("rho_m intermediates for example1") {
  const RhoMResult r = rho_m(fixtures::example1());
  CHECK(r.numerator == doctest::Approx(0.14923315212203828).epsilon(1e-12));
  CHECK(r.denominator == doctest::Approx(0.5428426295539182).epsilon(1e-12));
  CHECK(r.x_candidates == 1);
  CHECK(r.y_candidates == 1);
  CHECK_FALSE(r.exceeds_unit);
}

TEST_CASE("variants agree exactly when both axes have a single candidate") {
  depmeas::SplitMix64 g(47);
  for (int rep = 0; rep < 25; ++rep) {
    const JointTable t = testutil::random_table(g, 3, 3);
    const RhoMResult a = rho_m(t, RhoMVariant::kDefinition1);
    const RhoMResult b = rho_m(t, RhoMVariant::kExample4Compat);
    REQUIRE(a.x_candidates == 1);
    REQUIRE(a.y_candidates == 1);
    CHECK(a.value == b.value);  // bitwise
  }
}

TEST_CASE("with branched candidates the compat denominator is the square of definition1's") {
  const JointTable t = fixtures::example4();
  const RhoMResult d1 = rho_m(t, RhoMVariant::kDefinition1);
  const RhoMResult d2 = rho_m(t, RhoMVariant::kExample4Compat);
  REQUIRE(d1.x_candidates == 2);
  REQUIRE(d1.y_candidates == 2);
  CHECK(d2.denominator ==
        doctest::Approx(d1.denominator * d1.denominator).epsilon(1e-12));
}

TEST_CASE("rho_m vanishes on independence products") {
  depmeas::SplitMix64 g(59);
  for (int rep = 0; rep < 20; ++rep) {
    const JointTable t = testutil::random_table(g, 3, 4);
    const JointTable pi = independence_product(t);
    CHECK(rho_m(pi).value <= 1e-12);  // distance ratio, never negative
  }
}

TEST_CASE("rho_m is exactly 1 on permutation-diagonal tables") {
  depmeas::SplitMix64 g(67);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t n = 2 + rep % 4;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t i = n; i-- > 1;) std::swap(perm[i], perm[g.next() % (i + 1)]);
    const std::vector<double> mass = testutil::random_positive(g, n);
    std::vector<std::vector<double>> cells(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) cells[i][perm[i]] = mass[i];
    const JointTable t = JointTable::from_probs(cells);
    CHECK(rho_m(t).value == 1.0);  // exact
  }
}

TEST_CASE("rho_m is invariant under transposition and permutation") {
  depmeas::SplitMix64 g(73);
  for (int rep = 0; rep < 15; ++rep) {
    const JointTable t = testutil::random_table(g, 4, 4);
    const double base = rho_m(t).value;
    CHECK(rho_m(transpose(t)).value == doctest::Approx(base).epsilon(1e-12));
    std::vector<std::size_t> rp = {2, 0, 3, 1}, cp = {1, 3, 0, 2};
    CHECK(rho_m(testutil::permuted(t, rp, cp)).value ==
          doctest::Approx(base).epsilon(1e-12));
  }
}

TEST_CASE("component distance matches the phi numerator on 2x2") {
  const JointTable t = fixtures::example1();
  CHECK(depmeas::phi_component_distance(t) == doctest::Approx(0.1).epsilon(1e-12));
  CHECK_THROWS_AS(depmeas::phi_component_distance(fixtures::example2()),
                  std::invalid_argument);
}
