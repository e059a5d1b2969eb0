#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "depmeas/hellinger.hpp"
#include "depmeas/rng.hpp"

using depmeas::hellinger;
using depmeas::max_distanced;
using depmeas::MaxDistanced;
using depmeas::sample_simplex;
using depmeas::SplitMix64;
using V = std::vector<double>;

TEST_CASE("hellinger endpoints") {
  const std::vector<double> p = {0.1, 0.2, 0.3, 0.4};
  CHECK(hellinger(p, p) == 0.0);  // exact
  // Disjoint supports sit at the maximum, exactly 1.
  CHECK(hellinger(V{1.0, 0.0}, V{0.0, 1.0}) == 1.0);
  CHECK(hellinger(V{0.5, 0.5, 0.0}, V{0.0, 0.0, 1.0}) == 1.0);
}

TEST_CASE("hellinger frozen reference values") {
  // d((0.5, 0.5), (1, 0)) = sqrt(1 - sqrt(0.5)).
  CHECK(hellinger(V{0.5, 0.5}, V{1.0, 0.0}) ==
        doctest::Approx(0.5411961001461969).epsilon(1e-14));
  // Uniform over 4 states against a point mass: sqrt(1 - sqrt(1/4)).
  CHECK(hellinger(V{0.25, 0.25, 0.25, 0.25}, V{1.0, 0.0, 0.0, 0.0}) ==
        doctest::Approx(0.7071067811865476).epsilon(1e-14));
}

TEST_CASE("hellinger rejects length mismatches") {
  CHECK_THROWS_AS(hellinger(V{0.5, 0.5}, V{1.0, 0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("symmetry is exact, not approximate") {
  SplitMix64 g(101);
  for (int rep = 0; rep < 200; ++rep) {
    const std::vector<double> p = sample_simplex(g, 8);
    const std::vector<double> q = sample_simplex(g, 8);
    CHECK(hellinger(p, q) == hellinger(q, p));  // bitwise
  }
}

TEST_CASE("permuting both arguments identically leaves the distance unchanged exactly") {
  SplitMix64 g(202);
  std::vector<std::size_t> perm(9);
  for (int rep = 0; rep < 200; ++rep) {
    const std::vector<double> p = sample_simplex(g, 9);
    const std::vector<double> q = sample_simplex(g, 9);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    // Fisher-Yates off the same deterministic stream.
    for (std::size_t i = perm.size(); i-- > 1;)
      std::swap(perm[i], perm[g.next() % (i + 1)]);
    std::vector<double> pp(9), qp(9);
    for (std::size_t i = 0; i < 9; ++i) {
      pp[i] = p[perm[i]];
      qp[i] = q[perm[i]];
    }
    CHECK(hellinger(pp, qp) == hellinger(p, q));  // bitwise
  }
}

TEST_CASE("triangle inequality within 1e-12") {
  SplitMix64 g(303);
  for (int rep = 0; rep < 500; ++rep) {
    const std::vector<double> a = sample_simplex(g, 6);
    const std::vector<double> b = sample_simplex(g, 6);
    const std::vector<double> c = sample_simplex(g, 6);
    CHECK(hellinger(a, c) <= hellinger(a, b) + hellinger(b, c) + 1e-12);
  }
}

TEST_CASE("range stays within [0, 1]") {
  SplitMix64 g(404);
  for (int rep = 0; rep < 500; ++rep) {
    const std::vector<double> p = sample_simplex(g, 5);
    const std::vector<double> q = sample_simplex(g, 5);
    const double d = hellinger(p, q);
    CHECK(d >= 0.0);
    CHECK(d <= 1.0);
  }
}

TEST_CASE("max_distanced closed form and maximizer") {
  const std::vector<double> p = {0.1, 0.2, 0.3, 0.4};
  const MaxDistanced md = max_distanced(p);
  CHECK(md.index == 0);
  CHECK(md.distance == doctest::Approx(0.8269052146305295).epsilon(1e-14));
  CHECK(md.distance == doctest::Approx(std::sqrt(1.0 - std::sqrt(0.1))).epsilon(1e-15));
  CHECK(md.point_mass == std::vector<double>{1.0, 0.0, 0.0, 0.0});
  // The point mass's own distance agrees with the closed form.
  CHECK(hellinger(p, md.point_mass) == doctest::Approx(md.distance).epsilon(1e-14));
  CHECK(md.distance < 1.0);
}

TEST_CASE("max_distanced tie goes to the lowest index and the value ignores the choice") {
  const std::vector<double> p = {0.25, 0.10, 0.10, 0.55};
  const MaxDistanced md = max_distanced(p);
  CHECK(md.index == 1);
  // Placing the mass on the other tied coordinate gives the same distance.
  std::vector<double> other(p.size(), 0.0);
  other[2] = 1.0;
  CHECK(hellinger(p, other) == hellinger(p, md.point_mass));
}

TEST_CASE("max_distanced requires strict positivity") {
  CHECK_THROWS_AS(max_distanced(std::vector<double>{0.5, 0.5, 0.0}), std::domain_error);
  CHECK_THROWS_AS(max_distanced(std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("no sampled distribution beats the closed-form maximum") {
  SplitMix64 g(505);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<double> p = sample_simplex(g, 7);
    // Nudge away from zero so max_distanced's precondition holds.
    double total = 0.0;
    for (double& v : p) total += (v += 1e-6);
    for (double& v : p) v /= total;
    const MaxDistanced md = max_distanced(p);
    for (int trial = 0; trial < 500; ++trial) {
      const std::vector<double> psi = sample_simplex(g, 7);
      CHECK(hellinger(p, psi) <= md.distance + 1e-12);
    }
  }
}
