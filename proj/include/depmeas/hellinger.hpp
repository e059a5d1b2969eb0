#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace depmeas {

// Hellinger distance between two discrete distributions over the same states:
//   {1/2 * sum_i (sqrt(p_i) - sqrt(q_i))^2}^{1/2}
// The squared terms are accumulated in sorted order, so the result depends
// only on the multiset of coordinate pairs: permuting both arguments by the
// same permutation, or swapping p and q, reproduces the identical double.
// Range is [0, 1]; 0 iff p == q, 1 iff the supports are disjoint.
double hellinger(std::span<const double> p, std::span<const double> q);

// The distribution farthest from p in Hellinger distance: the point mass on
// p's smallest coordinate, at distance sqrt(1 - sqrt(min_i p_i)). Requires
// every coordinate of p to be strictly positive; ties resolve to the lowest
// index (the distance does not depend on the choice).
struct MaxDistanced {
  std::vector<double> point_mass;  // simplex vertex: 1 at `index`, 0 elsewhere
  std::size_t index = 0;
  double distance = 0.0;  // always < 1 for strictly positive p
};

MaxDistanced max_distanced(std::span<const double> p);

}  // namespace depmeas
