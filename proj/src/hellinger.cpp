#include "depmeas/hellinger.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace depmeas {

double hellinger(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size())
    throw std::invalid_argument("hellinger: distributions have different lengths");
  // Exact zeros go through sqrt unmodified; no epsilon flooring anywhere.
  std::vector<double> terms(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double d = std::sqrt(p[i]) - std::sqrt(q[i]);
    terms[i] = d * d;
  }
  // Summing in sorted order makes the result a function of the term multiset
  // alone, which is what gives exact permutation and argument-swap invariance.
  std::sort(terms.begin(), terms.end());
  double sum = 0.0;
  for (double t : terms) sum += t;
  return std::sqrt(0.5 * sum);
}

MaxDistanced max_distanced(std::span<const double> p) {
  if (p.empty()) throw std::invalid_argument("max_distanced: empty distribution");
  std::size_t min_index = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0)
      throw std::domain_error("max_distanced: requires strictly positive probabilities");
    if (p[i] < p[min_index]) min_index = i;  // ties keep the lowest index
  }
  MaxDistanced result;
  result.index = min_index;
  result.point_mass.assign(p.size(), 0.0);
  result.point_mass[min_index] = 1.0;
  result.distance = std::sqrt(1.0 - std::sqrt(p[min_index]));
  return result;
}

}  // namespace depmeas
