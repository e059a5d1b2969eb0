#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace depmeas {

// Deterministic 64-bit generator (splitmix64). Hand-rolled because the
// standard-library distributions are implementation-defined, and the oracle
// sweeps promise byte-identical provenance for a given seed on any platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Standard exponential via inversion; log1p keeps small draws accurate.
  double exponential() { return -std::log1p(-uniform()); }

 private:
  std::uint64_t state_;
};

// Independent stream for one trial. Trials seeded this way can run in any
// order — or in parallel — and still consume exactly the same draws, which is
// what makes the serial and parallel sweep paths bit-identical.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 boot(seed);
  SplitMix64 s(boot.next() + 0x9e3779b97f4a7c15ull * index);
  s.next();
  return s;
}

// Uniform draw from the probability simplex (symmetric Dirichlet with unit
// concentration): normalized exponentials.
inline std::vector<double> sample_simplex(SplitMix64& g, std::size_t n) {
  std::vector<double> v(n);
  double total = 0.0;
  for (auto& x : v) {
    x = g.exponential();
    total += x;
  }
  for (auto& x : v) x /= total;
  return v;
}

}  // namespace depmeas
