#pragma once

#include <cstddef>
#include <vector>

#include "depmeas/rng.hpp"
#include "depmeas/table.hpp"

namespace testutil {

inline std::vector<std::vector<double>> nested(const depmeas::JointTable& t) {
  std::vector<std::vector<double>> m(t.rows(), std::vector<double>(t.cols()));
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) m[i][j] = t.at(i, j);
  return m;
}

// Rows and columns rearranged by the given permutations (new index -> old
// index). The permuted table is built from the original cells verbatim, so
// exact-invariance checks see identical bit patterns.
inline depmeas::JointTable permuted(const depmeas::JointTable& t,
                                    const std::vector<std::size_t>& row_perm,
                                    const std::vector<std::size_t>& col_perm) {
  std::vector<std::vector<double>> m(t.rows(), std::vector<double>(t.cols()));
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) m[i][j] = t.at(row_perm[i], col_perm[j]);
  return depmeas::JointTable::from_probs(m);
}

// Uniform random table with near-degenerate marginals rejected.
inline depmeas::JointTable random_table(depmeas::SplitMix64& g, std::size_t rows,
                                        std::size_t cols) {
  for (;;) {
    const std::vector<double> flat = depmeas::sample_simplex(g, rows * cols);
    std::vector<std::vector<double>> m(rows, std::vector<double>(cols));
    std::vector<double> rsum(rows, 0.0), csum(cols, 0.0);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        m[i][j] = flat[i * cols + j];
        rsum[i] += m[i][j];
        csum[j] += m[i][j];
      }
    bool ok = true;
    for (double s : rsum) ok = ok && s >= 1e-6;
    for (double s : csum) ok = ok && s >= 1e-6;
    if (ok) return depmeas::JointTable::from_probs(m);
  }
}

// Random strictly positive distribution on the simplex.
inline std::vector<double> random_positive(depmeas::SplitMix64& g, std::size_t n) {
  for (;;) {
    std::vector<double> p = depmeas::sample_simplex(g, n);
    bool ok = true;
    for (double v : p) ok = ok && v >= 1e-6;
    if (ok) return p;
  }
}

}  // namespace testutil
