#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace depmeas {

// Plain row-major matrix with no distribution invariants attached. The
// full-dependence candidates live here: they may leave whole rows or columns
// empty, which JointTable rejects by construction.
struct DenseTable {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> cells;  // row-major, rows * cols entries

  double at(std::size_t i, std::size_t j) const { return cells[i * cols + j]; }
  double& at(std::size_t i, std::size_t j) { return cells[i * cols + j]; }

  static DenseTable zeros(std::size_t r, std::size_t c) {
    return DenseTable{r, c, std::vector<double>(r * c, 0.0)};
  }
};

struct MarginalPair {
  std::vector<double> row;  // p(X = i), strictly positive, sums to 1
  std::vector<double> col;  // p(Y = j), strictly positive, sums to 1
};

// Discrete bivariate joint probability table. After construction every entry
// is nonnegative, the entries sum to 1, and no row or column is all-zero. The
// input is renormalized once, at construction — except that an input already
// summing to 1 at machine precision (within 1e-13) is stored verbatim, so a
// normalized table survives a write/read cycle bit for bit. Instances are
// immutable.
class JointTable {
 public:
  // Accepts nonnegative counts (integers or reals) with a positive total.
  static JointTable from_counts(const std::vector<std::vector<double>>& counts,
                                std::vector<std::string> row_labels = {},
                                std::vector<std::string> col_labels = {});

  // Accepts probabilities; the sum must already be 1 within 1e-9.
  static JointTable from_probs(const std::vector<std::vector<double>>& probs,
                               std::vector<std::string> row_labels = {},
                               std::vector<std::string> col_labels = {});

  std::size_t rows() const { return table_.rows; }
  std::size_t cols() const { return table_.cols; }
  double at(std::size_t i, std::size_t j) const { return table_.at(i, j); }
  std::span<const double> flat() const { return table_.cells; }
  const DenseTable& dense() const { return table_; }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

 private:
  JointTable(DenseTable table, std::vector<std::string> row_labels,
             std::vector<std::string> col_labels)
      : table_(std::move(table)),
        row_labels_(std::move(row_labels)),
        col_labels_(std::move(col_labels)) {}

  friend JointTable transpose(const JointTable& t);
  friend JointTable independence_product(const JointTable& t);

  DenseTable table_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

// Row and column sums, accumulated in increasing index order so that
// marginals(transpose(t)) swaps the pair exactly.
MarginalPair marginals(const JointTable& t);

// The independent coupling of t's marginals: entry (i, j) = row_i * col_j.
JointTable independence_product(const JointTable& t);

// Entries mirrored across the diagonal, labels swapped; no renormalization.
JointTable transpose(const JointTable& t);

// Joint probability table for three variables, indexed (x, y, z). Only
// conditional mutual information consumes it, so the invariants are lighter:
// entries nonnegative, total 1 within 1e-9, renormalized once.
class TriTable {
 public:
  static TriTable from_probs(std::vector<double> flat, std::size_t nx,
                             std::size_t ny, std::size_t nz);

  std::size_t nx() const { return nx_; }
  std::size_t ny() const { return ny_; }
  std::size_t nz() const { return nz_; }
  double at(std::size_t x, std::size_t y, std::size_t z) const {
    return flat_[(x * ny_ + y) * nz_ + z];
  }
  std::span<const double> flat() const { return flat_; }

 private:
  TriTable(std::vector<double> flat, std::size_t nx, std::size_t ny, std::size_t nz)
      : flat_(std::move(flat)), nx_(nx), ny_(ny), nz_(nz) {}

  std::vector<double> flat_;
  std::size_t nx_ = 0, ny_ = 0, nz_ = 0;
};

}  // namespace depmeas
