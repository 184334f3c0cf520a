#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cohomcat/modular.hpp"

namespace cohomcat {

/// Integer matrix stored by rows as sorted (column, coefficient) lists with no zero entries.
/// Differentials of the cochain complexes are assembled in this form.
class SparseMatrix {
 public:
  using Entry = std::pair<std::uint32_t, std::int64_t>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  /// Replaces row r by the merged form of the given terms.
  void set_row(std::size_t r, std::vector<Entry> terms);
  std::span<const Entry> row(std::size_t r) const { return rows_[r]; }

  /// Copies `block * scale` with its (0,0) entry landing at (row_offset, col_offset).
  void place(std::size_t row_offset, std::size_t col_offset, const SparseMatrix& block,
             std::int64_t scale = 1);

  std::size_t nonzeros() const;
  std::vector<std::vector<std::int64_t>> to_dense() const;
  static SparseMatrix from_dense(const std::vector<std::vector<std::int64_t>>& dense);

  /// Product with a residue vector, reduced mod n.
  std::vector<Residue> apply(std::span<const Residue> x, const Modulus& n) const;
  SparseMatrix transpose() const;
  /// Row and column permutation: result(i, j) = this(row_order[i], col_order[j]).
  SparseMatrix permuted(std::span<const std::size_t> row_order, std::span<const std::size_t> col_order) const;

 private:
  std::size_t cols_ = 0;
  std::vector<std::vector<Entry>> rows_;
};

}  // namespace cohomcat
