#include "cohomcat/sparse_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace cohomcat {

void SparseMatrix::set_row(std::size_t r, std::vector<Entry> terms) {
  std::sort(terms.begin(), terms.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
  std::vector<Entry> merged;
  merged.reserve(terms.size());
  for (const Entry& e : terms) {
    if (e.first >= cols_) throw std::out_of_range("sparse matrix column out of range");
    if (!merged.empty() && merged.back().first == e.first) {
      merged.back().second += e.second;
    } else {
      merged.push_back(e);
    }
  }
  std::erase_if(merged, [](const Entry& e) { return e.second == 0; });
  rows_.at(r) = std::move(merged);
}

void SparseMatrix::place(std::size_t row_offset, std::size_t col_offset, const SparseMatrix& block,
                         std::int64_t scale) {
  if (row_offset + block.rows() > rows() || col_offset + block.cols() > cols_) {
    throw std::out_of_range("block does not fit");
  }
  for (std::size_t r = 0; r < block.rows(); ++r) {
    std::vector<Entry> terms = rows_[row_offset + r];
    for (const Entry& e : block.rows_[r])
      terms.emplace_back(static_cast<std::uint32_t>(e.first + col_offset), e.second * scale);
    set_row(row_offset + r, std::move(terms));
  }
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

std::vector<std::vector<std::int64_t>> SparseMatrix::to_dense() const {
  std::vector<std::vector<std::int64_t>> out(rows(), std::vector<std::int64_t>(cols_, 0));
  for (std::size_t r = 0; r < rows(); ++r)
    for (const Entry& e : rows_[r]) out[r][e.first] = e.second;
  return out;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<std::int64_t>>& dense) {
  const std::size_t cols = dense.empty() ? 0 : dense.front().size();
  SparseMatrix m(dense.size(), cols);
  for (std::size_t r = 0; r < dense.size(); ++r) {
    if (dense[r].size() != cols) throw std::invalid_argument("ragged matrix");
    std::vector<Entry> terms;
    for (std::size_t c = 0; c < cols; ++c)
      if (dense[r][c] != 0) terms.emplace_back(static_cast<std::uint32_t>(c), dense[r][c]);
    m.set_row(r, std::move(terms));
  }
  return m;
}

std::vector<Residue> SparseMatrix::apply(std::span<const Residue> x, const Modulus& n) const {
  if (x.size() != cols_) throw std::invalid_argument("vector length does not match column count");
  std::vector<Residue> out(rows(), 0);
  for (std::size_t r = 0; r < rows(); ++r) {
    std::int64_t acc = 0;
    for (const Entry& e : rows_[r]) {
      acc += static_cast<std::int64_t>(n.reduce(e.second)) * x[e.first];
      acc %= n.value();
    }
    out[r] = n.reduce(acc);
  }
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<std::vector<Entry>> cols(cols_);
  for (std::size_t r = 0; r < rows(); ++r)
    for (const Entry& e : rows_[r]) cols[e.first].emplace_back(static_cast<std::uint32_t>(r), e.second);
  SparseMatrix t(cols_, rows());
  for (std::size_t c = 0; c < cols_; ++c) t.rows_[c] = std::move(cols[c]);
  return t;
}

SparseMatrix SparseMatrix::permuted(std::span<const std::size_t> row_order,
                                    std::span<const std::size_t> col_order) const {
  if (row_order.size() != rows() || col_order.size() != cols_) throw std::invalid_argument("bad permutation");
  std::vector<std::uint32_t> new_col(cols_);
  for (std::size_t j = 0; j < cols_; ++j) new_col[col_order[j]] = static_cast<std::uint32_t>(j);
  SparseMatrix out(rows(), cols_);
  for (std::size_t i = 0; i < rows(); ++i) {
    std::vector<Entry> terms;
    for (const Entry& e : rows_[row_order[i]]) terms.emplace_back(new_col[e.first], e.second);
    out.set_row(i, std::move(terms));
  }
  return out;
}

}  // namespace cohomcat
