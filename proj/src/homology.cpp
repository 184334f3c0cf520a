#include <limits>
#include "cohomcat/homology.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace cohomcat {

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0), data_(rows_ * cols_) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    std::size_t c = 0;
    for (long long v : row) (*this)(r, c++) = v;
    ++r;
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_sparse(const SparseMatrix& s) {
  IntMatrix m(s.rows(), s.cols());
  for (std::size_t r = 0; r < s.rows(); ++r)
    for (const auto& [c, v] : s.row(r)) m(r, c) = v;
  return m;
}

SparseMatrix IntMatrix::to_sparse() const {
  SparseMatrix s(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::vector<SparseMatrix::Entry> terms;
    for (std::size_t c = 0; c < cols_; ++c) {
      const BigInt& v = (*this)(r, c);
      if (v == 0) continue;
      if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        throw HomologyError(HomologyError::Kind::TooLarge, "matrix entry does not fit in 64 bits");
      }
      terms.emplace_back(static_cast<std::uint32_t>(c), static_cast<std::int64_t>(v));
    }
    s.set_row(r, std::move(terms));
  }
  return s;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw HomologyError(HomologyError::Kind::DimensionMismatch, "matrix product shapes");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  return out;
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw HomologyError(HomologyError::Kind::DimensionMismatch, "determinant of non-square matrix");
  // Bareiss fraction-free elimination.
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Integer Smith normal form

namespace {

using boost::multiprecision::abs;

struct IntSmith {
  IntMatrix a, left, left_inv, right;
  std::size_t rank = 0;
};

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
}
void swap_cols(IntMatrix& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, i), m(r, j));
}
// row_i += q * row_j
void add_row(IntMatrix& m, std::size_t i, std::size_t j, const BigInt& q) {
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (m(j, c) != 0) m(i, c) += q * m(j, c);
}
// col_i += q * col_j
void add_col(IntMatrix& m, std::size_t i, std::size_t j, const BigInt& q) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (m(r, j) != 0) m(r, i) += q * m(r, j);
}

IntSmith integer_smith(const IntMatrix& input) {
  IntSmith s{input, IntMatrix::identity(input.rows()), IntMatrix::identity(input.rows()),
             IntMatrix::identity(input.cols())};
  IntMatrix& a = s.a;
  const std::size_t r = a.rows(), c = a.cols();

  // Row operations keep left * input * right == a and left_inv == left^{-1}.
  auto row_swap = [&](std::size_t i, std::size_t j) {
    swap_rows(a, i, j);
    swap_rows(s.left, i, j);
    swap_cols(s.left_inv, i, j);
  };
  auto row_add = [&](std::size_t i, std::size_t j, const BigInt& q) {
    add_row(a, i, j, q);
    add_row(s.left, i, j, q);
    add_col(s.left_inv, j, i, -q);
  };
  auto row_negate = [&](std::size_t i) {
    for (std::size_t k = 0; k < c; ++k) a(i, k) = -a(i, k);
    for (std::size_t k = 0; k < r; ++k) s.left(i, k) = -s.left(i, k);
    for (std::size_t k = 0; k < r; ++k) s.left_inv(k, i) = -s.left_inv(k, i);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    swap_cols(a, i, j);
    swap_cols(s.right, i, j);
  };
  auto col_add = [&](std::size_t i, std::size_t j, const BigInt& q) {
    add_col(a, i, j, q);
    add_col(s.right, i, j, q);
  };

  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    // Smallest nonzero absolute value in the trailing block becomes the pivot.
    std::size_t pi = r, pj = c;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j)
        if (a(i, j) != 0 && (pi == r || abs(a(i, j)) < abs(a(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == r) break;
    row_swap(t, pi);
    col_swap(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (a(i, t) == 0) continue;
        BigInt q = a(i, t) / a(t, t);
        if (q != 0) row_add(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (a(t, j) == 0) continue;
        BigInt q = a(t, j) / a(t, t);
        if (q != 0) col_add(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot exists in row or column t; promote it.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < r; ++i)
          if (a(i, t) != 0 && abs(a(i, t)) < abs(a(bi, bj))) {
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < c; ++j)
          if (a(t, j) != 0 && abs(a(t, j)) < abs(a(bi, bj))) {
            bi = t;
            bj = j;
          }
        row_swap(t, bi);
        col_swap(t, bj);
        continue;
      }
      // Enforce divisibility of the remaining block by the pivot.
      std::size_t bad = r;
      for (std::size_t i = t + 1; i < r && bad == r; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == r) break;
      row_add(t, bad, 1);
    }
    if (a(t, t) < 0) row_negate(t);
    s.rank = t + 1;
  }
  return s;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  IntSmith s = integer_smith(m);
  return {std::move(s.a), std::move(s.left), std::move(s.right)};
}

std::vector<BigInt> invariant_factors(const IntMatrix& diagonal) {
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < std::min(diagonal.rows(), diagonal.cols()); ++i)
    if (diagonal(i, i) > 1) out.push_back(diagonal(i, i));
  return out;
}

BigInt CohomologyResult::order() const {
  BigInt n = 1;
  for (auto d : invariant_factors) n *= d;
  return n;
}

// ---------------------------------------------------------------------------
// Route 1: integer Smith forms of [d | N I]

CohomologyResult cohomology_integer_snf(const IntMatrix& d_in, const IntMatrix& d_out, const Modulus& modulus) {
  if (d_in.rows() != d_out.cols()) {
    throw HomologyError(HomologyError::Kind::DimensionMismatch, "d_in rows must equal d_out columns");
  }
  require_complex(d_in.to_sparse(), d_out.to_sparse(), modulus);
  const std::size_t c = d_out.cols(), r = d_out.rows(), s = d_in.cols();
  const BigInt big_n = modulus.value();

  // x in Z^c with d_out x in N Z^r: kernel of [d_out | N I_r], projected onto the first c coordinates.
  IntMatrix aug(r, c + r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) aug(i, j) = d_out(i, j);
    aug(i, c + i) = big_n;
  }
  IntSmith sa = integer_smith(aug);
  IntMatrix kernel(c, c);
  for (std::size_t k = 0; k < c; ++k)
    for (std::size_t i = 0; i < c; ++i) kernel(i, k) = sa.right(i, sa.rank + k);

  // Denominator lattice im(d_in) + N Z^c, rewritten in the kernel basis.
  IntMatrix denom(c, s + c);
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = 0; j < s; ++j) denom(i, j) = d_in(i, j);
    denom(i, s + i) = big_n;
  }
  IntSmith sk = integer_smith(kernel);
  IntMatrix lb = sk.left * denom;
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < lb.cols(); ++j) {
      if (lb(i, j) % sk.a(i, i) != 0) {
        throw HomologyError(HomologyError::Kind::NotAComplex, "image not contained in kernel");
      }
      lb(i, j) /= sk.a(i, i);
    }
  IntMatrix coords = sk.right * lb;

  IntSmith sq = integer_smith(coords);
  CohomologyResult result;
  result.modulus = modulus.value();
  for (std::size_t i = 0; i < c; ++i) {
    const BigInt d = i < sq.rank ? sq.a(i, i) : BigInt(0);
    if (d == 1) continue;
    if (d == 0) throw HomologyError(HomologyError::Kind::NotAComplex, "quotient is not N-torsion");
    result.invariant_factors.push_back(static_cast<std::uint64_t>(d));
    std::vector<Residue> gen(c);
    for (std::size_t row = 0; row < c; ++row) {
      BigInt acc = 0;
      for (std::size_t k = 0; k < c; ++k) acc += kernel(row, k) * sq.left_inv(k, i);
      acc %= big_n;
      if (acc < 0) acc += big_n;
      gen[row] = static_cast<Residue>(acc);
    }
    result.generators.push_back(std::move(gen));
  }
  return result;
}

// ---------------------------------------------------------------------------
// Route 2: prime-power decomposition

namespace {

using SparseRow = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

/// Row echelon form over F_p built by inserting sparse rows one at a time.
class FieldEchelon {
 public:
  FieldEchelon(std::uint32_t p, std::size_t cols) : p_(p), cols_(cols), pivot_of_(cols, npos) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  /// Reduces and inserts; returns the leading column of the new pivot row, or npos if the
  /// row was dependent.
  std::size_t insert(SparseRow row) {
    reduce(row);
    if (row.empty()) return npos;
    const std::uint32_t lead = row.front().first;
    const std::uint64_t inv = inverse_mod(row.front().second, p_);
    for (auto& e : row) e.second = static_cast<std::uint32_t>(e.second * inv % p_);
    pivot_of_[lead] = rows_.size();
    rows_.push_back(std::move(row));
    return lead;
  }

  void reduce(SparseRow& row) const {
    SparseRow scratch;
    std::size_t start = 0;
    while (start < row.size()) {
      const auto [lead, coeff] = row[start];
      const std::size_t pr = pivot_of_[lead];
      if (pr == npos) {
        ++start;
        continue;
      }
      // row -= coeff * pivot, merging the two sorted lists from position `start`.
      const SparseRow& piv = rows_[pr];
      const std::uint64_t f = p_ - coeff;
      scratch.clear();
      scratch.insert(scratch.end(), row.begin(), row.begin() + static_cast<std::ptrdiff_t>(start));
      std::size_t i = start, j = 0;
      while (i < row.size() || j < piv.size()) {
        if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
          scratch.push_back(row[i++]);
        } else if (i == row.size() || piv[j].first < row[i].first) {
          scratch.emplace_back(piv[j].first, static_cast<std::uint32_t>(f * piv[j].second % p_));
          ++j;
        } else {
          const auto v = static_cast<std::uint32_t>((row[i].second + f * piv[j].second) % p_);
          if (v != 0) scratch.emplace_back(row[i].first, v);
          ++i;
          ++j;
        }
      }
      row.swap(scratch);
    }
    // Leaves only non-pivot columns; the echelon is not reduced, so restart-free scanning
    // from `start` is valid because pivot rows only add columns beyond their lead.
  }

  /// Dense reduction; returns true when x reduces to zero.
  bool reduce_dense(std::vector<std::uint32_t>& x) const {
    bool zero = true;
    for (std::size_t col = 0; col < cols_; ++col) {
      if (x[col] == 0) continue;
      const std::size_t pr = pivot_of_[col];
      if (pr == npos) {
        zero = false;
        continue;
      }
      const std::uint64_t f = p_ - x[col];
      for (const auto& [j, v] : rows_[pr]) x[j] = static_cast<std::uint32_t>((x[j] + f * v) % p_);
    }
    return zero;
  }

  /// Basis of the null space of the inserted rows.
  std::vector<std::vector<std::uint32_t>> null_space() const {
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
      if (pivot_of_[c] == npos) free_cols.push_back(c);
    const std::size_t k = free_cols.size();
    // X[col] holds the values of column `col` across all k kernel vectors.
    std::vector<std::vector<std::uint32_t>> x(cols_);
    for (std::size_t f = 0; f < k; ++f) {
      x[free_cols[f]].assign(k, 0);
      x[free_cols[f]][f] = 1;
    }
    for (std::size_t c = cols_; c-- > 0;) {
      const std::size_t pr = pivot_of_[c];
      if (pr == npos) continue;
      std::vector<std::uint64_t> acc(k, 0);
      for (const auto& [j, v] : rows_[pr]) {
        if (j == c) continue;
        const auto& xj = x[j];
        for (std::size_t f = 0; f < k; ++f) acc[f] += static_cast<std::uint64_t>(v) * xj[f] % p_;
      }
      x[c].resize(k);
      for (std::size_t f = 0; f < k; ++f) x[c][f] = static_cast<std::uint32_t>((p_ - acc[f] % p_) % p_);
    }
    std::vector<std::vector<std::uint32_t>> basis(k, std::vector<std::uint32_t>(cols_));
    for (std::size_t c = 0; c < cols_; ++c)
      for (std::size_t f = 0; f < k; ++f) basis[f][c] = x[c][f];
    return basis;
  }

  /// Solution of the system whose last column is the right-hand side; call only when
  /// consistent.
  std::vector<std::uint32_t> back_substitute(std::size_t unknowns) const {
    std::vector<std::uint32_t> x(unknowns, 0);
    for (std::size_t c = unknowns; c-- > 0;) {
      const std::size_t pr = pivot_of_[c];
      if (pr == npos) continue;
      std::uint64_t acc = 0;
      for (const auto& [j, v] : rows_[pr]) {
        if (j == c) continue;
        if (j == unknowns) {
          acc += p_ - v;  // right-hand side moves across the equals sign
        } else {
          acc += static_cast<std::uint64_t>(v) * x[j] % p_;
        }
      }
      x[c] = static_cast<std::uint32_t>((p_ - acc % p_) % p_);
    }
    return x;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::uint32_t p_;
  std::size_t cols_;
  std::vector<std::size_t> pivot_of_;
  std::vector<SparseRow> rows_;
};

SparseRow sparse_row_mod(std::span<const SparseMatrix::Entry> row, std::uint32_t q) {
  SparseRow out;
  out.reserve(row.size());
  const Modulus m(std::max<std::uint32_t>(q, 2));
  for (const auto& [c, v] : row) {
    const Residue r = m.reduce(v);
    if (r != 0) out.emplace_back(c, r);
  }
  return out;
}

FieldEchelon echelon_of_rows(const SparseMatrix& d, std::uint32_t p) {
  FieldEchelon e(p, d.cols());
  for (std::size_t r = 0; r < d.rows(); ++r) e.insert(sparse_row_mod(d.row(r), p));
  return e;
}

/// One primary component: pairs (exponent e, generator mod p^k) with class order p^e.
struct Primary {
  PrimePower q;
  std::vector<std::pair<std::uint32_t, std::vector<Residue>>> parts;
};

Primary field_cohomology(const SparseMatrix& d_in_t, const SparseMatrix& d_out, const PrimePower& q) {
  const std::uint32_t p = q.prime;
  Primary out{q, {}};
  FieldEchelon ker_rows = echelon_of_rows(d_out, p);
  auto kernel = ker_rows.null_space();
  // Image vectors are the columns of d_in, i.e. the rows of its transpose.
  FieldEchelon span = echelon_of_rows(d_in_t, p);
  for (auto& v : kernel) {
    std::vector<std::uint32_t> w = v;
    if (span.reduce_dense(w)) continue;
    SparseRow row;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] != 0) row.emplace_back(static_cast<std::uint32_t>(i), w[i]);
    span.insert(std::move(row));
    out.parts.emplace_back(1, std::move(v));
  }
  return out;
}

/// Dense Smith reduction over the local ring Z/p^k.
class LocalSmith {
 public:
  LocalSmith(const PrimePower& q, std::vector<std::vector<std::uint32_t>> a, std::size_t cols, bool track_right,
             std::vector<std::vector<std::uint32_t>> rhs = {}, bool track_left_inverse = false)
      : q_(q), a_(std::move(a)), rhs_(std::move(rhs)) {
    rows_ = a_.size();
    cols_ = cols;
    if (track_right) {
      v_ = identity(cols_);
      vinv_ = identity(cols_);
    }
    if (track_left_inverse) uinv_ = identity(rows_);
    run();
  }

  std::size_t rank() const { return valuations_.size(); }
  /// Valuation of the i-th diagonal entry (i < rank).
  std::uint32_t valuation_at(std::size_t i) const { return valuations_[i]; }
  const std::vector<std::vector<std::uint32_t>>& right() const { return v_; }
  const std::vector<std::vector<std::uint32_t>>& right_inverse() const { return vinv_; }
  const std::vector<std::vector<std::uint32_t>>& left_inverse() const { return uinv_; }
  const std::vector<std::vector<std::uint32_t>>& rhs() const { return rhs_; }

 private:
  static std::vector<std::vector<std::uint32_t>> identity(std::size_t n) {
    std::vector<std::vector<std::uint32_t>> m(n, std::vector<std::uint32_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
  }

  std::uint32_t mulq(std::uint64_t a, std::uint64_t b) const { return static_cast<std::uint32_t>(a * b % q_.value); }
  std::uint32_t subq(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + q_.value - b; }

  void run() {
    const std::uint32_t mod = q_.value;
    for (std::size_t t = 0; t < std::min(rows_, cols_); ++t) {
      std::size_t pi = rows_, pj = cols_;
      std::uint32_t best = q_.exponent;
      for (std::size_t i = t; i < rows_ && best > 0; ++i)
        for (std::size_t j = t; j < cols_; ++j) {
          if (a_[i][j] == 0) continue;
          const std::uint32_t v = valuation(a_[i][j], q_);
          if (v < best) {
            best = v;
            pi = i;
            pj = j;
            if (v == 0) break;
          }
        }
      if (pi == rows_) break;

      if (pi != t) {
        std::swap(a_[t], a_[pi]);
        for (auto& col : rhs_) std::swap(col[t], col[pi]);
        for (auto& row : uinv_) std::swap(row[t], row[pi]);
      }
      if (pj != t) {
        for (auto& row : a_) std::swap(row[t], row[pj]);
        for (auto& row : v_) std::swap(row[t], row[pj]);
        if (!vinv_.empty()) std::swap(vinv_[t], vinv_[pj]);
      }

      // Scale row t so the pivot becomes exactly p^best.
      std::uint32_t pv = 1;
      for (std::uint32_t k = 0; k < best; ++k) pv *= q_.prime;
      const std::uint32_t unit = a_[t][t] / pv;
      const std::uint32_t unit_inv = inverse_mod(unit % mod, mod);
      if (unit != 1) {
        for (auto& x : a_[t]) x = mulq(x, unit_inv);
        for (auto& col : rhs_) col[t] = mulq(col[t], unit_inv);
        for (auto& row : uinv_) row[t] = mulq(row[t], unit);
      }

      for (std::size_t i = t + 1; i < rows_; ++i) {
        if (a_[i][t] == 0) continue;
        const std::uint32_t f = a_[i][t] / pv;  // exact: valuation(a[i][t]) >= best
        auto& ri = a_[i];
        const auto& rt = a_[t];
        for (std::size_t j = t; j < cols_; ++j)
          if (rt[j] != 0) ri[j] = subq(ri[j], mulq(f, rt[j]));
        for (auto& col : rhs_) col[i] = subq(col[i], mulq(f, col[t]));
        for (auto& row : uinv_) row[t] = static_cast<std::uint32_t>((row[t] + static_cast<std::uint64_t>(f) * row[i]) % mod);
      }
      for (std::size_t j = t + 1; j < cols_; ++j) {
        if (a_[t][j] == 0) continue;
        const std::uint32_t f = a_[t][j] / pv;
        a_[t][j] = 0;  // rows below t are already zero in column t
        for (auto& row : v_) row[j] = subq(row[j], mulq(f, row[t]));
        if (!vinv_.empty()) {
          auto& rt = vinv_[t];
          const auto& rj = vinv_[j];
          for (std::size_t k = 0; k < cols_; ++k)
            if (rj[k] != 0) rt[k] = static_cast<std::uint32_t>((rt[k] + static_cast<std::uint64_t>(f) * rj[k]) % mod);
        }
      }
      valuations_.push_back(best);
    }
  }

  PrimePower q_;
  std::vector<std::vector<std::uint32_t>> a_;
  std::vector<std::vector<std::uint32_t>> rhs_;
  std::vector<std::vector<std::uint32_t>> v_, vinv_, uinv_;
  std::vector<std::uint32_t> valuations_;
  std::size_t rows_ = 0, cols_ = 0;
};

constexpr std::size_t kDenseLimit = 60'000'000;

std::vector<std::vector<std::uint32_t>> dense_mod(const SparseMatrix& m, std::uint32_t q) {
  if (m.rows() * m.cols() > kDenseLimit) {
    throw HomologyError(HomologyError::Kind::TooLarge,
                        "dense reduction over a prime power modulus limited to " + std::to_string(kDenseLimit) +
                            " entries; matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  const Modulus mod(std::max<std::uint32_t>(q, 2));
  std::vector<std::vector<std::uint32_t>> d(m.rows(), std::vector<std::uint32_t>(m.cols(), 0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) d[r][c] = mod.reduce(v);
  return d;
}

std::uint32_t ipow(std::uint32_t p, std::uint32_t e) {
  std::uint32_t r = 1;
  while (e--) r *= p;
  return r;
}

/// Kernel coordinates of d_out after local Smith reduction: index into the y-coordinates
/// and the order exponent of the cyclic summand.
struct KernelCoordinate {
  std::size_t index;
  std::uint32_t exponent;
};

std::vector<KernelCoordinate> kernel_coordinates(const LocalSmith& s, std::size_t cols, const PrimePower& q) {
  std::vector<KernelCoordinate> out;
  for (std::size_t i = 0; i < cols; ++i) {
    const std::uint32_t v = i < s.rank() ? s.valuation_at(i) : q.exponent;
    if (v > 0) out.push_back({i, v});
  }
  return out;
}

Primary local_cohomology(const SparseMatrix& d_in, const SparseMatrix& d_out, const PrimePower& q) {
  const std::uint32_t mod = q.value;
  const std::size_t c = d_out.cols(), s = d_in.cols();
  LocalSmith sm(q, dense_mod(d_out, mod), c, true);
  const auto coords = kernel_coordinates(sm, c, q);

  // y = V^{-1} d_in, then t_i = y_i / p^{k - v_i} on kernel coordinates.
  const auto din = dense_mod(d_in, mod);
  const std::size_t kd = coords.size();
  std::vector<std::vector<std::uint32_t>> quotient(kd, std::vector<std::uint32_t>(s + kd, 0));
  for (std::size_t a = 0; a < kd; ++a) {
    const auto& vrow = sm.right_inverse()[coords[a].index];
    const std::uint32_t scale = ipow(q.prime, q.exponent - coords[a].exponent);
    for (std::size_t j = 0; j < s; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < c; ++k)
        if (vrow[k] != 0 && din[k][j] != 0) acc = (acc + static_cast<std::uint64_t>(vrow[k]) * din[k][j]) % mod;
      if (acc % scale != 0) throw HomologyError(HomologyError::Kind::NotAComplex, "image not contained in kernel");
      quotient[a][j] = static_cast<std::uint32_t>(acc / scale);
    }
    quotient[a][s + a] = ipow(q.prime, coords[a].exponent) % mod;
  }

  Primary out{q, {}};
  if (kd == 0) return out;
  LocalSmith qs(q, std::move(quotient), s + kd, false, {}, true);
  for (std::size_t i = 0; i < kd; ++i) {
    const std::uint32_t w = i < qs.rank() ? qs.valuation_at(i) : q.exponent;
    if (w == 0) continue;
    std::vector<std::uint32_t> y(c, 0);
    for (std::size_t a = 0; a < kd; ++a) {
      const std::uint32_t scale = ipow(q.prime, q.exponent - coords[a].exponent);
      y[coords[a].index] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(qs.left_inverse()[a][i]) * scale % mod);
    }
    std::vector<Residue> x(c, 0);
    for (std::size_t r = 0; r < c; ++r) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < c; ++k)
        if (y[k] != 0) acc = (acc + static_cast<std::uint64_t>(sm.right()[r][k]) * y[k]) % mod;
      x[r] = static_cast<Residue>(acc);
    }
    out.parts.emplace_back(w, std::move(x));
  }
  return out;
}

CohomologyResult combine(const Modulus& modulus, std::size_t dim, std::vector<Primary> primaries) {
  // Sort each primary part by decreasing exponent, then zip across primes: the j-th largest
  // factors multiply into the j-th largest invariant factor.
  std::size_t width = 0;
  for (auto& pr : primaries) {
    std::stable_sort(pr.parts.begin(), pr.parts.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    width = std::max(width, pr.parts.size());
  }
  CohomologyResult result;
  result.modulus = modulus.value();
  for (std::size_t j = 0; j < width; ++j) {
    std::uint64_t factor = 1;
    std::vector<Residue> gen(dim, 0);
    for (const auto& pr : primaries) {
      if (j >= pr.parts.size()) continue;
      factor *= ipow(pr.q.prime, pr.parts[j].first);
      const auto lifted = crt_embed(pr.parts[j].second, pr.q, modulus);
      for (std::size_t i = 0; i < dim; ++i) gen[i] = modulus.add(gen[i], lifted[i]);
    }
    result.invariant_factors.push_back(factor);
    result.generators.push_back(std::move(gen));
  }
  std::reverse(result.invariant_factors.begin(), result.invariant_factors.end());
  std::reverse(result.generators.begin(), result.generators.end());
  return result;
}

}  // namespace

void require_complex(const SparseMatrix& d_in, const SparseMatrix& d_out, const Modulus& modulus) {
  if (d_in.rows() != d_out.cols()) {
    throw HomologyError(HomologyError::Kind::DimensionMismatch,
                        "d_in has " + std::to_string(d_in.rows()) + " rows but d_out has " +
                            std::to_string(d_out.cols()) + " columns");
  }
  const SparseMatrix cols = d_in.transpose();
  const SparseMatrix out_t = d_out.transpose();
  std::vector<std::int64_t> acc(d_out.rows(), 0);
  for (std::size_t j = 0; j < cols.rows(); ++j) {
    std::fill(acc.begin(), acc.end(), 0);
    for (const auto& [k, v] : cols.row(j)) {
      const std::int64_t vk = modulus.reduce(v);
      for (const auto& [i, w] : out_t.row(k)) acc[i] = (acc[i] + vk * modulus.reduce(w)) % modulus.value();
    }
    for (std::size_t i = 0; i < acc.size(); ++i) {
      if (acc[i] % modulus.value() != 0) {
        throw HomologyError(HomologyError::Kind::NotAComplex,
                            "d_out * d_in is nonzero mod " + std::to_string(modulus.value()) + " in column " +
                                std::to_string(j) + " (row " + std::to_string(i) + ")");
      }
    }
  }
}

CohomologyResult cohomology(const SparseMatrix& d_in, const SparseMatrix& d_out, const Modulus& modulus) {
  require_complex(d_in, d_out, modulus);
  std::vector<Primary> primaries;
  const SparseMatrix d_in_t = d_in.transpose();
  for (const PrimePower& q : factorize(modulus.value())) {
    primaries.push_back(q.exponent == 1 ? field_cohomology(d_in_t, d_out, q) : local_cohomology(d_in, d_out, q));
  }
  return combine(modulus, d_out.cols(), std::move(primaries));
}

CohomologyResult cohomology(const IntMatrix& d_in, const IntMatrix& d_out, const Modulus& modulus) {
  auto reduce = [&](const IntMatrix& m) {
    IntMatrix r(m.rows(), m.cols());
    const BigInt n = modulus.value();
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        BigInt v = m(i, j) % n;
        if (v < 0) v += n;
        r(i, j) = v;
      }
    return r.to_sparse();
  };
  return cohomology(reduce(d_in), reduce(d_out), modulus);
}

std::optional<std::vector<Residue>> in_image(const SparseMatrix& d, std::span<const Residue> z,
                                             const Modulus& modulus) {
  if (z.size() != d.rows()) {
    throw HomologyError(HomologyError::Kind::DimensionMismatch,
                        "right-hand side has length " + std::to_string(z.size()) + ", matrix has " +
                            std::to_string(d.rows()) + " rows");
  }
  const std::size_t c = d.cols();
  std::vector<Residue> x(c, 0);
  for (const PrimePower& q : factorize(modulus.value())) {
    std::vector<Residue> part(c, 0);
    if (q.exponent == 1) {
      FieldEchelon e(q.prime, c + 1);
      for (std::size_t r = 0; r < d.rows(); ++r) {
        SparseRow row = sparse_row_mod(d.row(r), q.prime);
        if (z[r] % q.prime != 0) row.emplace_back(static_cast<std::uint32_t>(c), z[r] % q.prime);
        if (e.insert(std::move(row)) == c) return std::nullopt;
      }
      part = e.back_substitute(c);
    } else {
      std::vector<std::uint32_t> rhs(z.size());
      for (std::size_t i = 0; i < z.size(); ++i) rhs[i] = z[i] % q.value;
      LocalSmith sm(q, dense_mod(d, q.value), d.cols(), true, {std::move(rhs)});
      const auto& y = sm.rhs()[0];
      std::vector<std::uint32_t> sol(c, 0);
      for (std::size_t i = 0; i < y.size(); ++i) {
        if (i < sm.rank()) {
          const std::uint32_t v = sm.valuation_at(i);
          if (valuation(y[i], q) < v) return std::nullopt;
          sol[i] = y[i] / ipow(q.prime, v);
        } else if (y[i] != 0) {
          return std::nullopt;
        }
      }
      for (std::size_t r = 0; r < c; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < c; ++k)
          if (sol[k] != 0) acc = (acc + static_cast<std::uint64_t>(sm.right()[r][k]) * sol[k]) % q.value;
        part[r] = static_cast<Residue>(acc);
      }
    }
    const auto lifted = crt_embed(part, q, modulus);
    for (std::size_t i = 0; i < c; ++i) x[i] = modulus.add(x[i], lifted[i]);
  }
  return x;
}

std::vector<std::vector<Residue>> kernel_generators(const SparseMatrix& d, const Modulus& modulus) {
  std::vector<std::vector<Residue>> out;
  const std::size_t c = d.cols();
  for (const PrimePower& q : factorize(modulus.value())) {
    if (q.exponent == 1) {
      for (auto& v : echelon_of_rows(d, q.prime).null_space()) out.push_back(crt_embed(v, q, modulus));
      continue;
    }
    LocalSmith sm(q, dense_mod(d, q.value), d.cols(), true);
    for (const auto& kc : kernel_coordinates(sm, c, q)) {
      const std::uint32_t scale = ipow(q.prime, q.exponent - kc.exponent);
      std::vector<Residue> v(c);
      for (std::size_t r = 0; r < c; ++r)
        v[r] = static_cast<Residue>(static_cast<std::uint64_t>(sm.right()[r][kc.index]) * scale % q.value);
      out.push_back(crt_embed(v, q, modulus));
    }
  }
  return out;
}

}  // namespace cohomcat
