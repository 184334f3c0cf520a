#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cohomcat/modular.hpp"
#include "cohomcat/sparse_matrix.hpp"

namespace cohomcat {

using BigInt = boost::multiprecision::cpp_int;

/// Dense matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_sparse(const SparseMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  SparseMatrix to_sparse() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

BigInt determinant(const IntMatrix& m);

/// left * input * right == diagonal, with left and right unimodular and the diagonal
/// entries non-negative and forming a divisibility chain.
struct SmithForm {
  IntMatrix diagonal;
  IntMatrix left;
  IntMatrix right;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Invariant factors (entries > 1) of an integer Smith diagonal.
std::vector<BigInt> invariant_factors(const IntMatrix& diagonal);

/// A finite Z/N-module ker(d_out)/im(d_in) presented by its invariant factors.
struct CohomologyResult {
  std::uint32_t modulus = 0;
  /// d_1 | d_2 | ..., every d_i >= 2.
  std::vector<std::uint64_t> invariant_factors;
  /// Always 0 for Z/N coefficients.
  std::size_t free_rank = 0;
  /// generators[i] is a cocycle whose class has order invariant_factors[i].
  std::vector<std::vector<Residue>> generators;

  /// Number of classes, the product of the invariant factors.
  BigInt order() const;
};

class HomologyError : public std::runtime_error {
 public:
  enum class Kind { NotAComplex, DimensionMismatch, TooLarge };
  HomologyError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// ker(d_out mod N) / im(d_in mod N). Splits N into prime powers; sparse elimination over
/// prime fields, dense local Smith reduction over Z/p^k for k > 1.
CohomologyResult cohomology(const SparseMatrix& d_in, const SparseMatrix& d_out, const Modulus& modulus);
CohomologyResult cohomology(const IntMatrix& d_in, const IntMatrix& d_out, const Modulus& modulus);

/// Same quotient computed through integer Smith forms of [d | N*I]. Slow; intended for
/// small complexes and as an independent cross-check of cohomology().
CohomologyResult cohomology_integer_snf(const IntMatrix& d_in, const IntMatrix& d_out, const Modulus& modulus);

/// Some x with d x == z (mod N), or nullopt when z is not in the image.
std::optional<std::vector<Residue>> in_image(const SparseMatrix& d, std::span<const Residue> z,
                                             const Modulus& modulus);

/// Generators of ker(d mod N) as a Z/N-module.
std::vector<std::vector<Residue>> kernel_generators(const SparseMatrix& d, const Modulus& modulus);

/// Throws NotAComplex (naming a column of d_in) unless d_out * d_in == 0 mod N.
void require_complex(const SparseMatrix& d_in, const SparseMatrix& d_out, const Modulus& modulus);

}  // namespace cohomcat
