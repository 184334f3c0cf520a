#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace cohomcat {

/// Residue of Z/N, always kept in [0, N).
using Residue = std::uint32_t;

/// Largest modulus accepted anywhere in the library. Products of two residues
/// must fit in 64 bits with room for accumulation.
inline constexpr std::uint32_t kMaxModulus = 1u << 20;

/// Modulus N >= 2 of the coefficient group mu_N, written additively as Z/N.
class Modulus {
 public:
  explicit Modulus(std::uint32_t value);

  std::uint32_t value() const { return value_; }

  Residue reduce(std::int64_t x) const {
    std::int64_t r = x % static_cast<std::int64_t>(value_);
    return static_cast<Residue>(r < 0 ? r + value_ : r);
  }
  Residue add(Residue a, Residue b) const {
    std::uint32_t s = a + b;
    return s >= value_ ? s - value_ : s;
  }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + value_ - b; }
  Residue neg(Residue a) const { return a == 0 ? 0 : value_ - a; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>((static_cast<std::uint64_t>(a) * b) % value_);
  }

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  std::uint32_t value_;
};

struct PrimePower {
  std::uint32_t prime;
  std::uint32_t exponent;
  std::uint32_t value;  // prime^exponent
};

/// Prime-power factorization of n > 1 in increasing order of primes.
std::vector<PrimePower> factorize(std::uint32_t n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// Inverse of a modulo m; throws std::domain_error if gcd(a, m) != 1.
std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t m);

/// p-adic valuation of a nonzero residue a modulo p^k (returns k for a == 0).
std::uint32_t valuation(std::uint32_t a, const PrimePower& q);

/// Lift of a vector given modulo q.value to Z/N, congruent to 0 modulo every
/// other prime-power factor of N.
std::vector<Residue> crt_embed(std::span<const Residue> component, const PrimePower& q,
                               const Modulus& n);

}  // namespace cohomcat
