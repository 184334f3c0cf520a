#include "cohomcat/modular.hpp"

#include <string>

namespace cohomcat {

Modulus::Modulus(std::uint32_t value) : value_(value) {
  if (value < 2 || value > kMaxModulus) {
    throw std::invalid_argument("modulus must lie in [2, " + std::to_string(kMaxModulus) +
                                "], got " + std::to_string(value));
  }
}

std::vector<PrimePower> factorize(std::uint32_t n) {
  std::vector<PrimePower> out;
  for (std::uint32_t p = 2; static_cast<std::uint64_t>(p) * p <= n; ++p) {
    if (n % p != 0) continue;
    PrimePower q{p, 0, 1};
    while (n % p == 0) {
      n /= p;
      ++q.exponent;
      q.value *= p;
    }
    out.push_back(q);
  }
  if (n > 1) out.push_back({n, 1, n});
  return out;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t m) {
  std::int64_t old_r = a % m, r = m, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) {
    throw std::domain_error(std::to_string(a) + " is not invertible modulo " + std::to_string(m));
  }
  std::int64_t inv = old_s % static_cast<std::int64_t>(m);
  return static_cast<std::uint32_t>(inv < 0 ? inv + m : inv);
}

std::uint32_t valuation(std::uint32_t a, const PrimePower& q) {
  a %= q.value;
  if (a == 0) return q.exponent;
  std::uint32_t v = 0;
  while (a % q.prime == 0) {
    a /= q.prime;
    ++v;
  }
  return v;
}

std::vector<Residue> crt_embed(std::span<const Residue> component, const PrimePower& q,
                               const Modulus& n) {
  // e = (N/q) * ((N/q)^{-1} mod q) is 1 mod q and 0 mod N/q.
  const std::uint32_t cofactor = n.value() / q.value;
  const Residue idempotent =
      cofactor == 1 ? 1 : n.mul(cofactor, inverse_mod(cofactor % q.value, q.value));
  std::vector<Residue> out(component.size());
  for (std::size_t i = 0; i < component.size(); ++i) out[i] = n.mul(component[i], idempotent);
  return out;
}

}  // namespace cohomcat
