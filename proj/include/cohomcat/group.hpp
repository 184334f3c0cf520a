#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace cohomcat {

/// Dense index of a group element, 0 .. order-1.
using Element = std::uint32_t;

/// Image list of a permutation of {0, .., degree-1}: p[i] is the image of i.
using Permutation = std::vector<std::uint32_t>;

enum class GroupErrorKind {
  NotSquare,
  NotClosed,
  NotAssociative,
  NoIdentity,
  NoInverse,
  NotAPermutation,
  ClosureTooLarge,
  InvalidParity,
};

const char* to_string(GroupErrorKind kind);

class GroupError : public std::runtime_error {
 public:
  GroupError(GroupErrorKind kind, std::vector<std::size_t> indices, const std::string& detail);

  GroupErrorKind kind() const { return kind_; }
  /// Element (or generator / row) indices witnessing the violation.
  const std::vector<std::size_t>& indices() const { return indices_; }

 private:
  GroupErrorKind kind_;
  std::vector<std::size_t> indices_;
};

inline constexpr std::size_t kDefaultClosureCap = 1024;

/// A finite group given by its complete multiplication table. Immutable once built.
class FiniteGroup {
 public:
  /// Validates a Cayley table (table[a][b] = a*b). The identity is located, not assumed.
  static FiniteGroup from_cayley(const std::vector<std::vector<Element>>& table,
                                 std::vector<std::string> names = {});

  /// Closure of the generators under composition, (p*q)(i) = p(q(i)).
  /// Element 0 is the identity permutation; the rest follow breadth-first discovery.
  static FiniteGroup from_permutations(std::size_t degree, const std::vector<Permutation>& generators,
                                       std::size_t cap = kDefaultClosureCap);

  std::size_t order() const { return order_; }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inverse(Element a) const { return inverses_[a]; }
  /// a * b * a^-1
  Element conjugate(Element a, Element b) const { return mul(mul(a, b), inverses_[a]); }
  bool is_abelian() const;

  const std::string& name(Element a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  std::vector<std::vector<Element>> table() const;
  /// Underlying permutations when built by from_permutations, empty otherwise.
  const std::vector<Permutation>& permutations() const { return permutations_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.identity_ == b.identity_ && a.table_ == b.table_;
  }

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  Element identity_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverses_;
  std::vector<std::string> names_;
  std::vector<Permutation> permutations_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

Element conjugate(const FiniteGroup& group, Element a, Element b);

/// Cyclic group of order n, element k being the k-th power of the generator.
FiniteGroup cyclic_group(std::size_t n);
/// S3 acting on {0,1,2}, generated by (0 1) and (0 1 2).
FiniteGroup symmetric_group_3();
/// G x H realized on |G| + |H| points through the two regular representations.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
/// Shorthand names c1..c8, s3, c2xc2 (case-insensitive).
FiniteGroup builtin_group(const std::string& name);

/// Cycle notation, "()" for the identity.
std::string cycle_notation(const Permutation& p);

/// A homomorphism G -> C2, stored as one parity bit per element.
class ParityMap {
 public:
  /// Rejects assignments that are not homomorphisms (InvalidParity names the failing pair).
  static ParityMap create(GroupPtr group, std::vector<std::uint8_t> parity);
  /// Every element even.
  static ParityMap trivial(GroupPtr group);
  /// Sign of each underlying permutation; the group must come from from_permutations.
  static ParityMap sign(GroupPtr group);

  const GroupPtr& group() const { return group_; }
  bool odd(Element a) const { return parity_[a] != 0; }
  const std::vector<std::uint8_t>& values() const { return parity_; }

 private:
  ParityMap(GroupPtr group, std::vector<std::uint8_t> parity)
      : group_(std::move(group)), parity_(std::move(parity)) {}

  GroupPtr group_;
  std::vector<std::uint8_t> parity_;
};

/// 1 for odd permutations, 0 for even ones.
std::uint8_t permutation_sign_bit(const Permutation& p);

}  // namespace cohomcat
