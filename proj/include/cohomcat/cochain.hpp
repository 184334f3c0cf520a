#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "cohomcat/group.hpp"
#include "cohomcat/modular.hpp"
#include "cohomcat/sparse_matrix.hpp"

namespace cohomcat {

/// (n, m): n group ("unhatted") arguments followed by m dual-basis ("hatted") arguments.
struct Bidegree {
  std::size_t n = 0;
  std::size_t m = 0;

  std::size_t arity() const { return n + m; }
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

std::string to_string(const Bidegree& d);

inline constexpr std::size_t kMaxArity = 8;

/// Mixed-radix addressing of G^arity: the first argument is the most significant digit.
class IndexLayout {
 public:
  IndexLayout(std::size_t order, std::size_t arity);

  std::size_t order() const { return order_; }
  std::size_t arity() const { return arity_; }
  std::size_t size() const { return size_; }
  std::size_t stride(std::size_t position) const { return strides_[position]; }

  std::size_t encode(std::span<const Element> args) const;
  /// encode() without argument checks, for hot loops over tuples already known to be valid.
  std::size_t encode_unchecked(const Element* args) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < arity_; ++i) idx += args[i] * strides_[i];
    return idx;
  }
  void decode(std::size_t index, std::span<Element> args) const;
  std::vector<Element> decode(std::size_t index) const;
  /// Odometer step; returns false after the last tuple.
  bool advance(std::span<Element> args) const;

 private:
  std::size_t order_;
  std::size_t arity_;
  std::size_t size_;
  std::array<std::size_t, kMaxArity> strides_{};
};

/// A function G^n x Ghat^m -> Z/N stored densely, residue v standing for zeta_N^v.
/// Values are addressed with the n group arguments first, then the m hatted ones.
class BiCochain {
 public:
  /// Zero cochain.
  BiCochain(GroupPtr group, Modulus modulus, Bidegree degree);

  /// Validates length |G|^(n+m) and range of every entry.
  static BiCochain from_values(GroupPtr group, Modulus modulus, Bidegree degree,
                               std::vector<Residue> values);

  /// Fills entries from f(args) for every argument tuple; the result is reduced mod N.
  template <class F>
  static BiCochain from_function(GroupPtr group, Modulus modulus, Bidegree degree, F&& f) {
    BiCochain c(std::move(group), modulus, degree);
    std::array<Element, kMaxArity> args{};
    std::span<Element> view(args.data(), degree.arity());
    std::size_t idx = 0;
    do {
      c.values_[idx++] = modulus.reduce(static_cast<std::int64_t>(f(std::span<const Element>(view))));
    } while (c.layout_.advance(view));
    return c;
  }

  const GroupPtr& group() const { return group_; }
  const Modulus& modulus() const { return modulus_; }
  Bidegree bidegree() const { return degree_; }
  const IndexLayout& layout() const { return layout_; }
  std::size_t size() const { return values_.size(); }
  std::span<const Residue> values() const { return values_; }

  Residue operator[](std::size_t index) const { return values_[index]; }
  Residue at(std::span<const Element> args) const { return values_[layout_.encode(args)]; }
  Residue at(std::initializer_list<Element> args) const {
    return at(std::span<const Element>(args.begin(), args.size()));
  }
  void set(std::span<const Element> args, std::int64_t value) {
    values_[layout_.encode(args)] = modulus_.reduce(value);
  }
  void set(std::initializer_list<Element> args, std::int64_t value) {
    set(std::span<const Element>(args.begin(), args.size()), value);
  }
  void set_index(std::size_t index, std::int64_t value) { values_.at(index) = modulus_.reduce(value); }

  bool is_zero() const;

  BiCochain& operator+=(const BiCochain& other);
  BiCochain& operator-=(const BiCochain& other);
  BiCochain operator-() const;
  friend BiCochain operator+(BiCochain a, const BiCochain& b) { return a += b; }
  friend BiCochain operator-(BiCochain a, const BiCochain& b) { return a -= b; }
  friend bool operator==(const BiCochain& a, const BiCochain& b);

 private:
  void require_compatible(const BiCochain& other) const;

  GroupPtr group_;
  Modulus modulus_;
  Bidegree degree_;
  IndexLayout layout_;
  std::vector<Residue> values_;
};

/// Hochschild coboundary in the hatted arguments, C_{n,m} -> C_{n,m+1}.
BiCochain d2_hatted(const BiCochain& f);

/// Coboundary in the group arguments whose last face conjugates every hatted argument by the
/// dropped element, C_{n,m} -> C_{n+1,m}. For m = 0 this is the inhomogeneous group coboundary.
BiCochain d1_twisted(const BiCochain& f);

/// Matrix of d2_hatted on C_{n,m}: rows index C_{n,m+1}, columns index C_{n,m}.
SparseMatrix d2_hatted_matrix(const FiniteGroup& group, Bidegree source);
/// Matrix of d1_twisted on C_{n,m}: rows index C_{n+1,m}, columns index C_{n,m}.
SparseMatrix d1_twisted_matrix(const FiniteGroup& group, Bidegree source);

/// Element of the total complex in degree k = n+m-1, with components at
/// (k,1), (k-1,2), ..., (1,k) in that order.
class TotalCochain {
 public:
  static TotalCochain zero(GroupPtr group, Modulus modulus, std::size_t degree);
  static TotalCochain from_components(std::vector<BiCochain> components);

  std::size_t degree() const { return degree_; }
  const std::vector<BiCochain>& components() const { return components_; }
  /// Component with n unhatted arguments.
  const BiCochain& component(std::size_t n) const;
  BiCochain& component(std::size_t n);

  friend bool operator==(const TotalCochain&, const TotalCochain&) = default;

 private:
  TotalCochain(std::size_t degree, std::vector<BiCochain> components)
      : degree_(degree), components_(std::move(components)) {}

  std::size_t degree_;
  std::vector<BiCochain> components_;
};

/// D = d1_twisted + (-1)^n d2_hatted on each (n,m) component; D o D = 0.
TotalCochain total_differential(const TotalCochain& x);

/// Matrix of total_differential from degree k to degree k+1, components concatenated in
/// TotalCochain order.
SparseMatrix total_differential_matrix(const FiniteGroup& group, std::size_t degree);

/// Flattened values of a total cochain, in the column order of total_differential_matrix.
std::vector<Residue> flatten(const TotalCochain& x);
/// Inverse of flatten.
TotalCochain unflatten(GroupPtr group, Modulus modulus, std::size_t degree, std::span<const Residue> values);

}  // namespace cohomcat
