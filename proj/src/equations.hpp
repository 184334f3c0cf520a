#pragma once

// Equation instances shared by numeric verification and matrix assembly. An equation family
// is a function that calls visit(name, indices, lhs, rhs) once per index tuple, where each
// side is a list of cochain values (slot, flat index) summed additively mod N.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "cohomcat/cochain.hpp"
#include "cohomcat/report.hpp"
#include "cohomcat/sparse_matrix.hpp"

namespace cohomcat::detail {

struct Term {
  std::uint8_t slot;
  std::uint32_t index;
};

using Terms = std::initializer_list<Term>;
using Indices = std::initializer_list<Element>;

/// Flat index of an argument tuple in the mixed-radix layout.
inline std::uint32_t ix(std::uint32_t order, std::initializer_list<Element> args) {
  std::uint32_t idx = 0;
  for (Element a : args) idx = idx * order + a;
  return idx;
}

/// Calls body(t) for every t in G^arity, first coordinate most significant.
template <std::size_t Arity, class Body>
void for_tuples(std::uint32_t order, Body&& body) {
  std::array<Element, Arity> t{};
  for (;;) {
    body(static_cast<const std::array<Element, Arity>&>(t));
    std::size_t i = Arity;
    while (i > 0) {
      if (++t[i - 1] < order) break;
      t[i - 1] = 0;
      --i;
    }
    if (i == 0) return;
  }
}

/// Numeric checking against concrete cochains; one BiCochain per slot (null if unused).
class Evaluator {
 public:
  template <std::size_t S>
  Evaluator(const Modulus& modulus, const std::array<const BiCochain*, S>& slots)
      : modulus_(modulus), slots_(slots.begin(), slots.end()) {}

  void operator()(const char* equation, Indices at, Terms lhs, Terms rhs) {
    report.record(equation, std::vector<std::uint32_t>(at.begin(), at.end()), side(lhs), side(rhs));
  }

  Report report;

 private:
  std::int64_t side(Terms terms) const {
    std::int64_t acc = 0;
    for (const Term& t : terms) acc += (*slots_[t.slot])[t.index];
    return modulus_.reduce(acc);
  }

  Modulus modulus_;
  std::vector<const BiCochain*> slots_;
};

/// Builds the linear system: one row per instance, lhs - rhs. Slots with a column offset are
/// unknowns; slots with a known cochain contribute to the right-hand side instead, so each
/// row reads  sum(unknown terms) == -(sum(known terms)).
class Assembler {
 public:
  explicit Assembler(std::size_t slot_count) : offsets_(slot_count), known_(slot_count, nullptr) {}

  void unknown(std::uint8_t slot, std::size_t offset) { offsets_[slot] = offset; }
  void known(std::uint8_t slot, const BiCochain* value) { known_[slot] = value; }
  void columns(std::size_t n) { cols_ = n; }

  void operator()(const char*, Indices, Terms lhs, Terms rhs) {
    std::vector<SparseMatrix::Entry> row;
    std::int64_t constant = 0;
    auto add = [&](const Term& t, std::int64_t sign) {
      if (known_[t.slot]) {
        constant -= sign * (*known_[t.slot])[t.index];
      } else {
        row.emplace_back(static_cast<std::uint32_t>(*offsets_[t.slot] + t.index), sign);
      }
    };
    for (const Term& t : lhs) add(t, 1);
    for (const Term& t : rhs) add(t, -1);
    rows_.push_back(std::move(row));
    rhs_.push_back(constant);
  }

  SparseMatrix matrix() const {
    SparseMatrix m(rows_.size(), cols_);
    for (std::size_t r = 0; r < rows_.size(); ++r) m.set_row(r, rows_[r]);
    return m;
  }
  std::vector<Residue> rhs(const Modulus& modulus) const {
    std::vector<Residue> out(rhs_.size());
    for (std::size_t i = 0; i < rhs_.size(); ++i) out[i] = modulus.reduce(rhs_[i]);
    return out;
  }

 private:
  std::vector<std::optional<std::size_t>> offsets_;
  std::vector<const BiCochain*> known_;
  std::size_t cols_ = 0;
  std::vector<std::vector<SparseMatrix::Entry>> rows_;
  std::vector<std::int64_t> rhs_;
};

}  // namespace cohomcat::detail
