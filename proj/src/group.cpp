#include "cohomcat/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <sstream>

namespace cohomcat {

const char* to_string(GroupErrorKind kind) {
  switch (kind) {
    case GroupErrorKind::NotSquare: return "NotSquare";
    case GroupErrorKind::NotClosed: return "NotClosed";
    case GroupErrorKind::NotAssociative: return "NotAssociative";
    case GroupErrorKind::NoIdentity: return "NoIdentity";
    case GroupErrorKind::NoInverse: return "NoInverse";
    case GroupErrorKind::NotAPermutation: return "NotAPermutation";
    case GroupErrorKind::ClosureTooLarge: return "ClosureTooLarge";
    case GroupErrorKind::InvalidParity: return "InvalidParity";
  }
  return "Unknown";
}

namespace {

std::string join_indices(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace

GroupError::GroupError(GroupErrorKind kind, std::vector<std::size_t> indices, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + " at " + join_indices(indices) + ": " + detail),
      kind_(kind),
      indices_(std::move(indices)) {}

FiniteGroup FiniteGroup::from_cayley(const std::vector<std::vector<Element>>& table,
                                     std::vector<std::string> names) {
  const std::size_t n = table.size();
  if (n == 0) throw GroupError(GroupErrorKind::NotSquare, {}, "empty table");
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) {
      throw GroupError(GroupErrorKind::NotSquare, {a}, "row has " + std::to_string(table[a].size()) +
                                                           " entries, expected " + std::to_string(n));
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] >= n) {
        throw GroupError(GroupErrorKind::NotClosed, {a, b},
                         "product " + std::to_string(table[a][b]) + " out of range");
      }
    }
  }

  FiniteGroup g;
  g.order_ = n;
  g.table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) std::copy(table[a].begin(), table[a].end(), g.table_.begin() + a * n);

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw GroupError(GroupErrorKind::NotAssociative, {a, b, c}, "(ab)c != a(bc)");

  // An associative table with a left identity and left inverses is a group.
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = g.mul(e, a) == a;
    if (ok) {
      g.identity_ = static_cast<Element>(e);
      found = true;
    }
  }
  if (!found) throw GroupError(GroupErrorKind::NoIdentity, {}, "no identity element");

  g.inverses_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    bool ok = false;
    for (std::size_t b = 0; b < n && !ok; ++b) {
      if (g.mul(b, a) == g.identity_) {
        g.inverses_[a] = static_cast<Element>(b);
        ok = true;
      }
    }
    if (!ok) throw GroupError(GroupErrorKind::NoInverse, {a}, "element has no inverse");
  }

  if (names.empty()) {
    names.resize(n);
    for (std::size_t a = 0; a < n; ++a) names[a] = std::to_string(a);
  } else if (names.size() != n) {
    throw std::invalid_argument("expected " + std::to_string(n) + " element names, got " +
                                std::to_string(names.size()));
  }
  g.names_ = std::move(names);
  return g;
}

namespace {

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

}  // namespace

FiniteGroup FiniteGroup::from_permutations(std::size_t degree, const std::vector<Permutation>& generators,
                                           std::size_t cap) {
  if (degree == 0) throw std::invalid_argument("permutation degree must be positive");
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const Permutation& p = generators[k];
    if (p.size() != degree) {
      throw GroupError(GroupErrorKind::NotAPermutation, {k},
                       "generator has length " + std::to_string(p.size()) + ", degree is " +
                           std::to_string(degree));
    }
    std::vector<bool> hit(degree, false);
    for (std::size_t i = 0; i < degree; ++i) {
      if (p[i] >= degree || hit[p[i]]) {
        throw GroupError(GroupErrorKind::NotAPermutation, {k, i}, "not a bijection");
      }
      hit[p[i]] = true;
    }
  }

  Permutation id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);

  std::vector<Permutation> elements{id};
  std::map<Permutation, Element> index{{id, 0}};
  std::deque<Element> queue{0};
  while (!queue.empty()) {
    const Element cur = queue.front();
    queue.pop_front();
    for (const Permutation& gen : generators) {
      Permutation next = compose(elements[cur], gen);
      if (index.count(next)) continue;
      if (elements.size() >= cap) {
        throw GroupError(GroupErrorKind::ClosureTooLarge, {cap},
                         "closure exceeds the configured order cap");
      }
      index.emplace(next, static_cast<Element>(elements.size()));
      queue.push_back(static_cast<Element>(elements.size()));
      elements.push_back(std::move(next));
    }
  }

  const std::size_t n = elements.size();
  FiniteGroup g;
  g.order_ = n;
  g.identity_ = 0;
  g.table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.table_[a * n + b] = index.at(compose(elements[a], elements[b]));
  g.inverses_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    Permutation inv(degree);
    for (std::size_t i = 0; i < degree; ++i) inv[elements[a][i]] = static_cast<std::uint32_t>(i);
    g.inverses_[a] = index.at(inv);
  }
  g.names_.reserve(n);
  for (const Permutation& p : elements) g.names_.push_back(cycle_notation(p));
  g.permutations_ = std::move(elements);
  return g;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<std::vector<Element>> FiniteGroup::table() const {
  std::vector<std::vector<Element>> out(order_);
  for (std::size_t a = 0; a < order_; ++a)
    out[a].assign(table_.begin() + a * order_, table_.begin() + (a + 1) * order_);
  return out;
}

Element conjugate(const FiniteGroup& group, Element a, Element b) {
  if (a >= group.order() || b >= group.order()) throw std::out_of_range("element index out of range");
  return group.conjugate(a, b);
}

std::string cycle_notation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::ostringstream os;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    os << '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      os << (first ? "" : " ") << j;
      first = false;
      j = p[j];
    }
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group order must be positive");
  if (n == 1) return FiniteGroup::from_permutations(1, {});
  Permutation cycle(n);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<std::uint32_t>((i + 1) % n);
  return FiniteGroup::from_permutations(n, {cycle});
}

FiniteGroup symmetric_group_3() { return FiniteGroup::from_permutations(3, {{1, 0, 2}, {1, 2, 0}}); }

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  // Left-regular action of each factor on its own block of points.
  const std::size_t a = g.order(), b = h.order();
  std::vector<Permutation> gens;
  for (Element x = 0; x < a; ++x) {
    Permutation p(a + b);
    for (Element y = 0; y < a; ++y) p[y] = g.mul(x, y);
    for (Element y = 0; y < b; ++y) p[a + y] = static_cast<std::uint32_t>(a + y);
    gens.push_back(std::move(p));
  }
  for (Element x = 0; x < b; ++x) {
    Permutation p(a + b);
    for (Element y = 0; y < a; ++y) p[y] = y;
    for (Element y = 0; y < b; ++y) p[a + y] = static_cast<std::uint32_t>(a + h.mul(x, y));
    gens.push_back(std::move(p));
  }
  return FiniteGroup::from_permutations(a + b, gens, std::max(kDefaultClosureCap, a * b));
}

FiniteGroup builtin_group(const std::string& name) {
  std::string key;
  for (char c : name) key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (key == "s3") return symmetric_group_3();
  if (key == "c2xc2") return direct_product(cyclic_group(2), cyclic_group(2));
  if (key.size() == 2 && key[0] == 'c' && key[1] >= '1' && key[1] <= '8') return cyclic_group(key[1] - '0');
  throw std::invalid_argument("unknown builtin group '" + name + "' (expected c1..c8, s3, c2xc2)");
}

std::uint8_t permutation_sign_bit(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::size_t transpositions = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    if (len > 0) transpositions += len - 1;
  }
  return static_cast<std::uint8_t>(transpositions % 2);
}

ParityMap ParityMap::create(GroupPtr group, std::vector<std::uint8_t> parity) {
  if (!group) throw std::invalid_argument("parity map needs a group");
  const std::size_t n = group->order();
  if (parity.size() != n) {
    throw GroupError(GroupErrorKind::InvalidParity, {parity.size()},
                     "expected " + std::to_string(n) + " parity bits");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (parity[a] > 1) throw GroupError(GroupErrorKind::InvalidParity, {a}, "parity must be 0 or 1");
  }
  if (parity[group->identity()] != 0) {
    throw GroupError(GroupErrorKind::InvalidParity, {group->identity()}, "identity must be even");
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (parity[group->mul(a, b)] != (parity[a] ^ parity[b]))
        throw GroupError(GroupErrorKind::InvalidParity, {a, b}, "not a homomorphism to C2");
  return ParityMap(std::move(group), std::move(parity));
}

ParityMap ParityMap::trivial(GroupPtr group) {
  std::vector<std::uint8_t> bits(group->order(), 0);
  return create(std::move(group), std::move(bits));
}

ParityMap ParityMap::sign(GroupPtr group) {
  if (group->permutations().empty()) {
    throw std::invalid_argument("sign parity needs a group built from permutations");
  }
  std::vector<std::uint8_t> bits;
  for (const Permutation& p : group->permutations()) bits.push_back(permutation_sign_bit(p));
  return create(std::move(group), std::move(bits));
}

}  // namespace cohomcat
