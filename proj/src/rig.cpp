#include "cohomcat/rig.hpp"

#include <utility>

#include "cohomcat/double_categorify.hpp"
#include "cohomcat/ng_categorify.hpp"

namespace cohomcat {

FusionBirig::FusionBirig(std::vector<std::string> basis)
    : basis_(std::move(basis)),
      mult_(basis_.size() * basis_.size() * basis_.size(), 0),
      comult_(basis_.size() * basis_.size() * basis_.size(), 0),
      unit_(basis_.size(), 0),
      counit_(basis_.size(), 0) {}

namespace {

using Sparse = std::vector<std::pair<std::size_t, std::uint64_t>>;

// Records one instance per tuple: the first differing coordinate, or agreement.
void compare(Report& rep, const char* eq, std::vector<std::uint32_t> at, const std::vector<std::uint64_t>& lhs,
             const std::vector<std::uint64_t>& rhs) {
  for (std::size_t x = 0; x < lhs.size(); ++x) {
    if (lhs[x] != rhs[x]) {
      at.push_back(static_cast<std::uint32_t>(x));
      rep.record(eq, std::move(at), static_cast<std::int64_t>(lhs[x]), static_cast<std::int64_t>(rhs[x]));
      return;
    }
  }
  rep.record(eq, std::move(at), 0, 0);
}

}  // namespace

Report verify_birig(const FusionBirig& b) {
  const std::size_t d = b.dimension();
  Report rep;
  for (const char* eq : {"associativity", "left unit", "right unit", "coassociativity", "left counit", "right counit",
                         "comultiplication multiplicative", "comultiplication unital", "counit multiplicative",
                         "counit unital"})
    rep.declare(eq);

  std::vector<Sparse> prod(d * d), cop(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t x = 0; x < d; ++x) {
      for (std::size_t c = 0; c < d; ++c) {
        if (b.mult(a, x, c)) prod[a * d + x].emplace_back(c, b.mult(a, x, c));
        if (b.comult(a, x, c)) cop[a].emplace_back(x * d + c, b.comult(a, x, c));
      }
    }
  auto basis_vector = [d](std::size_t a) {
    std::vector<std::uint64_t> v(d, 0);
    v[a] = 1;
    return v;
  };

  std::vector<std::uint64_t> lhs(d), rhs(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t c = 0; c < d; ++c) {
        std::fill(lhs.begin(), lhs.end(), 0);
        std::fill(rhs.begin(), rhs.end(), 0);
        for (const auto& [y, u] : prod[a * d + x])
          for (const auto& [z, v] : prod[y * d + c]) lhs[z] += u * v;
        for (const auto& [y, u] : prod[x * d + c])
          for (const auto& [z, v] : prod[a * d + y]) rhs[z] += u * v;
        compare(rep, "associativity", {uint32_t(a), uint32_t(x), uint32_t(c)}, lhs, rhs);
      }

  for (std::size_t a = 0; a < d; ++a) {
    std::vector<std::uint64_t> left(d, 0), right(d, 0);
    for (std::size_t u = 0; u < d; ++u) {
      if (!b.unit(u)) continue;
      for (const auto& [z, v] : prod[u * d + a]) left[z] += b.unit(u) * v;
      for (const auto& [z, v] : prod[a * d + u]) right[z] += b.unit(u) * v;
    }
    compare(rep, "left unit", {uint32_t(a)}, left, basis_vector(a));
    compare(rep, "right unit", {uint32_t(a)}, right, basis_vector(a));
  }

  for (std::size_t a = 0; a < d; ++a) {
    std::vector<std::uint64_t> l3(d * d * d, 0), r3(d * d * d, 0);
    for (const auto& [uz, c1] : cop[a]) {
      const std::size_t u = uz / d, z = uz % d;
      for (const auto& [xy, c2] : cop[u]) l3[xy * d + z] += c1 * c2;  // (Delta (x) id) Delta
    }
    for (const auto& [xv, c1] : cop[a]) {
      const std::size_t x = xv / d, v = xv % d;
      for (const auto& [yz, c2] : cop[v]) r3[x * d * d + yz] += c1 * c2;  // (id (x) Delta) Delta
    }
    compare(rep, "coassociativity", {uint32_t(a)}, l3, r3);

    std::vector<std::uint64_t> left(d, 0), right(d, 0);
    for (const auto& [xy, c] : cop[a]) {
      const std::size_t x = xy / d, y = xy % d;
      left[y] += b.counit(x) * c;
      right[x] += b.counit(y) * c;
    }
    compare(rep, "left counit", {uint32_t(a)}, left, basis_vector(a));
    compare(rep, "right counit", {uint32_t(a)}, right, basis_vector(a));
  }

  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t x = 0; x < d; ++x) {
      std::vector<std::uint64_t> l2(d * d, 0), r2(d * d, 0);
      for (const auto& [c, u] : prod[a * d + x])
        for (const auto& [pq, v] : cop[c]) l2[pq] += u * v;
      for (const auto& [p1q1, u] : cop[a])
        for (const auto& [p2q2, v] : cop[x]) {
          const std::size_t p1 = p1q1 / d, q1 = p1q1 % d, p2 = p2q2 / d, q2 = p2q2 % d;
          for (const auto& [p, s] : prod[p1 * d + p2])
            for (const auto& [q, t] : prod[q1 * d + q2]) r2[p * d + q] += u * v * s * t;
        }
      compare(rep, "comultiplication multiplicative", {uint32_t(a), uint32_t(x)}, l2, r2);

      std::uint64_t eps = 0;
      for (const auto& [c, u] : prod[a * d + x]) eps += u * b.counit(c);
      rep.record("counit multiplicative", {uint32_t(a), uint32_t(x)}, static_cast<std::int64_t>(eps),
                 static_cast<std::int64_t>(b.counit(a) * b.counit(x)));
    }

  std::vector<std::uint64_t> delta_one(d * d, 0), one_one(d * d, 0);
  std::uint64_t eps_one = 0;
  for (std::size_t u = 0; u < d; ++u) {
    eps_one += b.unit(u) * b.counit(u);
    for (const auto& [pq, v] : cop[u]) delta_one[pq] += b.unit(u) * v;
    for (std::size_t w = 0; w < d; ++w) one_one[u * d + w] = b.unit(u) * b.unit(w);
  }
  compare(rep, "comultiplication unital", {}, delta_one, one_one);
  rep.record("counit unital", {}, static_cast<std::int64_t>(eps_one), 1);
  return rep;
}

FusionBirig group_birig(const FiniteGroup& g) {
  const std::size_t n = g.order();
  FusionBirig b(g.names());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) b.set_mult(x, y, g.mul(x, y), 1);
    b.set_comult(x, x, x, 1);
    b.set_counit(x, 1);
  }
  b.set_unit(g.identity(), 1);
  return b;
}

FusionBirig double_birig(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<std::string> labels;
  for (Element x = 0; x < n; ++x)
    for (Element h = 0; h < n; ++h) labels.push_back("(" + g.name(x) + ",^" + g.name(h) + ")");
  FusionBirig b(std::move(labels));
  auto at = [n](Element x, Element h) { return static_cast<std::size_t>(x) * n + h; };
  const Element e = g.identity();
  for (Element x = 0; x < n; ++x)
    for (Element h = 0; h < n; ++h) {
      for (Element k = 0; k < n; ++k) {
        // (x,h^)(k,l^) is nonzero only for l = k^-1 h k.
        const Element l = g.conjugate(g.inverse(k), h);
        b.set_mult(at(x, h), at(k, l), at(g.mul(x, k), l), 1);
        // Delta(x,h^) has the summand (x,k^) (x) (x,(k^-1 h)^).
        b.set_comult(at(x, h), at(x, k), at(x, g.mul(g.inverse(k), h)), 1);
      }
      b.set_counit(at(x, h), h == e ? 1 : 0);
    }
  for (Element h = 0; h < n; ++h) b.set_unit(at(e, h), 1);
  return b;
}

FusionBirig groth_birig_of(const NgCategorification& cat) { return group_birig(*cat.group()); }

FusionBirig groth_birig_of(const DoubleCategorification& cat) { return double_birig(*cat.triple.group()); }

bool is_permutation_matrix(const NatMatrix& m) {
  const std::size_t n = m.size();
  std::vector<int> col_hits(n, 0);
  for (const auto& row : m) {
    if (row.size() != n) return false;
    int ones = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (row[j] == 1) {
        ++ones;
        ++col_hits[j];
      } else if (row[j] != 0) {
        return false;
      }
    }
    if (ones != 1) return false;
  }
  for (int h : col_hits)
    if (h != 1) return false;
  return true;
}

bool inverse_permutation_check(const NatMatrix& m, const NatMatrix& m2) {
  const std::size_t n = m.size();
  auto validate = [n](const NatMatrix& x, const char* name) {
    if (x.size() != n) throw RigError(RigError::Kind::DimensionMismatch, std::string(name) + " has the wrong size");
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i].size() != n) throw RigError(RigError::Kind::DimensionMismatch, std::string(name) + " is not square");
      for (std::size_t j = 0; j < n; ++j)
        if (x[i][j] < 0) {
          throw RigError(RigError::Kind::NegativeEntry, std::string(name) + "[" + std::to_string(i) + "][" +
                                                            std::to_string(j) + "] = " + std::to_string(x[i][j]));
        }
    }
  };
  validate(m, "M");
  validate(m2, "M'");
  auto is_identity_product = [n](const NatMatrix& a, const NatMatrix& b) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::int64_t s = 0;
        for (std::size_t k = 0; k < n; ++k) s += a[i][k] * b[k][j];
        if (s != (i == j ? 1 : 0)) return false;
      }
    return true;
  };
  if (!is_identity_product(m, m2) || !is_identity_product(m2, m)) return false;
  if (!is_permutation_matrix(m) || !is_permutation_matrix(m2)) {
    throw RigError(RigError::Kind::NotPermutation, "mutually inverse N-matrices that are not permutation matrices");
  }
  return true;
}

}  // namespace cohomcat
