#pragma once

// Reference implementations written directly from the textbook formulas. They share no code
// with the library beyond the storage class, and are deliberately slow.

#include <cstdint>
#include <random>
#include <vector>

#include "cohomcat/cochain.hpp"
#include "cohomcat/group.hpp"

namespace oracle {

using cohomcat::BiCochain;
using cohomcat::Element;
using cohomcat::FiniteGroup;

inline std::int64_t sign(std::size_t i) { return i % 2 == 0 ? 1 : -1; }

// All tuples of length `arity` over 0..order-1, first coordinate slowest.
inline std::vector<std::vector<Element>> tuples(std::size_t order, std::size_t arity) {
  std::vector<std::vector<Element>> out{{}};
  for (std::size_t a = 0; a < arity; ++a) {
    std::vector<std::vector<Element>> next;
    for (const auto& t : out)
      for (Element x = 0; x < order; ++x) {
        auto u = t;
        u.push_back(x);
        next.push_back(std::move(u));
      }
    out = std::move(next);
  }
  return out;
}

inline BiCochain d2(const BiCochain& f) {
  const auto& G = *f.group();
  const auto [n, m] = f.bidegree();
  BiCochain out(f.group(), f.modulus(), {n, m + 1});
  for (const auto& t : tuples(G.order(), n + m + 1)) {
    std::vector<Element> g(t.begin(), t.begin() + n), h(t.begin() + n, t.end());
    auto eval = [&](const std::vector<Element>& hs) {
      auto a = g;
      a.insert(a.end(), hs.begin(), hs.end());
      return static_cast<std::int64_t>(f.at(a));
    };
    std::int64_t s = eval({h.begin() + 1, h.end()});
    for (std::size_t i = 0; i + 1 < h.size(); ++i) {
      std::vector<Element> hs;
      for (std::size_t j = 0; j < h.size(); ++j) {
        if (j == i) {
          hs.push_back(G.mul(h[i], h[i + 1]));
          ++j;
        } else {
          hs.push_back(h[j]);
        }
      }
      s += sign(i + 1) * eval(hs);
    }
    s += sign(m + 1) * eval({h.begin(), h.end() - 1});
    out.set(t, s);
  }
  return out;
}

inline BiCochain d1(const BiCochain& f) {
  const auto& G = *f.group();
  const auto [n, m] = f.bidegree();
  BiCochain out(f.group(), f.modulus(), {n + 1, m});
  for (const auto& t : tuples(G.order(), n + 1 + m)) {
    std::vector<Element> g(t.begin(), t.begin() + n + 1), h(t.begin() + n + 1, t.end());
    auto eval = [&](const std::vector<Element>& gs, const std::vector<Element>& hs) {
      auto a = gs;
      a.insert(a.end(), hs.begin(), hs.end());
      return static_cast<std::int64_t>(f.at(a));
    };
    std::int64_t s = eval({g.begin() + 1, g.end()}, h);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Element> gs;
      for (std::size_t j = 0; j <= n; ++j) {
        if (j == i) {
          gs.push_back(G.mul(g[i], g[i + 1]));
          ++j;
        } else {
          gs.push_back(g[j]);
        }
      }
      s += sign(i + 1) * eval(gs, h);
    }
    const Element last = g[n];
    const Element inv = G.inverse(last);
    std::vector<Element> twisted;
    for (Element x : h) twisted.push_back(G.mul(G.mul(last, x), inv));
    s += sign(n + 1) * eval({g.begin(), g.end() - 1}, twisted);
    out.set(t, s);
  }
  return out;
}

inline BiCochain random_cochain(const cohomcat::GroupPtr& g, const cohomcat::Modulus& n, cohomcat::Bidegree d,
                                std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> pick(0, n.value() - 1);
  return BiCochain::from_function(g, n, d, [&](auto) { return static_cast<std::int64_t>(pick(rng)); });
}

// Rank of a dense integer matrix over the prime field F_p, plain Gauss-Jordan.
inline std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> a, std::int64_t p) {
  auto inv = [p](std::int64_t x) {
    std::int64_t r = 1, e = p - 2;
    x %= p;
    while (e) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  for (auto& row : a)
    for (auto& x : row) x = ((x % p) + p) % p;
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    const std::int64_t s = inv(a[rank][c]);
    for (auto& x : a[rank]) x = x * s % p;
    for (std::size_t r = 0; r < a.size(); ++r)
      if (r != rank && a[r][c]) {
        const std::int64_t f = a[r][c];
        for (std::size_t k = 0; k < cols; ++k) a[r][k] = ((a[r][k] - f * a[rank][k]) % p + p) % p;
      }
    ++rank;
  }
  return rank;
}

// Dense matrix of a linear cochain map, built by applying it to basis vectors.
template <class Map>
std::vector<std::vector<std::int64_t>> matrix_of(const cohomcat::GroupPtr& g, const cohomcat::Modulus& n,
                                                 cohomcat::Bidegree src, Map&& map) {
  BiCochain zero(g, n, src);
  std::vector<std::vector<std::int64_t>> cols;
  for (std::size_t i = 0; i < zero.size(); ++i) {
    BiCochain e = zero;
    e.set_index(i, 1);
    const BiCochain img = map(e);
    cols.emplace_back(img.values().begin(), img.values().end());
  }
  const std::size_t rows = cols.empty() ? 0 : cols[0].size();
  std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m[r][c] = cols[c][r];
  return m;
}

}  // namespace oracle
