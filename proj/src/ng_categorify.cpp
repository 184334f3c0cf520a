#include "cohomcat/ng_categorify.hpp"

#include <array>

#include "equations.hpp"

namespace cohomcat {

using detail::ix;
using detail::Term;

std::string to_string(NgLevel level) {
  switch (level) {
    case NgLevel::Algebra: return "algebra";
    case NgLevel::Unital: return "unital";
    case NgLevel::Bialgebra: return "bialgebra";
    case NgLevel::Biunital: return "biunital";
  }
  return "?";
}

NgLevel parse_ng_level(const std::string& name) {
  if (name == "algebra") return NgLevel::Algebra;
  if (name == "unital") return NgLevel::Unital;
  if (name == "bialgebra") return NgLevel::Bialgebra;
  if (name == "biunital") return NgLevel::Biunital;
  throw NgError(NgError::Kind::BadShape, "unknown level '" + name + "'");
}

namespace {

void require_degree(const BiCochain& c, Bidegree want, const char* name) {
  if (!(c.bidegree() == want)) {
    throw NgError(NgError::Kind::BadShape, std::string(name) + " must have bidegree " + to_string(want) +
                                               ", got " + to_string(c.bidegree()));
  }
}

void require_same_space(const BiCochain& a, const BiCochain& b, const char* name) {
  if (!(a.modulus() == b.modulus()) || !(*a.group() == *b.group())) {
    throw NgError(NgError::Kind::BadShape, std::string(name) + " lives over a different group or modulus");
  }
}

const BiCochain& need(const std::optional<BiCochain>& c, const char* name, NgLevel level) {
  if (!c) {
    throw NgError(NgError::Kind::MissingField,
                  "level " + to_string(level) + " requires field '" + std::string(name) + "'");
  }
  return *c;
}

BiCochain scalar(const GroupPtr& g, const Modulus& n, std::int64_t v) {
  BiCochain s(g, n, {0, 0});
  s.set_index(0, v);
  return s;
}

BiCochain derive_rho_cochain(const BiCochain& alpha, Residue rho) {
  const Element e = alpha.group()->identity();
  return BiCochain::from_function(alpha.group(), alpha.modulus(), {1, 0}, [&](std::span<const Element> a) {
    return static_cast<std::int64_t>(alpha.at({a[0], e, e})) + rho;
  });
}

BiCochain derive_lambda(const BiCochain& alpha, Residue rho) {
  const Element e = alpha.group()->identity();
  return BiCochain::from_function(alpha.group(), alpha.modulus(), {1, 0}, [&](std::span<const Element> a) {
    return -static_cast<std::int64_t>(alpha.at({e, e, a[0]})) + rho;
  });
}

/// Copy of cat with every derivable field present.
NgCategorification resolved(const NgCategorification& cat) {
  NgCategorification c = cat;
  const GroupPtr& g = c.alpha.group();
  const Modulus& n = c.alpha.modulus();
  const Element e = g->identity();
  require_degree(c.alpha, {3, 0}, "alpha");
  if (!c.beta) c.beta = BiCochain(g, n, {1, 0});
  require_degree(*c.beta, {1, 0}, "beta");

  const bool unital = c.level == NgLevel::Unital || c.level == NgLevel::Biunital;
  const bool bialgebra = c.level == NgLevel::Bialgebra || c.level == NgLevel::Biunital;
  if (bialgebra) require_degree(need(c.phi, "phi", c.level), {2, 0}, "phi");
  if (!unital) return c;

  const Residue rho = need(c.rho, "rho", c.level)[0];
  require_degree(*c.rho, {0, 0}, "rho");
  if (!c.rho_cochain) c.rho_cochain = derive_rho_cochain(c.alpha, rho);
  if (!c.lambda) c.lambda = derive_lambda(c.alpha, rho);
  if (c.level == NgLevel::Unital) return c;

  const BiCochain& r = need(c.r, "r", c.level);
  require_degree(r, {1, 0}, "r");
  const BiCochain& phi = *c.phi;
  if (!c.l) c.l = r;
  if (!c.tau) c.tau = -d1_twisted(r) - phi;
  if (!c.delta) c.delta = scalar(g, n, -static_cast<std::int64_t>(rho) - phi.at({e, e}));
  if (!c.eta) c.eta = scalar(g, n, static_cast<std::int64_t>(rho) + r.at({e}) + phi.at({e, e}));
  return c;
}

enum Slot : std::uint8_t { A, P, B, RG, LM, R, L, T, D, E, kSlots };

template <class Visit>
void pentagon(const FiniteGroup& G, Visit&& visit) {
  const std::uint32_t o = G.order();
  detail::for_tuples<4>(o, [&](const auto& t) {
    const auto [g, h, k, l] = t;
    visit("pentagon", {g, h, k, l},
          {Term{A, ix(o, {g, h, k})}, Term{A, ix(o, {g, G.mul(h, k), l})}, Term{A, ix(o, {h, k, l})}},
          {Term{A, ix(o, {G.mul(g, h), k, l})}, Term{A, ix(o, {g, h, G.mul(k, l)})}});
  });
}

template <class Visit>
void triangle(const FiniteGroup& G, Visit&& visit) {
  const std::uint32_t o = G.order();
  const Element e = G.identity();
  detail::for_tuples<2>(o, [&](const auto& t) {
    const auto [g, k] = t;
    visit("triangle for tensor structure", {g, k}, {Term{RG, g}}, {Term{A, ix(o, {g, e, k})}, Term{LM, k}});
  });
}

template <class Visit>
void bialgebra_relations(const FiniteGroup& G, Visit&& visit) {
  const std::uint32_t o = G.order();
  detail::for_tuples<3>(o, [&](const auto& t) {
    const auto [g, h, k] = t;
    visit("alpha = d1(phi)", {g, h, k},
          {Term{A, ix(o, {g, h, k})}, Term{P, ix(o, {G.mul(g, h), k})}, Term{P, ix(o, {g, h})}},
          {Term{P, ix(o, {h, k})}, Term{P, ix(o, {g, G.mul(h, k)})}});
  });
  for (Element g = 0; g < o; ++g)
    visit("dual pentagon (beta_g^3 = beta_g^2)", {g}, {Term{B, g}, Term{B, g}, Term{B, g}}, {Term{B, g}, Term{B, g}});
}

template <class Visit>
void biunital_table(const FiniteGroup& G, Visit&& visit) {
  const std::uint32_t o = G.order();
  const Element e = G.identity();
  triangle(G, visit);
  for (Element g = 0; g < o; ++g) visit("triangle for cotensor structure", {g}, {Term{R, g}}, {Term{B, g}, Term{L, g}});
  for (Element g = 0; g < o; ++g)
    visit("Delta respects right unit", {g}, {Term{P, ix(o, {g, e})}, Term{D, 0}, Term{RG, g}, Term{RG, g}},
          {Term{RG, g}});
  for (Element g = 0; g < o; ++g)
    visit("Delta respects left unit", {g}, {Term{P, ix(o, {e, g})}, Term{D, 0}, Term{LM, g}, Term{LM, g}},
          {Term{LM, g}});
  detail::for_tuples<2>(o, [&](const auto& t) {
    const auto [g, k] = t;
    visit("tensor respects right counit", {g, k},
          {Term{P, ix(o, {g, k})}, Term{T, ix(o, {g, k})}, Term{R, g}, Term{R, k}}, {Term{R, G.mul(g, k)}});
  });
  detail::for_tuples<2>(o, [&](const auto& t) {
    const auto [g, k] = t;
    visit("tensor respects left counit", {g, k},
          {Term{P, ix(o, {g, k})}, Term{T, ix(o, {g, k})}, Term{L, g}, Term{L, k}}, {Term{L, G.mul(g, k)}});
  });
  detail::for_tuples<3>(o, [&](const auto& t) {
    const auto [g, k, m] = t;
    visit("epsilon preserves tensor", {g, k, m},
          {Term{A, ix(o, {g, k, m})}, Term{T, ix(o, {g, G.mul(k, m)})}, Term{T, ix(o, {k, m})}},
          {Term{T, ix(o, {g, k})}, Term{T, ix(o, {G.mul(g, k), m})}});
  });
  visit("I preserves Delta", {}, {Term{B, e}, Term{D, 0}, Term{D, 0}}, {Term{D, 0}, Term{D, 0}});
  for (Element g = 0; g < o; ++g)
    visit("epsilon respects right unit", {g}, {Term{T, ix(o, {g, e})}, Term{E, 0}}, {Term{RG, g}});
  for (Element g = 0; g < o; ++g)
    visit("epsilon respects left unit", {g}, {Term{T, ix(o, {e, g})}, Term{E, 0}}, {Term{LM, g}});
  visit("I respects right counit", {}, {Term{D, 0}, Term{E, 0}}, {Term{R, e}});
  visit("I respects left counit", {}, {Term{D, 0}, Term{E, 0}}, {Term{L, e}});
}

}  // namespace

NgCategorification::NgCategorification(NgLevel lvl, BiCochain a) : level(lvl), alpha(std::move(a)) {
  require_degree(alpha, {3, 0}, "alpha");
}

NgCategorification make_ng_algebra(BiCochain alpha) { return NgCategorification(NgLevel::Algebra, std::move(alpha)); }

NgCategorification make_ng_unital(BiCochain alpha, BiCochain rho) {
  require_degree(rho, {0, 0}, "rho");
  require_same_space(alpha, rho, "rho");
  NgCategorification c(NgLevel::Unital, std::move(alpha));
  c.rho_cochain = derive_rho_cochain(c.alpha, rho[0]);
  c.lambda = derive_lambda(c.alpha, rho[0]);
  c.rho = std::move(rho);
  return c;
}

NgCategorification make_ng_bialgebra(BiCochain phi) {
  require_degree(phi, {2, 0}, "phi");
  NgCategorification c(NgLevel::Bialgebra, d1_twisted(phi));
  c.beta = BiCochain(phi.group(), phi.modulus(), {1, 0});
  c.phi = std::move(phi);
  return c;
}

NgCategorification build_ng_biunital(BiCochain phi, BiCochain rho, BiCochain r) {
  require_degree(phi, {2, 0}, "phi");
  require_degree(rho, {0, 0}, "rho");
  require_degree(r, {1, 0}, "r");
  require_same_space(phi, rho, "rho");
  require_same_space(phi, r, "r");
  NgCategorification c(NgLevel::Biunital, d1_twisted(phi));
  c.beta = BiCochain(phi.group(), phi.modulus(), {1, 0});
  c.phi = std::move(phi);
  c.rho = std::move(rho);
  c.r = std::move(r);
  return resolved(c);
}

Report verify_ng(const NgCategorification& cat) {
  const NgCategorification c = resolved(cat);
  const FiniteGroup& G = *c.alpha.group();
  auto ptr = [](const std::optional<BiCochain>& x) { return x ? &*x : nullptr; };
  std::array<const BiCochain*, kSlots> slots{};
  slots[A] = &c.alpha;
  slots[P] = ptr(c.phi);
  slots[B] = ptr(c.beta);
  slots[RG] = ptr(c.rho_cochain);
  slots[LM] = ptr(c.lambda);
  slots[R] = ptr(c.r);
  slots[L] = ptr(c.l);
  slots[T] = ptr(c.tau);
  slots[D] = ptr(c.delta);
  slots[E] = ptr(c.eta);
  for (const BiCochain* s : slots)
    if (s) require_same_space(c.alpha, *s, "structure cochain");

  detail::Evaluator ev(c.modulus(), slots);
  pentagon(G, ev);
  switch (c.level) {
    case NgLevel::Algebra: break;
    case NgLevel::Unital: triangle(G, ev); break;
    case NgLevel::Bialgebra: bialgebra_relations(G, ev); break;
    case NgLevel::Biunital:
      bialgebra_relations(G, ev);
      biunital_table(G, ev);
      break;
  }
  return std::move(ev.report);
}

std::optional<NgEquivalenceWitness> equivalent_ng(const NgCategorification& a, const NgCategorification& b) {
  if (a.level != b.level) {
    throw NgError(NgError::Kind::LevelMismatch,
                  "cannot compare a " + to_string(a.level) + " and a " + to_string(b.level) + " categorification");
  }
  require_same_space(a.alpha, b.alpha, "second categorification");
  if (!verify_ng(a).valid() || !verify_ng(b).valid()) {
    throw NgError(NgError::Kind::InvalidCategorification, "equivalence is only decided between valid categorifications");
  }
  const NgCategorification ra = resolved(a), rb = resolved(b);
  const GroupPtr& g = a.alpha.group();
  const Modulus& n = a.alpha.modulus();
  const Element e = g->identity();

  if (a.level == NgLevel::Algebra || a.level == NgLevel::Unital) {
    SparseMatrix d = d1_twisted_matrix(*g, {2, 0});
    const BiCochain diff = ra.alpha - rb.alpha;
    std::vector<Residue> z(diff.values().begin(), diff.values().end());
    if (a.level == NgLevel::Unital) {
      // psi(g,e) = rho'_g - rho_g appended below the cobounding rows.
      SparseMatrix stacked(d.rows() + g->order(), d.cols());
      stacked.place(0, 0, d, 1);
      for (Element x = 0; x < g->order(); ++x) {
        stacked.set_row(d.rows() + x, {{ix(g->order(), {x, e}), 1}});
        z.push_back(n.sub((*rb.rho_cochain)[x], (*ra.rho_cochain)[x]));
      }
      d = std::move(stacked);
    }
    auto x = in_image(d, z, n);
    if (!x) return std::nullopt;
    return NgEquivalenceWitness{BiCochain::from_values(g, n, {2, 0}, std::move(*x)), std::nullopt, std::nullopt};
  }

  NgEquivalenceWitness w{*ra.phi - *rb.phi, std::nullopt, std::nullopt};
  if (a.level == NgLevel::Biunital) {
    w.f0 = scalar(g, n, static_cast<std::int64_t>((*ra.rho)[0]) - (*rb.rho)[0] - w.psi.at({e, e}));
    w.f_sup0 = *ra.r - *rb.r;
  }
  return w;
}

bool check_ng_witness(const NgCategorification& a, const NgCategorification& b, const NgEquivalenceWitness& w) {
  const NgCategorification ra = resolved(a), rb = resolved(b);
  if (!(d1_twisted(w.psi) == ra.alpha - rb.alpha)) return false;
  const Element e = a.alpha.group()->identity();
  const Modulus& n = a.alpha.modulus();
  switch (a.level) {
    case NgLevel::Algebra: return true;
    case NgLevel::Unital:
      for (Element x = 0; x < a.alpha.group()->order(); ++x)
        if (n.add((*ra.rho_cochain)[x], w.psi.at({x, e})) != (*rb.rho_cochain)[x]) return false;
      return true;
    case NgLevel::Bialgebra: return w.psi == *ra.phi - *rb.phi;
    case NgLevel::Biunital:
      if (!(w.psi == *ra.phi - *rb.phi) || !w.f0 || !w.f_sup0) return false;
      return (*w.f0)[0] == n.reduce(static_cast<std::int64_t>((*ra.rho)[0]) - (*rb.rho)[0] - w.psi.at({e, e})) &&
             *w.f_sup0 == *ra.r - *rb.r;
  }
  return false;
}

CohomologyResult classify_ng(const GroupPtr& group, const Modulus& modulus) {
  return cohomology(d1_twisted_matrix(*group, {2, 0}), d1_twisted_matrix(*group, {3, 0}), modulus);
}

}  // namespace cohomcat
