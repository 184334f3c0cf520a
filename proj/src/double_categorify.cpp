#include "cohomcat/double_categorify.hpp"

#include <array>

#include "equations.hpp"

namespace cohomcat {

using detail::ix;
using detail::Term;

namespace {

void require_degree(const BiCochain& c, Bidegree want, const char* name) {
  if (!(c.bidegree() == want)) {
    throw DoubleError(DoubleError::Kind::BadShape, std::string(name) + " must have bidegree " + to_string(want) +
                                                       ", got " + to_string(c.bidegree()));
  }
}

void require_same_space(const BiCochain& a, const BiCochain& b, const char* name) {
  if (!(a.modulus() == b.modulus()) || !(*a.group() == *b.group())) {
    throw DoubleError(DoubleError::Kind::BadShape, std::string(name) + " lives over a different group or modulus");
  }
}

std::size_t power(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= base;
  return r;
}

enum Slot : std::uint8_t { A, P, B, RHO, LAM, R, L, T, D, E, kSlots };

template <class Visit>
void triple_equations(const FiniteGroup& G, Visit&& visit) {
  const std::uint32_t o = G.order();
  auto mul = [&](Element a, Element b) { return G.mul(a, b); };
  auto conj = [&](Element a, Element b) { return G.conjugate(a, b); };

  detail::for_tuples<5>(o, [&](const auto& t) {
    const auto [g, k, m, p, q] = t;
    visit("pentagon", {g, k, m, p, q},
          {Term{A, ix(o, {k, m, p, q})}, Term{A, ix(o, {g, mul(k, m), p, q})}, Term{A, ix(o, {g, k, m, conj(p, q)})}},
          {Term{A, ix(o, {mul(g, k), m, p, q})}, Term{A, ix(o, {g, k, mul(m, p), q})}});
  });
  detail::for_tuples<5>(o, [&](const auto& t) {
    const auto [g, k, m, p, q] = t;
    visit("compatibility cube for Delta", {g, k, m, p, q},
          {Term{A, ix(o, {g, k, m, p})}, Term{A, ix(o, {g, k, m, q})}, Term{P, ix(o, {k, m, p, q})},
           Term{P, ix(o, {g, mul(k, m), p, q})}},
          {Term{P, ix(o, {g, k, conj(m, p), conj(m, q)})}, Term{P, ix(o, {mul(g, k), m, p, q})},
           Term{A, ix(o, {g, k, m, mul(p, q)})}});
  });
  detail::for_tuples<5>(o, [&](const auto& t) {
    const auto [g, k, p, r, s] = t;
    visit("compatibility cube for tensor", {g, k, p, r, s},
          {Term{P, ix(o, {g, k, p, r})}, Term{P, ix(o, {g, k, mul(p, r), s})}, Term{B, ix(o, {mul(g, k), p, r, s})}},
          {Term{B, ix(o, {g, conj(k, p), conj(k, r), conj(k, s)})}, Term{B, ix(o, {k, p, r, s})},
           Term{P, ix(o, {g, k, r, s})}, Term{P, ix(o, {g, k, p, mul(r, s)})}});
  });
  detail::for_tuples<5>(o, [&](const auto& t) {
    const auto [g, i, j, k, l] = t;
    visit("dual pentagon", {g, i, j, k, l},
          {Term{B, ix(o, {g, j, k, l})}, Term{B, ix(o, {g, i, mul(j, k), l})}, Term{B, ix(o, {g, i, j, k})}},
          {Term{B, ix(o, {g, mul(i, j), k, l})}, Term{B, ix(o, {g, i, j, mul(k, l)})}});
  });
}

template <class Visit>
void coherence_rows(const FiniteGroup& G, Visit&& visit) {
  const std::uint32_t o = G.order();
  const Element e = G.identity();
  auto mul = [&](Element a, Element b) { return G.mul(a, b); };
  auto conj = [&](Element a, Element b) { return G.conjugate(a, b); };

  detail::for_tuples<3>(o, [&](const auto& t) {
    const auto [g, k, l] = t;
    visit("triangle for tensor structure", {g, k, l}, {Term{RHO, ix(o, {g, conj(k, l)})}},
          {Term{A, ix(o, {g, e, k, l})}, Term{LAM, ix(o, {k, l})}});
  });
  detail::for_tuples<3>(o, [&](const auto& t) {
    const auto [g, k, l] = t;
    visit("triangle for cotensor structure", {g, k, l}, {Term{R, ix(o, {g, k})}},
          {Term{B, ix(o, {g, k, e, l})}, Term{L, ix(o, {g, l})}});
  });
  detail::for_tuples<3>(o, [&](const auto& t) {
    const auto [g, k, l] = t;
    visit("Delta respects right unit", {g, k, l},
          {Term{D, ix(o, {k, l})}, Term{RHO, ix(o, {g, k})}, Term{RHO, ix(o, {g, l})}},
          {Term{RHO, ix(o, {g, mul(k, l)})}, Term{P, ix(o, {g, e, k, l})}});
  });
  detail::for_tuples<3>(o, [&](const auto& t) {
    const auto [g, k, l] = t;
    visit("Delta respects left unit", {g, k, l},
          {Term{D, ix(o, {k, l})}, Term{LAM, ix(o, {g, k})}, Term{LAM, ix(o, {g, l})}},
          {Term{LAM, ix(o, {g, mul(k, l)})}, Term{P, ix(o, {e, g, k, l})}});
  });
  detail::for_tuples<3>(o, [&](const auto& t) {
    const auto [g, k, l] = t;
    visit("tensor respects right counit", {g, k, l},
          {Term{T, ix(o, {g, k})}, Term{R, ix(o, {g, conj(k, l)})},
           Term{R, ix(o, {k, l})}},
          {Term{R, ix(o, {mul(g, k), l})}, Term{P, ix(o, {g, k, l, e})}});
  });
  detail::for_tuples<3>(o, [&](const auto& t) {
    const auto [g, k, l] = t;
    visit("tensor respects left counit", {g, k, l},
          {Term{T, ix(o, {g, k})}, Term{L, ix(o, {g, conj(k, l)})},
           Term{L, ix(o, {k, l})}},
          {Term{L, ix(o, {mul(g, k), l})}, Term{P, ix(o, {g, k, e, l})}});
  });
  detail::for_tuples<3>(o, [&](const auto& t) {
    const auto [g, k, m] = t;
    visit("epsilon preserves tensor", {g, k, m},
          {Term{A, ix(o, {g, k, m, e})}, Term{T, ix(o, {g, mul(k, m)})}, Term{T, ix(o, {k, m})}},
          {Term{T, ix(o, {g, k})}, Term{T, ix(o, {mul(g, k), m})}});
  });
  detail::for_tuples<3>(o, [&](const auto& t) {
    const auto [k, l, m] = t;
    visit("I preserves Delta", {k, l, m},
          {Term{B, ix(o, {e, k, l, m})}, Term{D, ix(o, {k, mul(l, m)})}, Term{D, ix(o, {l, m})}},
          {Term{D, ix(o, {k, l})}, Term{D, ix(o, {mul(k, l), m})}});
  });
  for (Element g = 0; g < o; ++g)
    visit("epsilon respects right unit", {g}, {Term{T, ix(o, {g, e})}, Term{E, 0}}, {Term{RHO, ix(o, {g, e})}});
  for (Element g = 0; g < o; ++g)
    visit("epsilon respects left unit", {g}, {Term{T, ix(o, {e, g})}, Term{E, 0}}, {Term{LAM, ix(o, {g, e})}});
  for (Element h = 0; h < o; ++h)
    visit("I respects right counit", {h}, {Term{D, ix(o, {h, e})}, Term{E, 0}}, {Term{R, ix(o, {e, h})}});
  for (Element h = 0; h < o; ++h)
    visit("I respects left counit", {h}, {Term{D, ix(o, {e, h})}, Term{E, 0}}, {Term{L, ix(o, {e, h})}});
}

template <class Visit>
void delta_invariance(const FiniteGroup& G, Visit&& visit) {
  const std::uint32_t o = G.order();
  detail::for_tuples<3>(o, [&](const auto& t) {
    const auto [g, k, l] = t;
    visit("delta conjugation invariance", {g, k, l}, {Term{D, ix(o, {G.conjugate(g, k), G.conjugate(g, l)})}},
          {Term{D, ix(o, {k, l})}});
  });
}

std::array<Bidegree, kSlots> slot_degrees() {
  return {Bidegree{3, 1}, {2, 2}, {1, 3}, {1, 1}, {1, 1}, {1, 1}, {1, 1}, {2, 0}, {0, 2}, {0, 0}};
}

void require_valid(const CocycleTriple& t) {
  const Report rep = verify_triple(t);
  if (rep.valid()) return;
  const Violation& v = rep.violations().front();
  std::string where;
  for (auto i : v.indices) where += (where.empty() ? "" : ",") + std::to_string(i);
  throw DoubleError(DoubleError::Kind::InvalidTriple,
                    "triple fails '" + v.equation + "' at (" + where + "): " + std::to_string(v.lhs) +
                        " != " + std::to_string(v.rhs) + " (" + std::to_string(rep.violations().size()) +
                        " violations)");
}

}  // namespace

CocycleTriple::CocycleTriple(BiCochain a, BiCochain p, BiCochain b)
    : alpha(std::move(a)), phi(std::move(p)), beta(std::move(b)) {
  require_degree(alpha, {3, 1}, "alpha");
  require_degree(phi, {2, 2}, "phi");
  require_degree(beta, {1, 3}, "beta");
  require_same_space(alpha, phi, "phi");
  require_same_space(alpha, beta, "beta");
}

CocycleTriple CocycleTriple::zero(GroupPtr group, Modulus modulus) {
  return CocycleTriple(BiCochain(group, modulus, {3, 1}), BiCochain(group, modulus, {2, 2}),
                       BiCochain(group, modulus, {1, 3}));
}

Report verify_triple(const CocycleTriple& t) {
  std::array<const BiCochain*, kSlots> slots{};
  slots[A] = &t.alpha;
  slots[P] = &t.phi;
  slots[B] = &t.beta;
  detail::Evaluator ev(t.modulus(), slots);
  triple_equations(*t.group(), ev);
  return std::move(ev.report);
}

SparseMatrix triple_condition_matrix(const FiniteGroup& g) {
  const std::size_t block = power(g.order(), 4);
  detail::Assembler as(kSlots);
  as.unknown(A, 0);
  as.unknown(P, block);
  as.unknown(B, 2 * block);
  as.columns(3 * block);
  triple_equations(g, as);
  return as.matrix();
}

SparseMatrix equivalence_matrix(const FiniteGroup& g) {
  const std::size_t rows = power(g.order(), 4), cols = power(g.order(), 3);
  SparseMatrix m(3 * rows, 2 * cols);
  m.place(0, 0, d1_twisted_matrix(g, {2, 1}), 1);
  m.place(rows, 0, d2_hatted_matrix(g, {2, 1}), -1);
  m.place(rows, cols, d1_twisted_matrix(g, {1, 2}), 1);
  m.place(2 * rows, cols, d2_hatted_matrix(g, {1, 2}), -1);
  return m;
}

std::vector<Residue> flatten(const CocycleTriple& t) {
  std::vector<Residue> v(t.alpha.values().begin(), t.alpha.values().end());
  v.insert(v.end(), t.phi.values().begin(), t.phi.values().end());
  v.insert(v.end(), t.beta.values().begin(), t.beta.values().end());
  return v;
}

CocycleTriple unflatten_triple(GroupPtr group, Modulus modulus, std::span<const Residue> values) {
  const std::size_t block = power(group->order(), 4);
  if (values.size() != 3 * block) {
    throw DoubleError(DoubleError::Kind::BadShape, "a triple needs " + std::to_string(3 * block) + " values, got " +
                                                       std::to_string(values.size()));
  }
  auto part = [&](std::size_t i, Bidegree d) {
    return BiCochain::from_values(group, modulus, d, {values.begin() + i * block, values.begin() + (i + 1) * block});
  };
  return CocycleTriple(part(0, {3, 1}), part(1, {2, 2}), part(2, {1, 3}));
}

CocycleTriple apply_witness(const CocycleTriple& t, const BiCochain& f_tilde, const BiCochain& f_sim) {
  require_degree(f_tilde, {2, 1}, "f_tilde");
  require_degree(f_sim, {1, 2}, "f_sim");
  require_same_space(t.alpha, f_tilde, "f_tilde");
  require_same_space(t.alpha, f_sim, "f_sim");
  return CocycleTriple(t.alpha - d1_twisted(f_tilde), t.phi + d2_hatted(f_tilde) - d1_twisted(f_sim),
                       t.beta + d2_hatted(f_sim));
}

DoubleCategorification build_double_biunital(const CocycleTriple& t, const BiCochain& rho0, const BiCochain& r0) {
  require_degree(rho0, {0, 1}, "rho0");
  require_degree(r0, {1, 0}, "r0");
  require_same_space(t.alpha, rho0, "rho0");
  require_same_space(t.alpha, r0, "r0");
  require_valid(t);

  const GroupPtr& gp = t.group();
  const FiniteGroup& G = *gp;
  const Modulus& n = t.modulus();
  const Element e = G.identity();
  using Args = std::span<const Element>;
  auto v = [](Residue x) { return static_cast<std::int64_t>(x); };

  BiCochain rho = BiCochain::from_function(gp, n, {1, 1}, [&](Args a) {
    return v(t.alpha.at({a[0], e, e, a[1]})) + v(rho0.at({a[1]}));
  });
  BiCochain lambda = BiCochain::from_function(gp, n, {1, 1}, [&](Args a) {
    return -v(t.alpha.at({e, e, a[0], a[1]})) + v(rho0.at({G.conjugate(a[0], a[1])}));
  });
  BiCochain r = BiCochain::from_function(gp, n, {1, 1}, [&](Args a) {
    return v(t.beta.at({a[0], a[1], e, e})) + v(r0.at({a[0]}));
  });
  BiCochain l = BiCochain::from_function(gp, n, {1, 1}, [&](Args a) {
    return -v(t.beta.at({a[0], e, e, a[1]})) + v(r0.at({a[0]}));
  });
  const BiCochain d1r = d1_twisted(r);
  BiCochain tau = BiCochain::from_function(gp, n, {2, 0}, [&](Args a) {
    return -v(d1r.at({a[0], a[1], e})) + v(t.phi.at({a[0], a[1], e, e}));
  });
  const BiCochain d2rho = d2_hatted(rho);
  BiCochain delta = BiCochain::from_function(gp, n, {0, 2}, [&](Args a) {
    return -v(d2rho.at({e, a[0], a[1]})) + v(t.phi.at({e, e, a[0], a[1]}));
  });
  BiCochain eta(gp, n, {0, 0});
  eta.set_index(0, v(rho0.at({e})) + v(r0.at({e})) - v(t.phi.at({e, e, e, e})));

  for (Element g = 0; g < G.order(); ++g)
    for (Element k = 0; k < G.order(); ++k)
      for (Element x = 0; x < G.order(); ++x) {
        const Residue moved = delta.at({G.conjugate(g, k), G.conjugate(g, x)});
        if (moved != delta.at({k, x})) {
          throw DoubleError(DoubleError::Kind::ConstraintViolated,
                            "delta(" + G.name(k) + "," + G.name(x) + ") = " + std::to_string(delta.at({k, x})) +
                                " but conjugating by " + G.name(g) + " gives " + std::to_string(moved));
        }
      }

  return DoubleCategorification{t,     rho0,          r0,     std::move(rho), std::move(lambda), std::move(r),
                                std::move(l), std::move(tau), std::move(delta), std::move(eta)};
}

Report verify_coherence_table(const DoubleCategorification& dc) {
  const auto degrees = slot_degrees();
  std::array<const BiCochain*, kSlots> slots{&dc.triple.alpha, &dc.triple.phi, &dc.triple.beta, &dc.rho, &dc.lambda,
                                             &dc.r,            &dc.l,          &dc.tau,         &dc.delta, &dc.eta};
  static constexpr std::array<const char*, kSlots> names{"alpha", "phi", "beta", "rho", "lambda",
                                                         "r",     "l",   "tau",  "delta", "eta"};
  for (std::size_t s = 0; s < kSlots; ++s) {
    require_degree(*slots[s], degrees[s], names[s]);
    require_same_space(dc.triple.alpha, *slots[s], names[s]);
  }
  detail::Evaluator ev(dc.triple.modulus(), slots);
  coherence_rows(*dc.triple.group(), ev);
  delta_invariance(*dc.triple.group(), ev);
  return std::move(ev.report);
}

std::optional<DoubleCategorification> solve_coherence_table(const CocycleTriple& t) {
  const GroupPtr& gp = t.group();
  const std::size_t o2 = power(gp->order(), 2);
  detail::Assembler as(kSlots);
  as.known(A, &t.alpha);
  as.known(P, &t.phi);
  as.known(B, &t.beta);
  // rho, lambda, r, l, tau, delta each have |G|^2 entries; eta is a single scalar.
  for (std::uint8_t s = RHO; s <= D; ++s) as.unknown(s, (s - RHO) * o2);
  as.unknown(E, 6 * o2);
  as.columns(6 * o2 + 1);
  coherence_rows(*gp, as);

  const auto x = in_image(as.matrix(), as.rhs(t.modulus()), t.modulus());
  if (!x) return std::nullopt;
  const auto degrees = slot_degrees();
  auto part = [&](std::uint8_t s) {
    const std::size_t off = (s - RHO) * o2, len = s == E ? 1 : o2;
    return BiCochain::from_values(gp, t.modulus(), degrees[s], {x->begin() + off, x->begin() + off + len});
  };
  BiCochain rho = part(RHO), r = part(R);
  const Element e = gp->identity();
  BiCochain rho0 = BiCochain::from_function(gp, t.modulus(), {0, 1}, [&](auto a) { return rho.at({e, a[0]}); });
  BiCochain r0 = BiCochain::from_function(gp, t.modulus(), {1, 0}, [&](auto a) { return r.at({a[0], e}); });
  return DoubleCategorification{t,       std::move(rho0), std::move(r0), std::move(rho), part(LAM), std::move(r),
                                part(L), part(T),         part(D),       part(E)};
}

std::pair<CocycleTriple, DoubleEquivalenceWitness> normalize_triple(const CocycleTriple& t) {
  require_valid(t);
  const GroupPtr& gp = t.group();
  const Element e = gp->identity();
  BiCochain f_tilde(gp, t.modulus(), {2, 1});
  BiCochain f_sim = BiCochain::from_function(gp, t.modulus(), {1, 2},
                                             [&](auto a) { return t.phi.at({e, e, a[1], a[2]}); });
  CocycleTriple out = apply_witness(t, f_tilde, f_sim);
  return {std::move(out), DoubleEquivalenceWitness{std::move(f_tilde), std::move(f_sim), std::nullopt, std::nullopt}};
}

std::optional<DoubleEquivalenceWitness> equivalent_double(const CocycleTriple& a, const CocycleTriple& b) {
  require_same_space(a.alpha, b.alpha, "second triple");
  require_valid(a);
  require_valid(b);
  const GroupPtr& gp = a.group();
  const Modulus& n = a.modulus();
  const std::vector<Residue> va = flatten(a), vb = flatten(b);
  std::vector<Residue> diff(va.size());
  for (std::size_t i = 0; i < va.size(); ++i) diff[i] = n.sub(va[i], vb[i]);
  const auto x = in_image(equivalence_matrix(*gp), diff, n);
  if (!x) return std::nullopt;
  const std::size_t half = x->size() / 2;
  return DoubleEquivalenceWitness{BiCochain::from_values(gp, n, {2, 1}, {x->begin(), x->begin() + half}),
                                  BiCochain::from_values(gp, n, {1, 2}, {x->begin() + half, x->end()}), std::nullopt,
                                  std::nullopt};
}

std::optional<DoubleEquivalenceWitness> equivalent_double(const DoubleCategorification& a,
                                                          const DoubleCategorification& b) {
  auto w = equivalent_double(a.triple, b.triple);
  if (!w) return std::nullopt;
  const GroupPtr& gp = a.triple.group();
  const Element e = gp->identity();
  const Modulus& n = a.triple.modulus();
  using Args = std::span<const Element>;
  w->f0 = BiCochain::from_function(gp, n, {0, 1}, [&](Args k) {
    return static_cast<std::int64_t>(a.rho0.at({k[0]})) - b.rho0.at({k[0]}) - w->f_tilde.at({e, e, k[0]});
  });
  w->f_sup0 = BiCochain::from_function(gp, n, {1, 0}, [&](Args g) {
    return static_cast<std::int64_t>(a.r0.at({g[0]})) - b.r0.at({g[0]}) - w->f_sim.at({g[0], e, e});
  });
  return w;
}

CohomologyResult classify_double(const GroupPtr& group, const Modulus& modulus) {
  return cohomology(equivalence_matrix(*group), triple_condition_matrix(*group), modulus);
}

std::vector<std::vector<Residue>> triple_cocycle_generators(const GroupPtr& group, const Modulus& modulus) {
  return kernel_generators(triple_condition_matrix(*group), modulus);
}

CocycleTriple beta_example(const ParityMap& parity, const Modulus& modulus) {
  if (modulus.value() % 2 != 0) {
    throw DoubleError(DoubleError::Kind::OddModulus,
                      "the value -1 needs an even modulus, got " + std::to_string(modulus.value()));
  }
  const GroupPtr& gp = parity.group();
  CocycleTriple t = CocycleTriple::zero(gp, modulus);
  const std::int64_t half = modulus.value() / 2;
  t.beta = BiCochain::from_function(gp, modulus, {1, 3}, [&](std::span<const Element> a) {
    return parity.odd(a[0]) && parity.odd(a[1]) && parity.odd(a[2]) && parity.odd(a[3]) ? half : 0;
  });
  return t;
}

}  // namespace cohomcat
