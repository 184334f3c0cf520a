#include "doctest.h"

#include <memory>
#include <random>

#include "cohomcat/ng_categorify.hpp"
#include "oracles.hpp"

using namespace cohomcat;

namespace {

GroupPtr group(const char* name) { return std::make_shared<const FiniteGroup>(builtin_group(name)); }

BiCochain scalar(const GroupPtr& g, const Modulus& n, std::int64_t v) {
  BiCochain s(g, n, {0, 0});
  s.set_index(0, v);
  return s;
}

// The nontrivial C2 cocycle alpha(g,h,k) = g*h*k on parities.
BiCochain parity_cube(const GroupPtr& g) {
  return BiCochain::from_function(g, Modulus(2), {3, 0}, [](auto a) { return a[0] * a[1] * a[2]; });
}

BiCochain c2_cochain(const GroupPtr& g, Bidegree d, std::uint32_t bits) {
  std::size_t i = 0;
  BiCochain c(g, Modulus(2), d);
  for (std::size_t k = 0; k < c.size(); ++k) c.set_index(k, (bits >> i++) & 1u);
  return c;
}

}  // namespace

TEST_CASE("algebra level") {
  auto g = group("c2");
  const Modulus two(2);
  CHECK(verify_ng(make_ng_algebra(BiCochain(g, two, {3, 0}))).valid());
  const Report r = verify_ng(make_ng_algebra(parity_cube(g)));
  CHECK(r.valid());
  CHECK(r.passed("pentagon"));
  for (const auto& t : r.equations())
    if (t.equation == "pentagon") CHECK(t.checked == 16);

  BiCochain broken = parity_cube(g);
  broken.set({1, 1, 0}, 1);
  const Report bad = verify_ng(make_ng_algebra(broken));
  CHECK_FALSE(bad.valid());
  CHECK(bad.failures("pentagon") > 0);
  CHECK(bad.violations().front().equation == "pentagon");
}

TEST_CASE("unital level derives rho_g and lambda from a scalar") {
  auto g = group("c3");
  const Modulus n(3);
  std::mt19937_64 rng(1);
  const BiCochain phi = oracle::random_cochain(g, n, {2, 0}, rng);
  const BiCochain alpha = d1_twisted(phi);
  const NgCategorification cat = make_ng_unital(alpha, scalar(g, n, 2));
  const Report r = verify_ng(cat);
  CHECK(r.valid());
  REQUIRE(cat.rho_cochain);
  for (Element x = 0; x < 3; ++x) {
    CHECK(cat.rho_cochain->at({x}) == n.reduce(std::int64_t(alpha.at({x, 0, 0})) + 2));
    CHECK(cat.lambda->at({x}) == n.reduce(-std::int64_t(alpha.at({0, 0, x})) + 2));
  }
}

TEST_CASE("bialgebra level requires alpha = d1(phi)") {
  auto g = group("c2");
  NgCategorification cat(NgLevel::Bialgebra, parity_cube(g));
  cat.phi = BiCochain(g, Modulus(2), {2, 0});
  const Report r = verify_ng(cat);
  CHECK_FALSE(r.valid());
  CHECK(r.failures("alpha = d1(phi)") > 0);

  NgCategorification missing(NgLevel::Bialgebra, parity_cube(g));
  try {
    verify_ng(missing);
    FAIL("missing phi accepted");
  } catch (const NgError& e) {
    CHECK(e.kind() == NgError::Kind::MissingField);
  }
}

TEST_CASE("biunital builder") {
  auto g = group("c2");
  const Modulus two(2);
  const NgCategorification zero =
      build_ng_biunital(BiCochain(g, two, {2, 0}), scalar(g, two, 0), BiCochain(g, two, {1, 0}));
  CHECK(verify_ng(zero).valid());
  for (const auto* c : {&zero.alpha, &*zero.tau, &*zero.delta, &*zero.eta, &*zero.l, &*zero.lambda})
    CHECK(c->is_zero());

  // Every (phi, rho, r) over C2.
  std::size_t ok = 0;
  for (std::uint32_t p = 0; p < 16; ++p)
    for (std::uint32_t rho = 0; rho < 2; ++rho)
      for (std::uint32_t r = 0; r < 4; ++r) {
        const NgCategorification cat =
            build_ng_biunital(c2_cochain(g, {2, 0}, p), scalar(g, two, rho), c2_cochain(g, {1, 0}, r));
        ok += verify_ng(cat).valid();
      }
  CHECK(ok == 128);

  // eta = rho + r(e) + phi(e,e).
  auto c3 = group("c3");
  const Modulus three(3);
  BiCochain phi(c3, three, {2, 0});
  phi.set({0, 0}, 2);
  BiCochain r(c3, three, {1, 0});
  r.set({0}, 1);
  const NgCategorification cat = build_ng_biunital(phi, scalar(c3, three, 1), r);
  CHECK(cat.eta->at(std::span<const Element>{}) == (1 + 1 + 2) % 3);
}

TEST_CASE("biunital builder on random data over C3 and S3") {
  std::mt19937_64 rng(2);
  for (auto [name, N] : {std::pair{"c3", 3u}, std::pair{"s3", 6u}}) {
    auto g = group(name);
    const Modulus n(N);
    std::size_t ok = 0;
    for (int t = 0; t < 500; ++t) {
      const auto phi = oracle::random_cochain(g, n, {2, 0}, rng);
      const auto rho = oracle::random_cochain(g, n, {0, 0}, rng);
      const auto r = oracle::random_cochain(g, n, {1, 0}, rng);
      ok += verify_ng(build_ng_biunital(phi, rho, r)).valid();
    }
    CHECK(ok == 500);
  }
}

TEST_CASE("equivalence") {
  auto g = group("c2");
  const Modulus two(2);
  const NgCategorification triv = make_ng_algebra(BiCochain(g, two, {3, 0}));
  const NgCategorification nontriv = make_ng_algebra(parity_cube(g));

  const auto self = equivalent_ng(nontriv, nontriv);
  REQUIRE(self);
  CHECK(self->psi.is_zero());

  CHECK_FALSE(equivalent_ng(triv, nontriv));
  // Oracle: no psi among all 16 cobounds the difference.
  for (std::uint32_t bits = 0; bits < 16; ++bits)
    CHECK_FALSE(oracle::d1(c2_cochain(g, {2, 0}, bits)) == parity_cube(g));

  const BiCochain psi0 = c2_cochain(g, {2, 0}, 0b0110);
  const NgCategorification moved = make_ng_algebra(parity_cube(g) + d1_twisted(psi0));
  const auto w = equivalent_ng(nontriv, moved);
  REQUIRE(w);
  CHECK(check_ng_witness(nontriv, moved, *w));
  const auto back = equivalent_ng(moved, nontriv);
  REQUIRE(back);
  CHECK(check_ng_witness(moved, nontriv, *back));

  const NgCategorification unital = make_ng_unital(BiCochain(g, two, {3, 0}), scalar(g, two, 0));
  try {
    equivalent_ng(triv, unital);
    FAIL("levels mixed");
  } catch (const NgError& e) {
    CHECK(e.kind() == NgError::Kind::LevelMismatch);
  }
}

TEST_CASE("transitivity through witness addition") {
  auto g = group("s3");
  const Modulus n(6);
  std::mt19937_64 rng(8);
  const BiCochain alpha = d1_twisted(oracle::random_cochain(g, n, {2, 0}, rng));
  const BiCochain p1 = oracle::random_cochain(g, n, {2, 0}, rng), p2 = oracle::random_cochain(g, n, {2, 0}, rng);
  const NgCategorification a = make_ng_algebra(alpha);
  const NgCategorification b = make_ng_algebra(alpha - d1_twisted(p1));
  const NgCategorification c = make_ng_algebra(alpha - d1_twisted(p1) - d1_twisted(p2));
  const auto ab = equivalent_ng(a, b), bc = equivalent_ng(b, c);
  REQUIRE(ab);
  REQUIRE(bc);
  const NgEquivalenceWitness sum{ab->psi + bc->psi, std::nullopt, std::nullopt};
  CHECK(check_ng_witness(a, c, sum));
}

TEST_CASE("biunital equivalence carries f0 and f^0") {
  auto g = group("c3");
  const Modulus n(3);
  std::mt19937_64 rng(4);
  const auto phi = oracle::random_cochain(g, n, {2, 0}, rng), phi2 = oracle::random_cochain(g, n, {2, 0}, rng);
  const auto r = oracle::random_cochain(g, n, {1, 0}, rng), r2 = oracle::random_cochain(g, n, {1, 0}, rng);
  const NgCategorification a = build_ng_biunital(phi, scalar(g, n, 1), r);
  const NgCategorification b = build_ng_biunital(phi2, scalar(g, n, 2), r2);
  const auto w = equivalent_ng(a, b);
  REQUIRE(w);
  CHECK(w->psi == phi - phi2);
  REQUIRE(w->f0);
  CHECK(w->f0->at(std::span<const Element>{}) == n.reduce(1 - 2 - std::int64_t(w->psi.at({0, 0}))));
  CHECK(*w->f_sup0 == r - r2);
  CHECK(check_ng_witness(a, b, *w));
}

TEST_CASE("classification") {
  CHECK(classify_ng(group("c1"), Modulus(2)).invariant_factors.empty());
  CHECK(classify_ng(group("c2"), Modulus(2)).invariant_factors == std::vector<std::uint64_t>{2});
  CHECK(classify_ng(group("c3"), Modulus(3)).invariant_factors == std::vector<std::uint64_t>{3});
  CHECK(classify_ng(group("c4"), Modulus(4)).invariant_factors == std::vector<std::uint64_t>{4});
  CHECK(parse_ng_level("biunital") == NgLevel::Biunital);
  CHECK_THROWS_AS(parse_ng_level("coalgebra"), NgError);
}
