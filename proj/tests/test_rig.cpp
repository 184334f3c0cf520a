#include "doctest.h"

#include <memory>
#include <random>

#include "cohomcat/double_categorify.hpp"
#include "cohomcat/ng_categorify.hpp"
#include "cohomcat/rig.hpp"

using namespace cohomcat;

namespace {

GroupPtr group(const char* name) { return std::make_shared<const FiniteGroup>(builtin_group(name)); }

std::size_t at(const FiniteGroup& g, Element x, Element h) { return std::size_t(x) * g.order() + h; }

}  // namespace

TEST_CASE("group birig") {
  const FusionBirig b = group_birig(cyclic_group(2));
  CHECK(b.dimension() == 2);
  CHECK(b.mult(1, 1, 0) == 1);
  CHECK(b.comult(1, 1, 1) == 1);
  CHECK(verify_birig(b).valid());
}

TEST_CASE("double birig structure constants") {
  const FiniteGroup c2 = cyclic_group(2);
  const FusionBirig b = double_birig(c2);
  CHECK(b.dimension() == 4);
  // (x, x^)(x, x^) = (e, x^) since x^-1 x x = x.
  CHECK(b.mult(at(c2, 1, 1), at(c2, 1, 1), at(c2, 0, 1)) == 1);
  CHECK(b.mult(at(c2, 1, 1), at(c2, 1, 0), at(c2, 0, 0)) == 0);
  CHECK(b.basis()[at(c2, 1, 1)] == "((0 1),^(0 1))");

  const FiniteGroup s3 = symmetric_group_3();
  const FusionBirig d = double_birig(s3);
  // Direct formula: (g,h^)(k,l^) = [k^-1 h k = l] (gk, l^).
  for (Element g = 0; g < 6; ++g)
    for (Element h = 0; h < 6; ++h)
      for (Element k = 0; k < 6; ++k)
        for (Element l = 0; l < 6; ++l)
          for (std::size_t c = 0; c < 36; ++c) {
            const bool hit = s3.mul(s3.mul(s3.inverse(k), h), k) == l && c == at(s3, s3.mul(g, k), l);
            REQUIRE(d.mult(at(s3, g, h), at(s3, k, l), c) == (hit ? 1u : 0u));
          }
  // The unit sum_h (e,h^) is two-sided neutral.
  for (std::size_t a = 0; a < 36; ++a)
    for (std::size_t c = 0; c < 36; ++c) {
      std::uint64_t left = 0, right = 0;
      for (std::size_t u = 0; u < 36; ++u) {
        left += d.unit(u) * d.mult(u, a, c);
        right += d.unit(u) * d.mult(a, u, c);
      }
      CHECK(left == (a == c));
      CHECK(right == (a == c));
    }
}

TEST_CASE("birig axioms for the doubles of small groups") {
  for (const char* name : {"c2", "c3", "c4", "s3", "c2xc2"}) {
    const Report r = verify_birig(double_birig(builtin_group(name)));
    CHECK_MESSAGE(r.valid(), name);
    CHECK(r.equations().size() == 10);
  }
}

TEST_CASE("corrupted constants are located") {
  const FiniteGroup s3 = symmetric_group_3();
  FusionBirig d = double_birig(s3);
  d.set_mult(at(s3, 1, 0), at(s3, 2, 0), at(s3, 0, 0), 1);
  const Report r = verify_birig(d);
  CHECK_FALSE(r.valid());
  CHECK(r.failures("associativity") > 0);

  FusionBirig e = double_birig(cyclic_group(3));
  e.set_counit(0, 2);
  const Report r2 = verify_birig(e);
  CHECK(r2.failures("left counit") > 0);
  CHECK(r2.passed("associativity"));
}

TEST_CASE("Grothendieck birig forgets the cocycle") {
  auto c2 = group("c2");
  const Modulus two(2);
  const auto triv = make_ng_algebra(BiCochain(c2, two, {3, 0}));
  const auto nontriv =
      make_ng_algebra(BiCochain::from_function(c2, two, {3, 0}, [](auto a) { return a[0] * a[1] * a[2]; }));
  REQUIRE(verify_ng(nontriv).valid());
  CHECK(groth_birig_of(triv) == groth_birig_of(nontriv));
  CHECK(groth_birig_of(triv) == group_birig(*c2));

  const auto dz = build_double_biunital(CocycleTriple::zero(c2, two), BiCochain(c2, two, {0, 1}),
                                        BiCochain(c2, two, {1, 0}));
  const auto db = build_double_biunital(beta_example(ParityMap::sign(c2), two), BiCochain(c2, two, {0, 1}),
                                        BiCochain(c2, two, {1, 0}));
  CHECK(groth_birig_of(dz) == groth_birig_of(db));
  CHECK(groth_birig_of(dz) == double_birig(*c2));
}

TEST_CASE("inverse permutation check") {
  const NatMatrix id{{1, 0}, {0, 1}}, swap{{0, 1}, {1, 0}};
  CHECK(inverse_permutation_check(id, id));
  CHECK(inverse_permutation_check(swap, swap));
  CHECK(is_permutation_matrix(swap));
  CHECK_FALSE(is_permutation_matrix({{1, 1}, {0, 1}}));

  // [[1,1],[0,1]] has no inverse among N-matrices with entries up to 3.
  const NatMatrix m{{1, 1}, {0, 1}};
  for (int bits = 0; bits < 256; ++bits) {
    const NatMatrix c{{bits & 3, (bits >> 2) & 3}, {(bits >> 4) & 3, (bits >> 6) & 3}};
    CHECK_FALSE(inverse_permutation_check(m, c));
  }
  try {
    inverse_permutation_check({{1, -1}, {0, 1}}, id);
    FAIL("negative entry accepted");
  } catch (const RigError& e) {
    CHECK(e.kind() == RigError::Kind::NegativeEntry);
  }
  CHECK_THROWS_AS(inverse_permutation_check(id, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), RigError);
}
