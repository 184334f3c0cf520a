// One line per acceptance criterion. Run all of them, or one with --criterion k.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cohomcat/cochain.hpp"
#include "cohomcat/double_categorify.hpp"
#include "cohomcat/homology.hpp"
#include "cohomcat/ng_categorify.hpp"
#include "cohomcat/rig.hpp"
#include "oracles.hpp"

using namespace cohomcat;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

std::vector<std::pair<std::string, GroupPtr>> groups(std::initializer_list<const char*> names) {
  std::vector<std::pair<std::string, GroupPtr>> out;
  for (const char* n : names) out.emplace_back(n, share(builtin_group(n)));
  return out;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// A uniformly random Z/N-combination of the valid-triple generators, moved off the
// generator span by a random equivalence.
struct TripleSampler {
  GroupPtr g;
  Modulus n;
  std::vector<std::vector<Residue>> gens;

  TripleSampler(GroupPtr group, Modulus modulus)
      : g(std::move(group)), n(modulus), gens(triple_cocycle_generators(g, n)) {}

  CocycleTriple operator()(std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::uint32_t> pick(0, n.value() - 1);
    const CocycleTriple zero = CocycleTriple::zero(g, n);
    std::vector<std::uint64_t> acc(flatten(zero).size(), 0);
    for (const auto& v : gens) {
      const std::uint64_t c = pick(rng);
      for (std::size_t i = 0; i < v.size(); ++i) acc[i] += c * v[i];
    }
    std::vector<Residue> vals(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) vals[i] = static_cast<Residue>(acc[i] % n.value());
    const CocycleTriple t = unflatten_triple(g, n, vals);
    return apply_witness(t, oracle::random_cochain(g, n, {2, 1}, rng), oracle::random_cochain(g, n, {1, 2}, rng));
  }
};

Outcome differential_identities() {
  std::mt19937_64 rng(1);
  constexpr int kSamples = 100;
  std::size_t checks = 0, failures = 0;
  for (const auto& [name, g] : groups({"c2", "c3", "c4", "s3"})) {
    for (std::uint32_t nv : {2u, 3u, 4u, 6u, 12u}) {
      const Modulus n(nv);
      for (std::size_t a = 0; a <= 4; ++a)
        for (std::size_t nn = 0; nn <= a; ++nn) {
          const Bidegree d{nn, a - nn};
          for (int s = 0; s < kSamples; ++s) {
            const BiCochain f = oracle::random_cochain(g, n, d, rng);
            const BiCochain f1 = d1_twisted(f), f2 = d2_hatted(f);
            failures += !d1_twisted(f1).is_zero();
            failures += !d2_hatted(f2).is_zero();
            failures += !(d1_twisted(f2) == d2_hatted(f1));
            checks += 3;
          }
        }
      for (std::size_t k = 1; k <= 3; ++k)
        for (int s = 0; s < kSamples; ++s) {
          std::vector<BiCochain> comps;
          for (std::size_t nn = k; nn >= 1; --nn) comps.push_back(oracle::random_cochain(g, n, {nn, k + 1 - nn}, rng));
          const TotalCochain x = TotalCochain::from_components(std::move(comps));
          const TotalCochain dx = total_differential(total_differential(x));
          for (const auto& c : dx.components()) failures += !c.is_zero();
          ++checks;
        }
    }
  }
  return {failures == 0, fmt("%zu identities checked, %zu failed", checks, failures)};
}

Outcome pentagon_iff_cocycle() {
  std::mt19937_64 rng(2);
  std::size_t cocycles = 0, others = 0, disagreements = 0;
  for (const auto& [name, g] : groups({"c2", "c3", "s3"})) {
    for (std::uint32_t nv : {2u, 6u}) {
      const Modulus n(nv);
      const auto kernel = kernel_generators(d1_twisted_matrix(*g, {3, 1}), n);
      std::uniform_int_distribution<std::uint32_t> pick(0, nv - 1);
      auto random_cocycle = [&] {
        std::vector<std::uint64_t> acc(kernel.empty() ? 0 : kernel[0].size(), 0);
        for (const auto& v : kernel) {
          const std::uint64_t c = pick(rng);
          for (std::size_t i = 0; i < v.size(); ++i) acc[i] += c * v[i];
        }
        std::vector<Residue> vals(acc.size());
        for (std::size_t i = 0; i < acc.size(); ++i) vals[i] = static_cast<Residue>(acc[i] % nv);
        return BiCochain::from_values(g, n, {3, 1}, vals);
      };
      for (int s = 0; s < 30; ++s) {
        BiCochain alpha(g, n, {3, 1});
        switch (s % 3) {
          case 0: alpha = random_cocycle(); break;
          case 1: alpha = oracle::random_cochain(g, n, {3, 1}, rng); break;
          default: {
            alpha = random_cocycle();
            std::uniform_int_distribution<std::size_t> where(0, alpha.size() - 1);
            alpha.set_index(where(rng), alpha[0] + 1 + pick(rng) % (nv - 1));
          }
        }
        const BiCochain z2 = BiCochain(g, n, {2, 2}), z3 = BiCochain(g, n, {1, 3});
        const bool pentagon = verify_triple(CocycleTriple(alpha, z2, z3)).passed("pentagon");
        const bool cocycle = oracle::d1(alpha).is_zero();
        disagreements += pentagon != cocycle;
        (cocycle ? cocycles : others)++;
      }
    }
  }
  const bool both = cocycles > 0 && others > 0;
  return {disagreements == 0 && both,
          fmt("%zu cocycles, %zu non-cocycles, %zu disagreements", cocycles, others, disagreements)};
}

std::vector<std::uint64_t> factors(const CohomologyResult& r) { return r.invariant_factors; }

Outcome row_cohomology() {
  std::vector<std::string> problems;
  auto c2 = share(cyclic_group(2));
  const Modulus two(2);

  // Exhaustive over C2: every 3-cochain and every 2-cochain.
  std::set<std::vector<Residue>> cocycles, coboundaries;
  for (std::uint32_t bits = 0; bits < 256; ++bits) {
    const BiCochain a = BiCochain::from_function(c2, two, {3, 0}, [&](auto x) {
      return (bits >> (x[0] * 4 + x[1] * 2 + x[2])) & 1;
    });
    if (oracle::d1(a).is_zero()) cocycles.insert({a.values().begin(), a.values().end()});
  }
  for (std::uint32_t bits = 0; bits < 16; ++bits) {
    const BiCochain p =
        BiCochain::from_function(c2, two, {2, 0}, [&](auto x) { return (bits >> (x[0] * 2 + x[1])) & 1; });
    const BiCochain dp = oracle::d1(p);
    coboundaries.insert({dp.values().begin(), dp.values().end()});
  }
  const std::size_t classes = cocycles.size() / coboundaries.size();
  // An abelian group of order 2 is cyclic.
  const std::vector<std::uint64_t> exhaustive = classes == 1 ? std::vector<std::uint64_t>{} : std::vector<std::uint64_t>{classes};
  if (exhaustive != std::vector<std::uint64_t>{2}) problems.push_back("exhaustive oracle disagrees with [2]");
  if (factors(classify_ng(c2, two)) != exhaustive) problems.push_back("C2 fast route");

  for (std::uint32_t q : {2u, 3u, 4u}) {
    auto g = share(cyclic_group(q));
    const Modulus n(q);
    const SparseMatrix d2 = d1_twisted_matrix(*g, {2, 0}), d3 = d1_twisted_matrix(*g, {3, 0});
    const auto snf = factors(cohomology_integer_snf(IntMatrix::from_sparse(d2), IntMatrix::from_sparse(d3), n));
    const auto fast = factors(cohomology(d2, d3, n));
    if (snf != std::vector<std::uint64_t>{q}) problems.push_back(fmt("C%u via SNF", q));
    if (fast != snf) problems.push_back(fmt("C%u fast vs SNF", q));
    if (q == 2 || q == 3) {
      auto d = [](const BiCochain& f) { return oracle::d1(f); };
      const std::size_t dim = g->order() * g->order() * g->order();
      const std::size_t r3 = oracle::rank_mod_p(oracle::matrix_of(g, n, {3, 0}, d), q);
      const std::size_t r2 = oracle::rank_mod_p(oracle::matrix_of(g, n, {2, 0}, d), q);
      if (dim - r3 - r2 != fast.size()) problems.push_back(fmt("C%u rank oracle", q));
    }
  }
  std::string detail = fmt("C2: %zu cocycles / %zu coboundaries", cocycles.size(), coboundaries.size());
  for (const auto& p : problems) detail += "; " + p;
  return {problems.empty(), detail};
}

Outcome parity_example() {
  std::vector<std::string> problems;
  auto c2 = share(cyclic_group(2));
  const Modulus two(2);
  const CocycleTriple t = beta_example(ParityMap::create(c2, {0, 1}), two);
  const Report rep = verify_triple(t);
  for (const char* f : {"pentagon", "compatibility cube for Delta", "compatibility cube for tensor", "dual pentagon"})
    if (!rep.passed(f)) problems.push_back(std::string("C2 fails ") + f);
  if (rep.equations().size() != 4) problems.push_back("expected four equation families");
  const CocycleTriple zero = CocycleTriple::zero(c2, two);
  if (equivalent_double(t, zero)) problems.push_back("C2 solver finds a witness");

  // All 2^16 witnesses (f~ in C_{2,1}, f^ in C_{1,2}), images from the naive differentials.
  auto pack = [](std::initializer_list<const BiCochain*> parts) {
    std::uint64_t m = 0;
    std::size_t bit = 0;
    for (const BiCochain* c : parts)
      for (Residue v : c->values()) m |= static_cast<std::uint64_t>(v & 1) << bit++;
    return m;
  };
  std::vector<std::uint64_t> images;
  const BiCochain za(c2, two, {3, 1}), zp(c2, two, {2, 2}), zb(c2, two, {1, 3});
  for (std::size_t i = 0; i < 8; ++i) {
    BiCochain f(c2, two, {2, 1});
    f.set_index(i, 1);
    const BiCochain a = oracle::d1(f), p = -oracle::d2(f);
    images.push_back(pack({&a, &p, &zb}));
  }
  for (std::size_t i = 0; i < 8; ++i) {
    BiCochain f(c2, two, {1, 2});
    f.set_index(i, 1);
    const BiCochain p = oracle::d1(f), b = -oracle::d2(f);
    images.push_back(pack({&za, &p, &b}));
  }
  const std::uint64_t target = pack({&t.alpha, &t.phi, &t.beta});
  std::size_t hits = 0;
  std::uint64_t cur = 0;
  for (std::uint32_t k = 1; k < (1u << 16); ++k) {
    cur ^= images[std::countr_zero(k)];
    hits += cur == target;
  }
  if (hits) problems.push_back(fmt("exhaustive oracle found %zu witnesses", hits));

  auto s3 = share(symmetric_group_3());
  const CocycleTriple ts = beta_example(ParityMap::sign(s3), two);
  if (!verify_triple(ts).valid()) problems.push_back("S3 triple invalid");
  if (equivalent_double(ts, CocycleTriple::zero(s3, two))) problems.push_back("S3 solver finds a witness");

  // Independent rank test over F2 for S3: is (0,0,beta) in the span of the naive images?
  std::vector<std::vector<std::int64_t>> cols;
  auto column = [](std::initializer_list<const BiCochain*> parts) {
    std::vector<std::int64_t> v;
    for (const BiCochain* c : parts) v.insert(v.end(), c->values().begin(), c->values().end());
    return v;
  };
  const BiCochain sa(s3, two, {3, 1}), sp(s3, two, {2, 2}), sb(s3, two, {1, 3});
  for (std::size_t i = 0; i < sp.size() / s3->order(); ++i) {
    BiCochain f(s3, two, {2, 1});
    f.set_index(i, 1);
    const BiCochain a = oracle::d1(f), p = -oracle::d2(f);
    cols.push_back(column({&a, &p, &sb}));
  }
  for (std::size_t i = 0; i < sp.size() / s3->order(); ++i) {
    BiCochain f(s3, two, {1, 2});
    f.set_index(i, 1);
    const BiCochain p = oracle::d1(f), b = -oracle::d2(f);
    cols.push_back(column({&sa, &p, &b}));
  }
  const std::size_t r0 = oracle::rank_mod_p(cols, 2);
  cols.push_back(column({&ts.alpha, &ts.phi, &ts.beta}));
  const std::size_t r1 = oracle::rank_mod_p(cols, 2);
  if (r1 != r0 + 1) problems.push_back("S3 rank oracle says the triple is a coboundary");

  std::string detail = fmt("C2: 65535 nonzero witnesses, %zu hits; S3 rank %zu -> %zu", hits, r0, r1);
  for (const auto& p : problems) detail += "; " + p;
  return {problems.empty(), detail};
}

Outcome normalized_round_trip() {
  std::mt19937_64 rng(5);
  constexpr int kPerCase = 56;
  std::size_t total = 0, failures = 0, thrown = 0;
  for (const auto& [name, g] : groups({"c2", "c3", "s3"})) {
    for (std::uint32_t nv : {2u, 3u, 6u}) {
      const Modulus n(nv);
      const TripleSampler sample(g, n);
      std::uniform_int_distribution<std::uint32_t> pick(0, nv - 1);
      for (int s = 0; s < kPerCase; ++s, ++total) {
        const CocycleTriple t = sample(rng);
        try {
          const auto [tn, w] = normalize_triple(t);
          const std::uint32_t c = pick(rng);
          const BiCochain rho0 = BiCochain::from_function(g, n, {0, 1}, [&](auto) { return c; });
          const BiCochain r0 = oracle::random_cochain(g, n, {1, 0}, rng);
          failures += !verify_coherence_table(build_double_biunital(tn, rho0, r0)).valid();
        } catch (const std::exception&) {
          ++thrown;
        }
      }
    }
  }
  return {failures == 0 && thrown == 0 && total >= 500,
          fmt("%zu triples, %zu table failures, %zu exceptions", total, failures, thrown)};
}

Outcome ng_classification() {
  std::vector<std::string> problems;
  auto c2 = share(cyclic_group(2));
  const Modulus two(2);
  const auto cls = classify_ng(c2, two);
  if (cls.order() != 2) problems.push_back("classify_ng does not give 2 classes");

  std::vector<NgCategorification> cats;
  std::size_t oracle_cocycles = 0;
  for (std::uint32_t bits = 0; bits < 256; ++bits) {
    const BiCochain a = BiCochain::from_function(c2, two, {3, 0}, [&](auto x) {
      return (bits >> (x[0] * 4 + x[1] * 2 + x[2])) & 1;
    });
    oracle_cocycles += oracle::d1(a).is_zero();
    NgCategorification cat = make_ng_algebra(a);
    if (verify_ng(cat).valid()) cats.push_back(std::move(cat));
  }
  constexpr std::size_t kExpectedPentagonSolutions = 16;
  if (cats.size() != oracle_cocycles) problems.push_back("pentagon solutions differ from the d1 oracle");
  if (cats.size() != kExpectedPentagonSolutions)
    problems.push_back(fmt("expected %zu pentagon solutions among the 256 3-cochains, found %zu (d1 oracle: %zu)",
                           kExpectedPentagonSolutions, cats.size(), oracle_cocycles));

  auto partition = [](const auto& items, auto&& same) {
    std::vector<std::size_t> rep;
    std::size_t inconsistent = 0;
    for (std::size_t i = 0; i < items.size(); ++i) {
      std::size_t hits = 0;
      for (std::size_t r : rep) hits += same(items[r], items[i]);
      if (hits == 0) rep.push_back(i);
      if (hits > 1) ++inconsistent;
    }
    // Pairwise relation must be an equivalence: check symmetry and class membership fully.
    for (std::size_t i = 0; i < items.size(); ++i)
      for (std::size_t j = 0; j < items.size(); ++j)
        if (same(items[i], items[j]) != same(items[j], items[i])) ++inconsistent;
    return std::pair{rep.size(), inconsistent};
  };
  const auto same_ng = [](const NgCategorification& a, const NgCategorification& b) {
    return equivalent_ng(a, b).has_value();
  };
  const auto [algebra_classes, bad1] = partition(cats, same_ng);
  if (algebra_classes != 2 || bad1) problems.push_back(fmt("algebra level: %zu classes", algebra_classes));

  std::vector<NgCategorification> bialg;
  for (std::uint32_t bits = 0; bits < 16; ++bits)
    bialg.push_back(make_ng_bialgebra(
        BiCochain::from_function(c2, two, {2, 0}, [&](auto x) { return (bits >> (x[0] * 2 + x[1])) & 1; })));
  std::size_t invalid = 0;
  for (const auto& b : bialg) invalid += !verify_ng(b).valid();
  const auto [bialgebra_classes, bad2] = partition(bialg, same_ng);
  if (bialgebra_classes != 1 || bad2 || invalid) problems.push_back(fmt("bialgebra level: %zu classes", bialgebra_classes));

  std::string detail = fmt("%zu pentagon solutions in %zu classes; 16 bialgebra structures in %zu class(es)",
                           cats.size(), algebra_classes, bialgebra_classes);
  for (const auto& p : problems) detail += "; " + p;
  return {problems.empty(), detail};
}

Outcome equivalence_preserves_validity() {
  std::mt19937_64 rng(7);
  constexpr int kPerCase = 26;
  std::size_t total = 0, failures = 0;
  for (const auto& [name, g] : groups({"c2", "c3", "c4", "s3"})) {
    for (std::uint32_t nv : {2u, 6u}) {
      const Modulus n(nv);
      const TripleSampler sample(g, n);
      for (int s = 0; s < kPerCase; ++s, ++total) {
        const CocycleTriple t = sample(rng);
        failures += !verify_triple(t).valid();
        const CocycleTriple moved = apply_witness(t, oracle::random_cochain(g, n, {2, 1}, rng),
                                                  oracle::random_cochain(g, n, {1, 2}, rng));
        failures += !verify_triple(moved).valid();
      }
    }
  }
  return {failures == 0 && total >= 200, fmt("%zu triples moved, %zu invalid", total, failures)};
}

Outcome birig_axioms() {
  std::string detail;
  bool ok = true;
  for (const auto& [name, g] : groups({"c2", "c3", "c4", "s3"})) {
    const Report r = verify_birig(double_birig(*g));
    ok = ok && r.valid();
    std::size_t checked = 0;
    for (const auto& e : r.equations()) checked += e.checked;
    detail += fmt("%s%s: %zu instances%s", detail.empty() ? "" : ", ", name.c_str(), checked, r.valid() ? "" : " FAILED");
  }
  return {ok, detail};
}

Outcome inverse_matrices() {
  std::mt19937_64 rng(9);
  std::size_t inverse_pairs = 0, failures = 0;
  auto product = [](const NatMatrix& a, const NatMatrix& b) {
    NatMatrix c(a.size(), std::vector<std::int64_t>(a.size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t k = 0; k < a.size(); ++k)
        for (std::size_t j = 0; j < a.size(); ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
  };
  auto is_identity = [](const NatMatrix& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j)
        if (m[i][j] != (i == j)) return false;
    return true;
  };
  auto is_perm = [](const NatMatrix& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      std::int64_t row = 0, col = 0;
      for (std::size_t j = 0; j < m.size(); ++j) {
        if (m[i][j] != 0 && m[i][j] != 1) return false;
        row += m[i][j];
        col += m[j][i];
      }
      if (row != 1 || col != 1) return false;
    }
    return true;
  };
  std::uniform_int_distribution<int> size(1, 6), entry(0, 3), coin(0, 3);
  for (int s = 0; s < 1000; ++s) {
    const std::size_t d = size(rng);
    NatMatrix m(d, std::vector<std::int64_t>(d)), m2 = m;
    switch (coin(rng)) {
      case 0:
      case 1: {
        // A permutation and its transpose, sometimes with one entry bumped.
        std::vector<std::size_t> p(d);
        for (std::size_t i = 0; i < d; ++i) p[i] = i;
        std::shuffle(p.begin(), p.end(), rng);
        for (std::size_t i = 0; i < d; ++i) m[i][p[i]] = m2[p[i]][i] = 1;
        if (coin(rng) == 0) m[size(rng) % d][size(rng) % d] += 1 + entry(rng) % 3;
        break;
      }
      case 2: {
        std::bernoulli_distribution sparse(1.0 / d);
        for (auto* x : {&m, &m2})
          for (auto& row : *x)
            for (auto& v : row) v = sparse(rng) ? 1 + entry(rng) % 3 : 0;
        break;
      }
      default:
        for (auto* x : {&m, &m2})
          for (auto& row : *x)
            for (auto& v : row) v = entry(rng);
    }
    const bool inverse = is_identity(product(m, m2)) && is_identity(product(m2, m));
    try {
      if (inverse_permutation_check(m, m2) != inverse) ++failures;
    } catch (const RigError&) {
      ++failures;
    }
    if (inverse) {
      ++inverse_pairs;
      if (!is_perm(m) || !is_perm(m2)) ++failures;
    }
  }
  return {failures == 0 && inverse_pairs > 0, fmt("1000 pairs, %zu mutually inverse, %zu failures", inverse_pairs, failures)};
}

struct Captured {
  int status = -1;
  std::string out;
};

Captured capture(const std::string& command) {
  Captured c;
  FILE* p = popen((command + " 2>/dev/null").c_str(), "r");
  if (!p) return c;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), p)) > 0) c.out.append(buf.data(), got);
  c.status = pclose(p);
  return c;
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

Outcome deterministic_cli(const std::string& cli, const std::string& fixtures) {
  if (cli.empty() || fixtures.empty()) return {false, "needs --cli and --fixtures"};
  auto f = [&](const char* name) { return quote(fixtures + "/" + name); };
  const std::vector<std::string> commands{
      "verify --kind double --group builtin:c2 --modulus 2 --input " + f("beta_parity_triple.json"),
      "verify --kind double --group builtin:s3 --input " + f("beta_s3_sign_triple.json"),
      "verify --kind ng --group builtin:c3 --input " + f("ng_c3_biunital.json"),
      "cohomology --group builtin:c2 --modulus 2 --degree 3 --row 0",
      "cohomology --group builtin:s3 --modulus 6 --degree 3 --total",
      "classify --kind double --group builtin:c4 --modulus 2",
      "equiv --kind ng --group builtin:c2 --input " + f("ng_c2_nontrivial.json") + " --other " + f("ng_c2_trivial.json"),
      "normalize --group builtin:s3 --input " + f("beta_s3_sign_triple.json"),
      "extend --group builtin:s3 --input " + f("beta_s3_sign_triple.json") + " --rho0 '[1,1,1,1,1,1]' --r0 '[0,1,1,0,1,0]'",
      "example-beta --group " + f("s3_perm.json") + " --modulus 4",
      "group --group " + f("not_a_group.json"),
  };
  std::size_t runs = 0, mismatches = 0, empty = 0;
  for (const auto& cmd : commands) {
    const std::string base = quote(cli) + " " + cmd;
    const Captured ref = capture(base + " --threads 1");
    empty += ref.out.empty();
    for (const std::string& variant :
         {base + " --threads 1", base + " --threads 4", "COHOMCAT_THREADS=3 " + base, base + " --threads 2"}) {
      const Captured c = capture(variant);
      ++runs;
      mismatches += c.status != ref.status || c.out != ref.out;
    }
  }
  return {mismatches == 0 && empty == 0,
          fmt("%zu commands, %zu repeated runs, %zu mismatches, %zu empty", commands.size(), runs, mismatches, empty)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  int only = 0;
  std::string cli, fixtures;
  app.add_option("--criterion", only, "run only this criterion (1-10)");
  app.add_option("--cli", cli, "path to the cohomcat executable");
  app.add_option("--fixtures", fixtures, "fixture directory");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> all{
      {1, "differential identities on random cochains", 30, differential_identities},
      {2, "pentagon holds iff alpha is a d1-cocycle", 5, pentagon_iff_cocycle},
      {3, "degree-3 row cohomology of C2, C3, C4", 10, row_cohomology},
      {4, "parity triple is valid and not equivalent to zero", 60, parity_example},
      {5, "normalized triples extend to biunital data", 60, normalized_round_trip},
      {6, "classification of N[C2] categorifications", 10, ng_classification},
      {7, "equivalence relations preserve validity", 30, equivalence_preserves_validity},
      {8, "birig axioms for the double of N[G]", 30, birig_axioms},
      {9, "mutually inverse N-matrices are permutations", 5, inverse_matrices},
      {10, "CLI reports are byte-identical across runs and threads", 60,
       [&] { return deterministic_cli(cli, fixtures); }},
  };

  int failed = 0, ran = 0;
  for (const auto& c : all) {
    if (only && c.id != only) continue;
    ++ran;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << ": " << c.name << " -- "
              << o.detail << " [" << std::fixed << std::setprecision(2) << secs << " s, limit " << std::setprecision(0)
              << c.limit_seconds << " s" << (in_time ? "" : ", TOO SLOW") << "]\n";
  }
  if (ran == 0) {
    std::cerr << "no criterion " << only << "\n";
    return 1;
  }
  return failed ? 1 : 0;
}
