#include "cohomcat/json_io.hpp"

#include <fstream>
#include <sstream>

namespace cohomcat {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw JsonFormatError(where.empty() ? "/" : where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw JsonFormatError(where + "/" + key, "missing");
  return *it;
}

std::uint64_t natural(const Json& j, const std::string& where) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(j.get<std::int64_t>());
  throw JsonFormatError(where, "expected a non-negative integer");
}

std::vector<std::uint32_t> natural_list(const Json& j, const std::string& where) {
  if (!j.is_array()) throw JsonFormatError(where, "expected an array");
  std::vector<std::uint32_t> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::uint64_t v = natural(j[i], where + "/" + std::to_string(i));
    if (v > 0xffffffffu) throw JsonFormatError(where + "/" + std::to_string(i), "value too large");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

std::pair<std::size_t, std::size_t> split_pair(const std::string& key, const std::string& where) {
  const auto comma = key.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument("no comma");
    std::size_t used = 0;
    const std::size_t a = std::stoul(key.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument("junk");
    const std::string rest = key.substr(comma + 1);
    const std::size_t b = std::stoul(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("junk");
    return {a, b};
  } catch (const std::exception&) {
    throw JsonFormatError(where, "key '" + key + "' is not of the form \"i,j\"");
  }
}

std::size_t single_key(const std::string& key, const std::string& where) {
  try {
    std::size_t used = 0;
    const std::size_t a = std::stoul(key, &used);
    if (used != key.size()) throw std::invalid_argument("junk");
    return a;
  } catch (const std::exception&) {
    throw JsonFormatError(where, "key '" + key + "' is not an index");
  }
}

std::optional<BiCochain> optional_cochain(const Json& j, const char* key, const GroupPtr& g, Bidegree d) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return cochain_from_json(*it, g, d, std::string("/") + key);
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw JsonFormatError(source, std::string("parse error: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw JsonFormatError(path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

FiniteGroup group_from_json(const Json& j) {
  if (!j.is_object()) throw JsonFormatError("/", "group must be an object");
  if (j.contains("generators") || j.contains("degree")) {
    const std::size_t degree = natural(field(j, "degree", ""), "/degree");
    const Json& gens = field(j, "generators", "");
    if (!gens.is_array()) throw JsonFormatError("/generators", "expected an array");
    std::vector<Permutation> perms;
    for (std::size_t i = 0; i < gens.size(); ++i) perms.push_back(natural_list(gens[i], "/generators/" + std::to_string(i)));
    return FiniteGroup::from_permutations(degree, perms);
  }
  const Json& rows = field(j, "table", "");
  if (!rows.is_array()) throw JsonFormatError("/table", "expected an array of rows");
  std::vector<std::vector<Element>> table;
  for (std::size_t i = 0; i < rows.size(); ++i) table.push_back(natural_list(rows[i], "/table/" + std::to_string(i)));
  std::vector<std::string> names;
  if (auto it = j.find("names"); it != j.end()) {
    if (!it->is_array()) throw JsonFormatError("/names", "expected an array of strings");
    for (std::size_t i = 0; i < it->size(); ++i) {
      if (!(*it)[i].is_string()) throw JsonFormatError("/names/" + std::to_string(i), "expected a string");
      names.push_back((*it)[i].get<std::string>());
    }
  }
  FiniteGroup g = FiniteGroup::from_cayley(table, std::move(names));
  if (auto it = j.find("order"); it != j.end() && natural(*it, "/order") != g.order())
    throw JsonFormatError("/order", "does not match the table size " + std::to_string(g.order()));
  if (auto it = j.find("identity"); it != j.end() && natural(*it, "/identity") != g.identity())
    throw JsonFormatError("/identity", "table identity is " + std::to_string(g.identity()));
  return g;
}

Json group_to_json(const FiniteGroup& g) {
  return Json{{"order", g.order()}, {"identity", g.identity()}, {"table", g.table()}, {"names", g.names()}};
}

ParityMap parity_from_json(const Json& j, GroupPtr group) {
  const auto bits = natural_list(field(j, "parity", ""), "/parity");
  std::vector<std::uint8_t> p;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] > 1) throw JsonFormatError("/parity/" + std::to_string(i), "parity must be 0 or 1");
    p.push_back(static_cast<std::uint8_t>(bits[i]));
  }
  return ParityMap::create(std::move(group), std::move(p));
}

Json parity_to_json(const ParityMap& p) {
  Json bits = Json::array();
  for (auto b : p.values()) bits.push_back(int(b));
  return Json{{"parity", bits}};
}

BiCochain cochain_from_json(const Json& j, const GroupPtr& group, std::optional<Bidegree> want,
                            const std::string& where) {
  const std::uint64_t n = natural(field(j, "modulus", where), where + "/modulus");
  if (n < 2 || n > kMaxModulus) throw JsonFormatError(where + "/modulus", "modulus out of range");
  const auto bd = natural_list(field(j, "bidegree", where), where + "/bidegree");
  if (bd.size() != 2) throw JsonFormatError(where + "/bidegree", "expected [n, m]");
  const Bidegree d{bd[0], bd[1]};
  if (d.arity() > kMaxArity) throw JsonFormatError(where + "/bidegree", "arity too large");
  if (want && !(*want == d))
    throw JsonFormatError(where + "/bidegree", "expected " + to_string(*want) + ", got " + to_string(d));
  auto values = natural_list(field(j, "values", where), where + "/values");
  try {
    return BiCochain::from_values(group, Modulus(static_cast<std::uint32_t>(n)), d, std::move(values));
  } catch (const std::invalid_argument& e) {
    throw JsonFormatError(where + "/values", e.what());
  }
}

Json cochain_to_json(const BiCochain& c) {
  const auto v = c.values();
  return Json{{"modulus", c.modulus().value()},
              {"bidegree", {c.bidegree().n, c.bidegree().m}},
              {"values", std::vector<Residue>(v.begin(), v.end())}};
}

CocycleTriple triple_from_json(const Json& j, const GroupPtr& group) {
  BiCochain a = cochain_from_json(field(j, "alpha", ""), group, Bidegree{3, 1}, "/alpha");
  BiCochain p = cochain_from_json(field(j, "phi", ""), group, Bidegree{2, 2}, "/phi");
  BiCochain b = cochain_from_json(field(j, "beta", ""), group, Bidegree{1, 3}, "/beta");
  if (!(p.modulus() == a.modulus()) || !(b.modulus() == a.modulus()))
    throw JsonFormatError("/", "alpha, phi and beta must share one modulus");
  return CocycleTriple(std::move(a), std::move(p), std::move(b));
}

Json triple_to_json(const CocycleTriple& t) {
  return Json{{"alpha", cochain_to_json(t.alpha)}, {"phi", cochain_to_json(t.phi)}, {"beta", cochain_to_json(t.beta)}};
}

Json categorification_to_json(const DoubleCategorification& dc) {
  Json j = triple_to_json(dc.triple);
  j["rho0"] = cochain_to_json(dc.rho0);
  j["r0"] = cochain_to_json(dc.r0);
  j["rho"] = cochain_to_json(dc.rho);
  j["lambda"] = cochain_to_json(dc.lambda);
  j["r"] = cochain_to_json(dc.r);
  j["l"] = cochain_to_json(dc.l);
  j["tau"] = cochain_to_json(dc.tau);
  j["delta"] = cochain_to_json(dc.delta);
  j["eta"] = cochain_to_json(dc.eta);
  return j;
}

DoubleExtensionInput double_input_from_json(const Json& j, const GroupPtr& group) {
  DoubleExtensionInput in{triple_from_json(j, group), optional_cochain(j, "rho0", group, {0, 1}),
                          optional_cochain(j, "r0", group, {1, 0})};
  for (const auto* c : {&in.rho0, &in.r0})
    if (*c && !((*c)->modulus() == in.triple.modulus()))
      throw JsonFormatError("/", "rho0 and r0 must use the modulus of the triple");
  return in;
}

NgCategorification ng_from_json(const Json& j, const GroupPtr& group) {
  const Json& lv = field(j, "level", "");
  if (!lv.is_string()) throw JsonFormatError("/level", "expected a string");
  NgLevel level;
  try {
    level = parse_ng_level(lv.get<std::string>());
  } catch (const NgError& e) {
    throw JsonFormatError("/level", e.what());
  }
  auto phi = optional_cochain(j, "phi", group, Bidegree{2, 0});
  auto alpha = optional_cochain(j, "alpha", group, Bidegree{3, 0});
  if (!alpha) {
    if (!phi) throw JsonFormatError("/alpha", "missing");
    alpha = d1_twisted(*phi);
  }
  NgCategorification cat(level, std::move(*alpha));
  cat.phi = std::move(phi);
  cat.beta = optional_cochain(j, "beta", group, Bidegree{1, 0});
  cat.rho = optional_cochain(j, "rho", group, Bidegree{0, 0});
  cat.r = optional_cochain(j, "r", group, Bidegree{1, 0});
  for (const auto* c : {&cat.phi, &cat.beta, &cat.rho, &cat.r})
    if (*c && !((*c)->modulus() == cat.modulus())) throw JsonFormatError("/", "all cochains must share one modulus");
  return cat;
}

Json ng_to_json(const NgCategorification& cat) {
  Json j{{"level", to_string(cat.level)}, {"alpha", cochain_to_json(cat.alpha)}};
  auto put = [&j](const char* key, const std::optional<BiCochain>& c) {
    if (c) j[key] = cochain_to_json(*c);
  };
  put("phi", cat.phi);
  put("beta", cat.beta);
  put("rho", cat.rho);
  put("r", cat.r);
  put("rho_cochain", cat.rho_cochain);
  put("lambda", cat.lambda);
  put("l", cat.l);
  put("tau", cat.tau);
  put("delta", cat.delta);
  put("eta", cat.eta);
  return j;
}

Json witness_to_json(const DoubleEquivalenceWitness& w) {
  Json j{{"f_tilde", cochain_to_json(w.f_tilde)}, {"f_sim", cochain_to_json(w.f_sim)}};
  if (w.f0) j["f0"] = cochain_to_json(*w.f0);
  if (w.f_sup0) j["f_sup0"] = cochain_to_json(*w.f_sup0);
  return j;
}

Json witness_to_json(const NgEquivalenceWitness& w) {
  Json j{{"psi", cochain_to_json(w.psi)}};
  if (w.f0) j["f0"] = cochain_to_json(*w.f0);
  if (w.f_sup0) j["f_sup0"] = cochain_to_json(*w.f_sup0);
  return j;
}

Json report_to_json(const Report& r) {
  Json eqs = Json::array();
  for (const auto& t : r.equations())
    eqs.push_back(Json{{"equation", t.equation}, {"checked", t.checked}, {"failed", t.failed}});
  Json vs = Json::array();
  for (const auto& v : r.violations())
    vs.push_back(Json{{"equation", v.equation}, {"indices", v.indices}, {"lhs", v.lhs}, {"rhs", v.rhs}});
  return Json{{"valid", r.valid()}, {"equations", std::move(eqs)}, {"violations", std::move(vs)}};
}

FusionBirig birig_from_json(const Json& j) {
  const Json& basis = field(j, "basis", "");
  if (!basis.is_array()) throw JsonFormatError("/basis", "expected an array of labels");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!basis[i].is_string()) throw JsonFormatError("/basis/" + std::to_string(i), "expected a string");
    labels.push_back(basis[i].get<std::string>());
  }
  const std::size_t d = labels.size();
  FusionBirig b(std::move(labels));
  auto check = [d](std::size_t x, const std::string& where) {
    if (x >= d) throw JsonFormatError(where, "basis index " + std::to_string(x) + " out of range");
  };

  const Json& mult = field(j, "mult", "");
  if (!mult.is_object()) throw JsonFormatError("/mult", "expected an object");
  for (const auto& [key, row] : mult.items()) {
    const std::string w = "/mult/" + key;
    const auto [x, y] = split_pair(key, w);
    check(x, w);
    check(y, w);
    if (!row.is_object()) throw JsonFormatError(w, "expected an object");
    for (const auto& [ck, v] : row.items()) {
      const std::size_t c = single_key(ck, w + "/" + ck);
      check(c, w + "/" + ck);
      b.set_mult(x, y, c, natural(v, w + "/" + ck));
    }
  }
  const Json& comult = field(j, "comult", "");
  if (!comult.is_object()) throw JsonFormatError("/comult", "expected an object");
  for (const auto& [key, row] : comult.items()) {
    const std::string w = "/comult/" + key;
    const std::size_t a = single_key(key, w);
    check(a, w);
    if (!row.is_object()) throw JsonFormatError(w, "expected an object");
    for (const auto& [pk, v] : row.items()) {
      const auto [x, y] = split_pair(pk, w + "/" + pk);
      check(x, w + "/" + pk);
      check(y, w + "/" + pk);
      b.set_comult(a, x, y, natural(v, w + "/" + pk));
    }
  }
  const auto unit = natural_list(field(j, "unit", ""), "/unit");
  const auto counit = natural_list(field(j, "counit", ""), "/counit");
  if (unit.size() != d) throw JsonFormatError("/unit", "expected " + std::to_string(d) + " entries");
  if (counit.size() != d) throw JsonFormatError("/counit", "expected " + std::to_string(d) + " entries");
  for (std::size_t a = 0; a < d; ++a) {
    b.set_unit(a, unit[a]);
    b.set_counit(a, counit[a]);
  }
  return b;
}

Json birig_to_json(const FusionBirig& b) {
  const std::size_t d = b.dimension();
  Json mult = Json::object(), comult = Json::object();
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t c = 0; c < d; ++c) {
        const std::string ax = std::to_string(a) + "," + std::to_string(x);
        if (b.mult(a, x, c)) mult[ax][std::to_string(c)] = b.mult(a, x, c);
        if (b.comult(a, x, c)) comult[std::to_string(a)][std::to_string(x) + "," + std::to_string(c)] = b.comult(a, x, c);
      }
  std::vector<std::uint64_t> unit(d), counit(d);
  for (std::size_t a = 0; a < d; ++a) {
    unit[a] = b.unit(a);
    counit[a] = b.counit(a);
  }
  return Json{{"basis", b.basis()}, {"mult", std::move(mult)}, {"comult", std::move(comult)},
              {"unit", unit},        {"counit", counit}};
}

Json cohomology_to_json(const CohomologyResult& r) {
  return Json{{"invariant_factors", r.invariant_factors}, {"generators", r.generators}};
}

}  // namespace cohomcat
