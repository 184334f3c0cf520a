#include "cohomcat/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include "CLI11.hpp"

#include "cohomcat/json_io.hpp"
#include "cohomcat/parallel.hpp"

namespace cohomcat {

namespace {

struct Options {
  std::string group;
  std::uint32_t modulus = 0;
  std::string input;
  std::string other;
  std::string output;
  std::string kind;
  std::string parity;
  std::string rho0;
  std::string r0;
  std::size_t degree = 3;
  int row = -1;
  bool total = false;
  std::size_t threads = 0;
};

/// Exit with status 2 carrying a JSON body.
struct VerificationFailure {
  Json body;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GroupPtr load_group(const std::string& spec) {
  if (spec.empty()) throw UsageError("--group is required");
  if (spec.rfind("builtin:", 0) == 0) return std::make_shared<const FiniteGroup>(builtin_group(spec.substr(8)));
  return std::make_shared<const FiniteGroup>(group_from_json(read_json_file(spec)));
}

Modulus require_modulus(const Options& o) {
  if (o.modulus == 0) throw UsageError("--modulus is required");
  return Modulus(o.modulus);
}

void check_modulus(const Options& o, const Modulus& found) {
  if (o.modulus != 0 && o.modulus != found.value())
    throw UsageError("--modulus " + std::to_string(o.modulus) + " disagrees with input modulus " +
                     std::to_string(found.value()));
}

const std::string& require_input(const std::string& path, const char* flag) {
  if (path.empty()) throw UsageError(std::string(flag) + " is required");
  return path;
}

// Inline JSON (object or bare value list) or a path to a cochain file.
BiCochain cochain_argument(const std::string& arg, const char* flag, const GroupPtr& g, const Modulus& n,
                           Bidegree d) {
  const bool inline_json = !arg.empty() && (arg.front() == '{' || arg.front() == '[');
  Json j = inline_json ? parse_json_text(arg, flag) : read_json_file(arg);
  if (j.is_array()) j = Json{{"modulus", n.value()}, {"bidegree", {d.n, d.m}}, {"values", j}};
  BiCochain c = cochain_from_json(j, g, d, flag);
  if (!(c.modulus() == n)) throw UsageError(std::string(flag) + " has modulus " + std::to_string(c.modulus().value()));
  return c;
}

Json verify_double(const Json& doc, const GroupPtr& g, const Options& o, bool triple_only, bool& ok) {
  DoubleExtensionInput in = double_input_from_json(doc, g);
  check_modulus(o, in.triple.modulus());
  Report rep = verify_triple(in.triple);
  if (!triple_only && in.rho0 && in.r0 && rep.valid()) {
    try {
      rep.merge(verify_coherence_table(build_double_biunital(in.triple, *in.rho0, *in.r0)));
    } catch (const DoubleError& e) {
      if (e.kind() != DoubleError::Kind::ConstraintViolated) throw;
      ok = false;
      Json body = report_to_json(rep);
      body["valid"] = false;
      body["error"] = e.what();
      return body;
    }
  }
  ok = rep.valid();
  return report_to_json(rep);
}

int cmd_group(const Options& o, Json& result) {
  GroupPtr g;
  try {
    g = load_group(o.group);
  } catch (const GroupError& e) {
    result = Json{{"valid", false}, {"error", to_string(e.kind())}, {"indices", e.indices()}, {"message", e.what()}};
    return kExitVerificationFailed;
  }
  result = Json{{"valid", true}, {"group", group_to_json(*g)}, {"abelian", g->is_abelian()}};
  if (!o.parity.empty()) {
    try {
      result["parity"] = parity_to_json(parity_from_json(read_json_file(o.parity), g));
    } catch (const GroupError& e) {
      result = Json{{"valid", false}, {"error", to_string(e.kind())}, {"indices", e.indices()}, {"message", e.what()}};
      return kExitVerificationFailed;
    }
  }
  return kExitOk;
}

int cmd_cohomology(const Options& o, Json& result) {
  const GroupPtr g = load_group(o.group);
  const Modulus n = require_modulus(o);
  const std::size_t k = o.degree;
  if (o.total == (o.row >= 0)) throw UsageError("exactly one of --row 0 and --total is required");
  if (o.row > 0) throw UsageError("--row: only row 0 is supported");
  SparseMatrix d_in, d_out;
  if (o.total) {
    if (k == 0) throw UsageError("--degree must be at least 1 with --total");
    std::size_t src = 1;
    for (std::size_t i = 0; i <= k; ++i) src *= g->order();
    d_in = k == 1 ? SparseMatrix(src, 0) : total_differential_matrix(*g, k - 1);
    d_out = total_differential_matrix(*g, k);
  } else {
    d_in = k == 0 ? SparseMatrix(1, 0) : d1_twisted_matrix(*g, Bidegree{k - 1, 0});
    d_out = d1_twisted_matrix(*g, Bidegree{k, 0});
  }
  result = cohomology_to_json(cohomology(d_in, d_out, n));
  return kExitOk;
}

int cmd_verify(const Options& o, Json& result) {
  bool ok = false;
  if (o.kind == "birig") {
    const FusionBirig b =
        o.input.empty() ? double_birig(*load_group(o.group)) : birig_from_json(read_json_file(o.input));
    const Report rep = verify_birig(b);
    ok = rep.valid();
    result = report_to_json(rep);
  } else {
    const Json doc = read_json_file(require_input(o.input, "--input"));
    const GroupPtr g = load_group(o.group);
    if (o.kind == "ng") {
      const NgCategorification cat = ng_from_json(doc, g);
      check_modulus(o, cat.modulus());
      const Report rep = verify_ng(cat);
      ok = rep.valid();
      result = report_to_json(rep);
    } else if (o.kind == "double" || o.kind == "triple") {
      result = verify_double(doc, g, o, o.kind == "triple", ok);
    } else {
      throw UsageError("--kind must be ng, double, triple or birig");
    }
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_classify(const Options& o, Json& result) {
  const GroupPtr g = load_group(o.group);
  const Modulus n = require_modulus(o);
  if (o.kind == "ng")
    result = cohomology_to_json(classify_ng(g, n));
  else if (o.kind == "double")
    result = cohomology_to_json(classify_double(g, n));
  else
    throw UsageError("--kind must be ng or double");
  return kExitOk;
}

int cmd_equiv(const Options& o, Json& result) {
  const GroupPtr g = load_group(o.group);
  const Json a = read_json_file(require_input(o.input, "--input"));
  const Json b = read_json_file(require_input(o.other, "--other"));
  try {
    if (o.kind == "ng") {
      const NgCategorification x = ng_from_json(a, g), y = ng_from_json(b, g);
      check_modulus(o, x.modulus());
      const auto w = equivalent_ng(x, y);
      result = Json{{"equivalent", w.has_value()}, {"witness", w ? witness_to_json(*w) : Json(nullptr)}};
    } else if (o.kind == "double" || o.kind == "triple") {
      const DoubleExtensionInput x = double_input_from_json(a, g), y = double_input_from_json(b, g);
      check_modulus(o, x.triple.modulus());
      std::optional<DoubleEquivalenceWitness> w;
      if (o.kind == "double" && x.rho0 && x.r0 && y.rho0 && y.r0) {
        w = equivalent_double(build_double_biunital(x.triple, *x.rho0, *x.r0),
                              build_double_biunital(y.triple, *y.rho0, *y.r0));
      } else {
        w = equivalent_double(x.triple, y.triple);
      }
      result = Json{{"equivalent", w.has_value()}, {"witness", w ? witness_to_json(*w) : Json(nullptr)}};
    } else {
      throw UsageError("--kind must be ng, double or triple");
    }
  } catch (const NgError& e) {
    if (e.kind() != NgError::Kind::InvalidCategorification) throw;
    throw VerificationFailure{Json{{"valid", false}, {"error", e.what()}}};
  } catch (const DoubleError& e) {
    if (e.kind() != DoubleError::Kind::InvalidTriple && e.kind() != DoubleError::Kind::ConstraintViolated) throw;
    throw VerificationFailure{Json{{"valid", false}, {"error", e.what()}}};
  }
  return kExitOk;
}

int cmd_extend(const Options& o, Json& result) {
  const GroupPtr g = load_group(o.group);
  DoubleExtensionInput in = double_input_from_json(read_json_file(require_input(o.input, "--input")), g);
  const Modulus n = in.triple.modulus();
  check_modulus(o, n);
  if (!o.rho0.empty()) in.rho0 = cochain_argument(o.rho0, "--rho0", g, n, {0, 1});
  if (!o.r0.empty()) in.r0 = cochain_argument(o.r0, "--r0", g, n, {1, 0});
  if (!in.rho0) throw UsageError("--rho0 is required");
  if (!in.r0) throw UsageError("--r0 is required");
  try {
    const DoubleCategorification dc = build_double_biunital(in.triple, *in.rho0, *in.r0);
    const Report rep = verify_coherence_table(dc);
    result = Json{{"categorification", categorification_to_json(dc)}, {"report", report_to_json(rep)}};
    return rep.valid() ? kExitOk : kExitVerificationFailed;
  } catch (const DoubleError& e) {
    if (e.kind() != DoubleError::Kind::InvalidTriple && e.kind() != DoubleError::Kind::ConstraintViolated) throw;
    throw VerificationFailure{Json{{"valid", false}, {"error", e.what()}}};
  }
}

int cmd_normalize(const Options& o, Json& result) {
  const GroupPtr g = load_group(o.group);
  const CocycleTriple t = triple_from_json(read_json_file(require_input(o.input, "--input")), g);
  check_modulus(o, t.modulus());
  try {
    const auto [tn, w] = normalize_triple(t);
    result = Json{{"triple", triple_to_json(tn)}, {"witness", witness_to_json(w)}};
  } catch (const DoubleError& e) {
    if (e.kind() != DoubleError::Kind::InvalidTriple) throw;
    throw VerificationFailure{Json{{"valid", false}, {"error", e.what()}}};
  }
  return kExitOk;
}

int cmd_example_beta(const Options& o, Json& result) {
  const GroupPtr g = load_group(o.group);
  const Modulus n = require_modulus(o);
  const ParityMap p = o.parity.empty() ? ParityMap::sign(g) : parity_from_json(read_json_file(o.parity), g);
  result = triple_to_json(beta_example(p, n));
  return kExitOk;
}

std::size_t resolve_threads(std::size_t flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("COHOMCAT_THREADS")) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("COHOMCAT_THREADS='") + env + "' is not a positive integer");
  }
  return 1;
}

void emit(const Json& j, const std::string& path, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Skeletal categorifications of N[G] and D(N[G]): cochains, cohomology, coherence checks", "cohomcat"};
  app.require_subcommand(1);

  auto common = [&o](CLI::App* sub) {
    sub->add_option("--group", o.group, "builtin:<name> (c1..c8, s3, c2xc2) or a group JSON file");
    sub->add_option("--modulus", o.modulus, "coefficient modulus N >= 2");
    sub->add_option("--output", o.output, "write the JSON report here instead of stdout");
    sub->add_option("--threads", o.threads, "worker threads (fallback: COHOMCAT_THREADS)");
  };

  auto* group = app.add_subcommand("group", "show and validate a group (and optional parity map)");
  common(group);
  group->add_option("--parity", o.parity, "parity map JSON file");

  auto* coh = app.add_subcommand("cohomology", "H^k of the row-0 complex or of the total complex");
  common(coh);
  coh->add_option("--degree", o.degree, "cohomological degree")->capture_default_str();
  coh->add_option("--row", o.row, "use the m = 0 row complex (only 0 is meaningful)");
  coh->add_flag("--total", o.total, "use the total complex");

  auto* verify = app.add_subcommand("verify", "check the coherence equations of an input");
  common(verify);
  verify->add_option("--kind", o.kind, "ng | double | triple | birig")->required();
  verify->add_option("--input", o.input, "input JSON file");

  auto* classify = app.add_subcommand("classify", "equivalence classes as a Z/N-module");
  common(classify);
  classify->add_option("--kind", o.kind, "ng | double")->required();

  auto* equiv = app.add_subcommand("equiv", "decide equivalence of two inputs and print a witness");
  common(equiv);
  equiv->add_option("--kind", o.kind, "ng | double | triple")->required();
  equiv->add_option("--input", o.input, "first input JSON file");
  equiv->add_option("--other", o.other, "second input JSON file");

  auto* extend = app.add_subcommand("extend", "build the biunital structure over a triple");
  common(extend);
  extend->add_option("--input", o.input, "triple JSON file");
  extend->add_option("--rho0", o.rho0, "rho(e;k^): inline JSON or file");
  extend->add_option("--r0", o.r0, "r(g;e^): inline JSON or file");

  auto* normalize = app.add_subcommand("normalize", "equivalent triple with phi(e,e;.,.) = 0");
  common(normalize);
  normalize->add_option("--input", o.input, "triple JSON file");

  auto* beta = app.add_subcommand("example-beta", "the parity triple (0, 0, beta)");
  common(beta);
  beta->add_option("--parity", o.parity, "parity map JSON file (default: permutation sign)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitInputError;
  }

  Json result;
  int code = kExitOk;
  try {
    set_thread_count(resolve_threads(o.threads));
    if (group->parsed())
      code = cmd_group(o, result);
    else if (coh->parsed())
      code = cmd_cohomology(o, result);
    else if (verify->parsed())
      code = cmd_verify(o, result);
    else if (classify->parsed())
      code = cmd_classify(o, result);
    else if (equiv->parsed())
      code = cmd_equiv(o, result);
    else if (extend->parsed())
      code = cmd_extend(o, result);
    else if (normalize->parsed())
      code = cmd_normalize(o, result);
    else
      code = cmd_example_beta(o, result);
    emit(result, o.output, out);
  } catch (const VerificationFailure& f) {
    try {
      emit(f.body, o.output, out);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kExitInputError;
    }
    return kExitVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return code;
}

}  // namespace cohomcat
