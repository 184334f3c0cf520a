#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "cohomcat/cochain.hpp"
#include "cohomcat/double_categorify.hpp"
#include "cohomcat/group.hpp"
#include "cohomcat/homology.hpp"
#include "cohomcat/ng_categorify.hpp"
#include "cohomcat/report.hpp"
#include "cohomcat/rig.hpp"

namespace cohomcat {

using Json = nlohmann::json;

/// Malformed or inconsistent document. `where` is a JSON-pointer-like path.
class JsonFormatError : public std::runtime_error {
 public:
  JsonFormatError(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

Json parse_json_text(const std::string& text, const std::string& source);
Json read_json_file(const std::string& path);

/// {"order","identity","table","names"} or {"degree","generators"}.
FiniteGroup group_from_json(const Json& j);
Json group_to_json(const FiniteGroup& g);

ParityMap parity_from_json(const Json& j, GroupPtr group);
Json parity_to_json(const ParityMap& p);

/// {"modulus": N, "bidegree": [n, m], "values": [...]}. When `want` is given the bidegree
/// must match.
BiCochain cochain_from_json(const Json& j, const GroupPtr& group, std::optional<Bidegree> want = std::nullopt,
                            const std::string& where = "");
Json cochain_to_json(const BiCochain& c);

CocycleTriple triple_from_json(const Json& j, const GroupPtr& group);
Json triple_to_json(const CocycleTriple& t);

/// Every field, derived ones included.
Json categorification_to_json(const DoubleCategorification& dc);
/// Reads triple, rho0 and r0 only; derived fields are rebuilt by the caller.
struct DoubleExtensionInput {
  CocycleTriple triple;
  std::optional<BiCochain> rho0;
  std::optional<BiCochain> r0;
};
DoubleExtensionInput double_input_from_json(const Json& j, const GroupPtr& group);

NgCategorification ng_from_json(const Json& j, const GroupPtr& group);
Json ng_to_json(const NgCategorification& cat);

Json witness_to_json(const DoubleEquivalenceWitness& w);
Json witness_to_json(const NgEquivalenceWitness& w);

/// {"valid", "equations": [{"equation","checked","failed"}], "violations": [...]}.
Json report_to_json(const Report& r);

/// Structure constants as sparse maps: "mult" {"a,b": {"c": n}}, "comult" {"a": {"b,c": n}}.
FusionBirig birig_from_json(const Json& j);
Json birig_to_json(const FusionBirig& b);

Json cohomology_to_json(const CohomologyResult& r);

}  // namespace cohomcat
