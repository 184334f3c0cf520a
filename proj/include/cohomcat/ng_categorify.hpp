#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "cohomcat/cochain.hpp"
#include "cohomcat/homology.hpp"
#include "cohomcat/report.hpp"

namespace cohomcat {

/// Which structure a categorification of N[G] carries.
enum class NgLevel { Algebra, Unital, Bialgebra, Biunital };

std::string to_string(NgLevel level);
/// Accepts "algebra", "unital", "bialgebra", "biunital".
NgLevel parse_ng_level(const std::string& name);

class NgError : public std::runtime_error {
 public:
  enum class Kind { MissingField, LevelMismatch, BadShape, InvalidCategorification };
  NgError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Skeletal categorification of N[G]: objects are group elements, g (x) h = gh, and all
/// structure maps are scalars, stored additively as residues mod N.
struct NgCategorification {
  NgCategorification(NgLevel level, BiCochain alpha);

  GroupPtr group() const { return alpha.group(); }
  const Modulus& modulus() const { return alpha.modulus(); }

  NgLevel level;
  BiCochain alpha;               // (3,0) associator
  std::optional<BiCochain> phi;  // (2,0) connecting transformation
  std::optional<BiCochain> beta; // (1,0) coassociator; absent means identically 0
  std::optional<BiCochain> rho;  // (0,0) the scalar rho_e
  std::optional<BiCochain> r;    // (1,0) right counit

  // Derived by the builders; verify_ng recomputes any that are absent.
  std::optional<BiCochain> rho_cochain;  // (1,0) rho_g
  std::optional<BiCochain> lambda;       // (1,0)
  std::optional<BiCochain> l;            // (1,0)
  std::optional<BiCochain> tau;          // (2,0)
  std::optional<BiCochain> delta;        // (0,0)
  std::optional<BiCochain> eta;          // (0,0)
};

NgCategorification make_ng_algebra(BiCochain alpha);
/// rho_g = alpha(g,e,e) + rho, lambda_k = -alpha(e,e,k) + rho.
NgCategorification make_ng_unital(BiCochain alpha, BiCochain rho);
/// alpha = d1(phi), coassociator 0.
NgCategorification make_ng_bialgebra(BiCochain phi);
/// Every (phi, rho, r) is admissible; alpha = d1(phi) and the unit/counit data are derived:
/// l = r, tau = -d1(r) - phi, delta = -rho - phi(e,e), eta = rho + r(e) + phi(e,e).
NgCategorification build_ng_biunital(BiCochain phi, BiCochain rho, BiCochain r);

/// Checks every equation applicable at cat.level. Throws NgError::MissingField when the
/// level needs data that is absent.
Report verify_ng(const NgCategorification& cat);

struct NgEquivalenceWitness {
  BiCochain psi;                    // (2,0)
  std::optional<BiCochain> f0;      // (0,0), biunital level
  std::optional<BiCochain> f_sup0;  // (1,0), biunital level
};

/// A witness that a and b are equivalent, or nullopt. Both must pass verify_ng.
///  algebra:    alpha - alpha' = d1(psi)
///  unital:     additionally rho_g + psi(g,e) = rho'_g
///  bialgebra:  psi = phi - phi'
///  biunital:   psi = phi - phi', f0 = rho - rho' - psi(e,e), f^0 = r - r'
std::optional<NgEquivalenceWitness> equivalent_ng(const NgCategorification& a, const NgCategorification& b);

/// True when w satisfies the relations above for the pair (a, b).
bool check_ng_witness(const NgCategorification& a, const NgCategorification& b, const NgEquivalenceWitness& w);

/// H^3 of the row complex (C_{n,0}, d1): equivalence classes of algebra categorifications.
CohomologyResult classify_ng(const GroupPtr& group, const Modulus& modulus);

}  // namespace cohomcat
