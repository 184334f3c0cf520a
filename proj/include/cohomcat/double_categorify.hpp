#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cohomcat/cochain.hpp"
#include "cohomcat/group.hpp"
#include "cohomcat/homology.hpp"
#include "cohomcat/report.hpp"

namespace cohomcat {

class DoubleError : public std::runtime_error {
 public:
  enum class Kind { ConstraintViolated, InvalidTriple, OddModulus, InvalidParity, BadShape };
  DoubleError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Associator alpha (3,1), coherer phi (2,2), coassociator beta (1,3).
struct CocycleTriple {
  CocycleTriple(BiCochain alpha, BiCochain phi, BiCochain beta);
  static CocycleTriple zero(GroupPtr group, Modulus modulus);

  const GroupPtr& group() const { return alpha.group(); }
  const Modulus& modulus() const { return alpha.modulus(); }

  friend bool operator==(const CocycleTriple&, const CocycleTriple&) = default;

  BiCochain alpha;
  BiCochain phi;
  BiCochain beta;
};

/// Biunital data over a triple: the free choices rho0 = rho(e;k^) and r0 = r(g;e^) plus the
/// structure maps they determine.
struct DoubleCategorification {
  CocycleTriple triple;
  BiCochain rho0;    // (0,1)
  BiCochain r0;      // (1,0)
  BiCochain rho;     // (1,1)
  BiCochain lambda;  // (1,1)
  BiCochain r;       // (1,1)
  BiCochain l;       // (1,1)
  BiCochain tau;     // (2,0)
  BiCochain delta;   // (0,2)
  BiCochain eta;     // (0,0)
};

/// Data of a bitensor equivalence with identity underlying functor.
struct DoubleEquivalenceWitness {
  BiCochain f_tilde;                // (2,1)
  BiCochain f_sim;                  // (1,2)
  std::optional<BiCochain> f0;      // (0,1)
  std::optional<BiCochain> f_sup0;  // (1,0)
};

/// The four coherence equations (pentagon, the two compatibility cubes, dual pentagon), each
/// checked at every index tuple exactly as written for the scalars.
Report verify_triple(const CocycleTriple& t);

/// Matrix whose kernel is the set of valid triples: one row per equation instance, columns
/// [alpha | phi | beta]. Assembled from the same equation code as verify_triple.
SparseMatrix triple_condition_matrix(const FiniteGroup& g);

/// Columns [f_tilde | f_sim], rows [alpha | phi | beta]:
///   alpha - alpha' = d1(f_tilde)
///   phi - phi'     = -d2(f_tilde) + d1(f_sim)
///   beta - beta'   = -d2(f_sim)
SparseMatrix equivalence_matrix(const FiniteGroup& g);

std::vector<Residue> flatten(const CocycleTriple& t);
CocycleTriple unflatten_triple(GroupPtr group, Modulus modulus, std::span<const Residue> values);

/// The triple t' related to t by witness w, i.e. t - t' = equivalence_matrix * (f_tilde, f_sim).
CocycleTriple apply_witness(const CocycleTriple& t, const BiCochain& f_tilde, const BiCochain& f_sim);

/// Derives rho, lambda, r, l, tau, delta, eta from (t, rho0, r0). Throws InvalidTriple if t
/// fails verify_triple and ConstraintViolated if delta is not invariant under simultaneous
/// conjugation.
DoubleCategorification build_double_biunital(const CocycleTriple& t, const BiCochain& rho0, const BiCochain& r0);

/// The twelve unit/counit coherence rows plus the delta invariance condition.
Report verify_coherence_table(const DoubleCategorification& dc);

/// Whether any unit/counit data at all (rho, lambda, r, l, tau, delta, eta treated as free
/// unknowns) satisfies the twelve rows for the given triple. Returns such data if so.
std::optional<DoubleCategorification> solve_coherence_table(const CocycleTriple& t);

/// Adds the total coboundary of (0, f_sim) with f_sim(g;k^,l^) = phi(e,e;k^,l^), giving an
/// equivalent triple with phi'(e,e;.,.) = 0.
std::pair<CocycleTriple, DoubleEquivalenceWitness> normalize_triple(const CocycleTriple& t);

/// Witness (f_tilde, f_sim) relating two valid triples, or nullopt.
std::optional<DoubleEquivalenceWitness> equivalent_double(const CocycleTriple& a, const CocycleTriple& b);

/// Equivalence of biunital categorifications: the triple witness plus
///   f0(k^)  = rho0(k^) - rho0'(k^) - f_tilde(e,e;k^)
///   f^0(g)  = r0(g) - r0'(g) - f_sim(g;e^,e^)
std::optional<DoubleEquivalenceWitness> equivalent_double(const DoubleCategorification& a,
                                                          const DoubleCategorification& b);

/// ker(triple_condition_matrix) / im(equivalence_matrix) with representative triples.
CohomologyResult classify_double(const GroupPtr& group, const Modulus& modulus);

/// Generators of the module of valid triples, as flattened vectors.
std::vector<std::vector<Residue>> triple_cocycle_generators(const GroupPtr& group, const Modulus& modulus);

/// (0, 0, beta) with beta(g;i^,j^,k^) = N/2 when g, i, j, k are all odd, else 0.
CocycleTriple beta_example(const ParityMap& parity, const Modulus& modulus);

}  // namespace cohomcat
