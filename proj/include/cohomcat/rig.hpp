#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cohomcat/group.hpp"
#include "cohomcat/report.hpp"

namespace cohomcat {

struct NgCategorification;
struct DoubleCategorification;

/// Finite-rank birig presented by N-valued structure constants on a basis.
class FusionBirig {
 public:
  explicit FusionBirig(std::vector<std::string> basis);

  std::size_t dimension() const { return basis_.size(); }
  const std::vector<std::string>& basis() const { return basis_; }

  /// Coefficient of c in a*b.
  std::uint64_t mult(std::size_t a, std::size_t b, std::size_t c) const { return mult_[(a * dim() + b) * dim() + c]; }
  /// Coefficient of b (x) c in Delta(a).
  std::uint64_t comult(std::size_t a, std::size_t b, std::size_t c) const {
    return comult_[(a * dim() + b) * dim() + c];
  }
  std::uint64_t unit(std::size_t a) const { return unit_[a]; }
  std::uint64_t counit(std::size_t a) const { return counit_[a]; }

  void set_mult(std::size_t a, std::size_t b, std::size_t c, std::uint64_t v) { mult_.at((a * dim() + b) * dim() + c) = v; }
  void set_comult(std::size_t a, std::size_t b, std::size_t c, std::uint64_t v) {
    comult_.at((a * dim() + b) * dim() + c) = v;
  }
  void set_unit(std::size_t a, std::uint64_t v) { unit_.at(a) = v; }
  void set_counit(std::size_t a, std::uint64_t v) { counit_.at(a) = v; }

  friend bool operator==(const FusionBirig&, const FusionBirig&) = default;

 private:
  std::size_t dim() const { return basis_.size(); }

  std::vector<std::string> basis_;
  std::vector<std::uint64_t> mult_;
  std::vector<std::uint64_t> comult_;
  std::vector<std::uint64_t> unit_;
  std::vector<std::uint64_t> counit_;
};

/// Brute-force check of associativity, unit, coassociativity, counit, and that Delta and
/// epsilon are rig homomorphisms. Violations carry basis indices.
Report verify_birig(const FusionBirig& b);

/// N[G]: g*h = gh, Delta(g) = g (x) g, unit e, epsilon(g) = 1.
FusionBirig group_birig(const FiniteGroup& g);

/// D(N[G]) on pairs (g, h^), index g*|G| + h:
/// (g,h^)(k,l^) = [k^-1 h k = l] (gk,l^), 1 = sum_h (e,h^),
/// Delta(g,h^) = sum_{kl=h} (g,k^) (x) (g,l^), epsilon(g,h^) = [h = e].
FusionBirig double_birig(const FiniteGroup& g);

/// Structure constants of the skeletal model; independent of the cochain data.
FusionBirig groth_birig_of(const NgCategorification& cat);
FusionBirig groth_birig_of(const DoubleCategorification& cat);

class RigError : public std::runtime_error {
 public:
  enum class Kind { NegativeEntry, DimensionMismatch, NotPermutation };
  RigError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

using NatMatrix = std::vector<std::vector<std::int64_t>>;

bool is_permutation_matrix(const NatMatrix& m);

/// True iff m * m2 = m2 * m = I. When they are inverse, both are checked to be permutation
/// matrices; a failure there would contradict the lemma and raises NotPermutation.
bool inverse_permutation_check(const NatMatrix& m, const NatMatrix& m2);

}  // namespace cohomcat
