#pragma once

#include "mcgcoh/int_matrix.hpp"
#include "mcgcoh/kernels.hpp"
#include "mcgcoh/presentation.hpp"
#include "mcgcoh/smith.hpp"
#include "mcgcoh/symplectic.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mcgcoh {

/// Values u(g) of a candidate cocycle on each generator.
class CocycleAssignment {
 public:
  CocycleAssignment() = default;
  CocycleAssignment(std::vector<std::string> generators, std::vector<IntVector> values, std::size_t dimension,
                    std::optional<int> genus = std::nullopt);

  static CocycleAssignment zero(const Representation& rep);
  /// Splits a vector of M^r (generator blocks of length dimension) into values.
  static CocycleAssignment from_flat(const Representation& rep, std::span<const Integer> flat);

  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const std::vector<IntVector>& values() const noexcept { return values_; }
  std::size_t dimension() const noexcept { return dimension_; }
  std::optional<int> genus() const noexcept { return genus_; }

  const IntVector& value(std::size_t i) const { return values_.at(i); }
  const IntVector& value(std::string_view name) const;
  void set(std::string_view name, IntVector v);

  /// Concatenation of all values in generator order.
  IntVector flat() const;
  bool is_zero() const;

  CocycleAssignment& operator+=(const CocycleAssignment& o);
  friend CocycleAssignment operator+(CocycleAssignment a, const CocycleAssignment& b) { return a += b; }
  friend CocycleAssignment operator-(CocycleAssignment a, const CocycleAssignment& b);
  friend CocycleAssignment operator*(const Integer& s, CocycleAssignment a);
  friend bool operator==(const CocycleAssignment&, const CocycleAssignment&) = default;

 private:
  std::vector<std::string> generators_;
  std::vector<IntVector> values_;
  std::size_t dimension_ = 0;
  std::optional<int> genus_;
};

/// u(w) by the cocycle rule u(gh) = u(g) + g u(h), with
/// u(g^-1) = -g^-1 u(g). `w` indexes the representation's generators.
IntVector evaluate(const CocycleAssignment& u, const Representation& rep, const Word& w);

/// (1 - g h g^-1) u(g) + g u(h); agrees with evaluate on g h g^-1.
IntVector conjugate_value(const CocycleAssignment& u, const Representation& rep, const Word& g, const Word& h);

/// Row block per relator, column block per generator; its kernel is Z^1.
IntMatrix relator_system(const Presentation& p, const Representation& rep,
                         Execution execution = Execution::parallel);

/// g -> (1 - rho(g)) m.
CocycleAssignment coboundary(const Representation& rep, std::span<const Integer> m);
CocycleAssignment coboundary(const Representation& rep, const HomologyVector& m);

struct RelatorCheck {
  std::size_t relator_index = 0;
  bool ok = false;
  IntVector residue;
};

struct VerificationReport {
  std::vector<RelatorCheck> checks;

  bool passed() const;
  std::size_t failures() const;
};

VerificationReport verify_cocycle(const CocycleAssignment& u, const Presentation& p, const Representation& rep);

struct CohomologyResult {
  AbelianInvariants h1;
  std::size_t z1_rank = 0;
  std::size_t b1_rank = 0;
  std::vector<CocycleAssignment> z1_basis;
  /// Cocycles whose classes generate the free part of H^1.
  std::vector<CocycleAssignment> generator_cocycles;
  /// Cocycles whose classes generate the torsion summands, in order.
  std::vector<CocycleAssignment> torsion_cocycles;
};

CohomologyResult compute_h1(const Presentation& p, const Representation& rep,
                            Execution execution = Execution::parallel);

// Mapping class group specifics. These expect the Humphries representation
// (generators c1, b1, ..., cg, bg, a2).

/// a2 on the a2 generator, zero on every other generator. genus >= 3.
CocycleAssignment theorem1_cocycle(int genus);

struct Adaptation {
  CocycleAssignment adapted;
  HomologyVector shift;
};

/// Adds the coboundary of sum_j (y_j a_j - x_j b_j), where x_j is the a_j
/// coefficient of u(tau_alpha_j) and y_j the b_j coefficient of u(tau_beta_j).
/// Checks that u satisfies the Wajnryb relators first (NotACocycle).
Adaptation adapt_to_S(const CocycleAssignment& u, const Representation& rep);

/// From an S-adapted cocycle with u(tau_gamma_j) = q_j c_j, adds the
/// coboundary of sum_j r_j b_j (r_1 = 0, r_j = r_{j-1} + q_j) so the result
/// vanishes on every beta_j and gamma_j twist.
Adaptation adapt_to_Sprime(const CocycleAssignment& u, const Representation& rep);

/// Whether the [eta]-coefficient of u(tau_eta) vanishes for every alpha_j, beta_j.
bool is_adapted_to_S(const CocycleAssignment& u, const Representation& rep);

/// Both adaptations followed by a sign flip making the first nonzero entry
/// positive. Deterministic representative of +-[u].
CocycleAssignment canonical_cocycle(const CocycleAssignment& u, const Representation& rep);

/// compute_h1 on the Wajnryb presentation with the Humphries representation;
/// free generators are canonicalized.
CohomologyResult compute_mapping_class_h1(int genus, Execution execution = Execution::parallel);

}  // namespace mcgcoh
