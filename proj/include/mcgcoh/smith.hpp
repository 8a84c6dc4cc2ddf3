#pragma once

#include "mcgcoh/int_matrix.hpp"
#include "mcgcoh/kernels.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace mcgcoh {

/// u * original * v == d, with u and v unimodular and the diagonal of d a
/// nonnegative divisibility chain. `u_inverse` is only filled when requested.
struct SnfResult {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  IntMatrix u_inverse;
  std::size_t rank = 0;

  std::vector<Integer> diagonal() const;
};

struct SnfOptions {
  bool want_u = true;
  bool want_v = true;
  bool want_u_inverse = false;
  Execution execution = Execution::parallel;
};

SnfResult snf(const IntMatrix& m, const SnfOptions& options = {});

/// Z-basis of {x : m x = 0}.
std::vector<IntVector> kernel_basis(const IntMatrix& m, Execution execution = Execution::parallel);

/// Inverse of a square matrix with determinant +-1.
IntMatrix inverse_unimodular(const IntMatrix& m);

/// Shape of a finitely generated abelian group: Z^rank + sum Z/t_i, with
/// each t_i >= 2 dividing the next.
struct AbelianInvariants {
  std::size_t rank = 0;
  std::vector<Integer> torsion;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

std::string to_string(const AbelianInvariants& inv);

/// Quotient of the lattice spanned by a basis by a sublattice, together with
/// lattice vectors whose classes generate the free part and the cyclic
/// torsion summands (same order as `invariants.torsion`).
struct QuotientDecomposition {
  AbelianInvariants invariants;
  std::vector<IntVector> free_generators;
  std::vector<IntVector> torsion_generators;
  /// Coordinates of each sub-generator in the ambient basis.
  IntMatrix sub_coordinates;
};

/// Ambient vectors must be linearly independent (DependentBasis otherwise);
/// each sub-generator must be an integer combination of them
/// (SubgroupNotContained otherwise).
QuotientDecomposition quotient_decomposition(std::span<const IntVector> ambient_basis,
                                             std::span<const IntVector> sub_generators,
                                             Execution execution = Execution::parallel);

AbelianInvariants quotient_invariants(std::span<const IntVector> ambient_basis,
                                      std::span<const IntVector> sub_generators,
                                      Execution execution = Execution::parallel);

}  // namespace mcgcoh
