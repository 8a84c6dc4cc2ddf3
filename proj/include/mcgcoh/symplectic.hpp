#pragma once

#include "mcgcoh/int_matrix.hpp"
#include "mcgcoh/presentation.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mcgcoh {

/// Element of H_1(Sigma_{g,1}; Z) in the symplectic basis
/// (a_1, b_1, ..., a_g, b_g).
class HomologyVector {
 public:
  HomologyVector() = default;
  explicit HomologyVector(int genus);
  HomologyVector(int genus, IntVector coords);

  static HomologyVector a(int genus, int j);
  static HomologyVector b(int genus, int j);
  /// c_1 = a_1, c_j = a_{j-1} - a_j.
  static HomologyVector c(int genus, int j);

  int genus() const noexcept { return genus_; }
  const IntVector& coords() const noexcept { return coords_; }
  const Integer& a_coeff(int j) const { return coords_.at(2 * (j - 1)); }
  const Integer& b_coeff(int j) const { return coords_.at(2 * (j - 1) + 1); }
  bool is_zero() const { return mcgcoh::is_zero(coords_); }

  HomologyVector& operator+=(const HomologyVector& o);
  HomologyVector& operator-=(const HomologyVector& o);
  friend HomologyVector operator+(HomologyVector x, const HomologyVector& y) { return x += y; }
  friend HomologyVector operator-(HomologyVector x, const HomologyVector& y) { return x -= y; }
  friend HomologyVector operator*(const Integer& s, const HomologyVector& x) {
    return HomologyVector(x.genus_, scale(s, x.coords_));
  }
  friend HomologyVector operator-(const HomologyVector& x) { return HomologyVector(x.genus_, negate(x.coords_)); }
  friend bool operator==(const HomologyVector&, const HomologyVector&) = default;

 private:
  int genus_ = 0;
  IntVector coords_;
};

std::string to_string(const HomologyVector& m);

/// omega(a_j, b_k) = delta_jk, omega(a_j, a_k) = omega(b_j, b_k) = 0.
Integer intersection_form(const HomologyVector& m1, const HomologyVector& m2);
/// Matrix of the form in the basis S.
IntMatrix intersection_matrix(int genus);

/// m -> m + omega(m, c) c.
IntMatrix twist_matrix(const HomologyVector& c);

/// Keeps the a_j, b_j coordinates, 1 <= j <= genus.
HomologyVector projection(int j, const HomologyVector& m);
HomologyVector projection_complement(int j, const HomologyVector& m);
/// a_j <-> b_j.
HomologyVector involution(const HomologyVector& m);

/// Per-generator matrices acting on column vectors. Matrices must be
/// invertible over Z; when a genus is attached they must also preserve the
/// intersection form.
class Representation {
 public:
  Representation() = default;
  Representation(std::vector<std::string> generators, std::vector<IntMatrix> matrices,
                 std::optional<int> genus = std::nullopt);

  std::size_t dimension() const noexcept { return dimension_; }
  std::optional<int> genus() const noexcept { return genus_; }
  const std::vector<std::string>& generators() const noexcept { return generators_; }
  std::size_t generator_count() const noexcept { return generators_.size(); }

  const IntMatrix& matrix(std::size_t i) const { return matrices_.at(i); }
  const IntMatrix& inverse(std::size_t i) const { return inverses_.at(i); }
  const IntMatrix& matrix(std::string_view name) const { return matrices_.at(require(name)); }

  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require(std::string_view name) const;

  /// rho(s_1) rho(s_2) ... rho(s_k): the leftmost letter is the outermost map.
  IntMatrix word_matrix(const Word& w) const;

  /// Same representation with generators reordered (and restricted) to `names`.
  Representation aligned_to(std::span<const std::string> names) const;

 private:
  std::vector<std::string> generators_;
  std::vector<IntMatrix> matrices_;
  std::vector<IntMatrix> inverses_;
  std::size_t dimension_ = 0;
  std::optional<int> genus_;
};

/// The 2g+1 Humphries curves gamma_1, beta_1, ..., gamma_g, beta_g, alpha_2
/// (named c1, b1, ..., cg, bg, a2; alpha_2 is absent for g = 1) together with
/// the remaining alpha_j, and their homology classes.
class CurveSystem {
 public:
  explicit CurveSystem(int genus);

  int genus() const noexcept { return genus_; }
  /// Humphries generator names in presentation order.
  const std::vector<std::string>& generator_names() const noexcept { return names_; }
  /// Class of a named curve: "aj", "bj", "cj" (c1 aliases a1).
  HomologyVector homology_class(std::string_view curve) const;
  /// Geometric intersection number (0 or 1) between two Humphries curves.
  int intersection(std::string_view x, std::string_view y) const;
  int intersection(std::size_t i, std::size_t j) const { return table_.at(i).at(j); }

 private:
  int genus_;
  std::vector<std::string> names_;
  std::vector<std::vector<int>> table_;
};

std::pair<CurveSystem, Representation> humphries_representation(int genus);

HomologyVector act(const Representation& rep, const Word& w, const HomologyVector& m);
IntVector act(const Representation& rep, const Word& w, std::span<const Integer> m);

}  // namespace mcgcoh
