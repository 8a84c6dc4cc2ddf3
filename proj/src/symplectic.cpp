#include "mcgcoh/symplectic.hpp"

#include "mcgcoh/errors.hpp"
#include "mcgcoh/kernels.hpp"
#include "mcgcoh/smith.hpp"

#include <algorithm>
#include <charconv>

namespace mcgcoh {
namespace {

void check_same_genus(const HomologyVector& x, const HomologyVector& y) {
  if (x.genus() != y.genus()) {
    throw Error(ErrorCode::GenusMismatch,
                "genus " + std::to_string(x.genus()) + " vs " + std::to_string(y.genus()));
  }
}

void check_index(int genus, int j) {
  if (j < 1 || j > genus) {
    throw Error(ErrorCode::IndexOutOfRange,
                "index " + std::to_string(j) + " outside 1.." + std::to_string(genus));
  }
}

bool is_symplectic(const IntMatrix& m, const IntMatrix& form) {
  const IntMatrix lhs = kernels::multiply_serial(kernels::multiply_serial(m.transpose(), form), m);
  return lhs == form;
}

}  // namespace

HomologyVector::HomologyVector(int genus) : genus_(genus), coords_(static_cast<std::size_t>(2 * genus)) {
  if (genus < 0) throw Error(ErrorCode::InvalidGenus, "negative genus");
}

HomologyVector::HomologyVector(int genus, IntVector coords) : genus_(genus), coords_(std::move(coords)) {
  if (genus < 0 || coords_.size() != static_cast<std::size_t>(2 * genus)) {
    throw Error(ErrorCode::GenusMismatch, "expected " + std::to_string(2 * genus) + " coordinates, got " +
                                              std::to_string(coords_.size()));
  }
}

HomologyVector HomologyVector::a(int genus, int j) {
  check_index(genus, j);
  HomologyVector v(genus);
  v.coords_[2 * (j - 1)] = 1;
  return v;
}

HomologyVector HomologyVector::b(int genus, int j) {
  check_index(genus, j);
  HomologyVector v(genus);
  v.coords_[2 * (j - 1) + 1] = 1;
  return v;
}

HomologyVector HomologyVector::c(int genus, int j) {
  check_index(genus, j);
  if (j == 1) return a(genus, 1);
  return a(genus, j - 1) - a(genus, j);
}

HomologyVector& HomologyVector::operator+=(const HomologyVector& o) {
  check_same_genus(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

HomologyVector& HomologyVector::operator-=(const HomologyVector& o) {
  check_same_genus(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

std::string to_string(const HomologyVector& m) { return to_string(std::span<const Integer>(m.coords())); }

Integer intersection_form(const HomologyVector& m1, const HomologyVector& m2) {
  check_same_genus(m1, m2);
  Integer acc = 0;
  for (int j = 1; j <= m1.genus(); ++j) {
    acc += m1.a_coeff(j) * m2.b_coeff(j) - m1.b_coeff(j) * m2.a_coeff(j);
  }
  return acc;
}

IntMatrix intersection_matrix(int genus) {
  IntMatrix j(static_cast<std::size_t>(2 * genus), static_cast<std::size_t>(2 * genus));
  for (std::size_t k = 0; k < static_cast<std::size_t>(genus); ++k) {
    j(2 * k, 2 * k + 1) = 1;
    j(2 * k + 1, 2 * k) = -1;
  }
  return j;
}

IntMatrix twist_matrix(const HomologyVector& c) {
  const std::size_t n = c.coords().size();
  IntMatrix t = IntMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    // omega(e_col, c)
    const Integer w = (col % 2 == 0) ? c.coords()[col + 1] : Integer(-c.coords()[col - 1]);
    if (w == 0) continue;
    for (std::size_t r = 0; r < n; ++r) t(r, col) += w * c.coords()[r];
  }
  return t;
}

HomologyVector projection(int j, const HomologyVector& m) {
  check_index(m.genus(), j);
  IntVector coords(m.coords().size());
  coords[2 * (j - 1)] = m.a_coeff(j);
  coords[2 * (j - 1) + 1] = m.b_coeff(j);
  return HomologyVector(m.genus(), std::move(coords));
}

HomologyVector projection_complement(int j, const HomologyVector& m) { return m - projection(j, m); }

HomologyVector involution(const HomologyVector& m) {
  IntVector coords(m.coords().size());
  for (std::size_t k = 0; k + 1 < coords.size(); k += 2) {
    coords[k] = m.coords()[k + 1];
    coords[k + 1] = m.coords()[k];
  }
  return HomologyVector(m.genus(), std::move(coords));
}

Representation::Representation(std::vector<std::string> generators, std::vector<IntMatrix> matrices,
                               std::optional<int> genus)
    : generators_(std::move(generators)), matrices_(std::move(matrices)), genus_(genus) {
  if (generators_.size() != matrices_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "one matrix per generator required");
  }
  {
    std::vector<std::string> sorted = generators_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorCode::DuplicateGenerator, "duplicate generator in representation");
    }
  }
  if (genus_) {
    if (*genus_ < 1) throw Error(ErrorCode::InvalidGenus, "genus must be at least 1");
    dimension_ = static_cast<std::size_t>(2 * *genus_);
  } else if (!matrices_.empty()) {
    dimension_ = matrices_.front().rows();
  }
  const IntMatrix form = genus_ ? intersection_matrix(*genus_) : IntMatrix();
  inverses_.reserve(matrices_.size());
  for (std::size_t i = 0; i < matrices_.size(); ++i) {
    const IntMatrix& m = matrices_[i];
    if (m.rows() != dimension_ || m.cols() != dimension_) {
      throw Error(ErrorCode::DimensionMismatch,
                  "matrix for '" + generators_[i] + "' is not " + std::to_string(dimension_) + "x" +
                      std::to_string(dimension_));
    }
    if (genus_ && !is_symplectic(m, form)) {
      throw Error(ErrorCode::MalformedInput, "matrix for '" + generators_[i] + "' is not symplectic");
    }
    try {
      inverses_.push_back(inverse_unimodular(m));
    } catch (const Error&) {
      throw Error(ErrorCode::NotUnimodular, "matrix for '" + generators_[i] + "' is not invertible over Z");
    }
  }
}

std::optional<std::size_t> Representation::index_of(std::string_view name) const {
  const auto it = std::find(generators_.begin(), generators_.end(), name);
  if (it == generators_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - generators_.begin());
}

std::size_t Representation::require(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw Error(ErrorCode::UnknownGenerator, "representation has no generator '" + std::string(name) + "'");
}

IntMatrix Representation::word_matrix(const Word& w) const {
  IntMatrix p = IntMatrix::identity(dimension_);
  for (const Letter& l : w.letters()) {
    if (l.generator >= matrices_.size()) {
      throw Error(ErrorCode::UnknownGenerator, "letter outside the representation's generators");
    }
    p = kernels::multiply_serial(p, l.inverse ? inverses_[l.generator] : matrices_[l.generator]);
  }
  return p;
}

Representation Representation::aligned_to(std::span<const std::string> names) const {
  Representation out;
  out.genus_ = genus_;
  out.dimension_ = dimension_;
  for (const auto& name : names) {
    const std::size_t i = require(name);
    out.generators_.push_back(name);
    out.matrices_.push_back(matrices_[i]);
    out.inverses_.push_back(inverses_[i]);
  }
  return out;
}

CurveSystem::CurveSystem(int genus) : genus_(genus) {
  if (genus < 1) throw Error(ErrorCode::InvalidGenus, "genus must be at least 1");
  for (int j = 1; j <= genus; ++j) {
    names_.push_back("c" + std::to_string(j));
    names_.push_back("b" + std::to_string(j));
  }
  if (genus >= 2) names_.push_back("a2");

  // Chain c1 - b1 - c2 - b2 - ... - cg - bg, plus a2 meeting b2 once.
  const std::size_t n = names_.size();
  table_.assign(n, std::vector<int>(n, 0));
  const std::size_t chain = static_cast<std::size_t>(2 * genus);
  for (std::size_t i = 0; i + 1 < chain; ++i) table_[i][i + 1] = table_[i + 1][i] = 1;
  if (genus >= 2) {
    const std::size_t a2 = chain;
    const std::size_t b2 = 3;
    table_[a2][b2] = table_[b2][a2] = 1;
  }
}

HomologyVector CurveSystem::homology_class(std::string_view curve) const {
  if (curve.size() >= 2) {
    int j = 0;
    const auto [ptr, ec] = std::from_chars(curve.data() + 1, curve.data() + curve.size(), j);
    if (ec == std::errc() && ptr == curve.data() + curve.size() && j >= 1 && j <= genus_) {
      switch (curve.front()) {
        case 'a': return HomologyVector::a(genus_, j);
        case 'b': return HomologyVector::b(genus_, j);
        case 'c': return HomologyVector::c(genus_, j);
        default: break;
      }
    }
  }
  throw Error(ErrorCode::UnknownGenerator, "no curve named '" + std::string(curve) + "'");
}

int CurveSystem::intersection(std::string_view x, std::string_view y) const {
  auto find = [&](std::string_view name) {
    const auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
      throw Error(ErrorCode::UnknownGenerator, "'" + std::string(name) + "' is not a Humphries curve");
    }
    return static_cast<std::size_t>(it - names_.begin());
  };
  return table_[find(x)][find(y)];
}

std::pair<CurveSystem, Representation> humphries_representation(int genus) {
  CurveSystem curves(genus);
  std::vector<IntMatrix> matrices;
  for (const auto& name : curves.generator_names()) {
    matrices.push_back(twist_matrix(curves.homology_class(name)));
  }
  Representation rep(curves.generator_names(), std::move(matrices), genus);
  return {std::move(curves), std::move(rep)};
}

IntVector act(const Representation& rep, const Word& w, std::span<const Integer> m) {
  if (m.size() != rep.dimension()) {
    throw Error(ErrorCode::GenusMismatch, "vector length does not match the representation");
  }
  // Rightmost letter acts first.
  IntVector v(m.begin(), m.end());
  const auto letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    if (it->generator >= rep.generator_count()) {
      throw Error(ErrorCode::UnknownGenerator, "letter outside the representation's generators");
    }
    const IntMatrix& g = it->inverse ? rep.inverse(it->generator) : rep.matrix(it->generator);
    v = g * std::span<const Integer>(v);
  }
  return v;
}

HomologyVector act(const Representation& rep, const Word& w, const HomologyVector& m) {
  if (!rep.genus() || *rep.genus() != m.genus()) {
    throw Error(ErrorCode::GenusMismatch, "vector genus does not match the representation");
  }
  return HomologyVector(m.genus(), act(rep, w, std::span<const Integer>(m.coords())));
}

}  // namespace mcgcoh
