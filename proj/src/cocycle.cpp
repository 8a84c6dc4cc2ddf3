#include "mcgcoh/cocycle.hpp"

#include "mcgcoh/errors.hpp"
#include "mcgcoh/wajnryb.hpp"

#include <algorithm>
#include <cstdint>

namespace mcgcoh {
namespace {

void check_context(const CocycleAssignment& u, const Representation& rep) {
  if (u.dimension() != rep.dimension()) {
    throw Error(ErrorCode::GenusMismatch, "cocycle and representation act on modules of different rank");
  }
  if (u.generators() != rep.generators()) {
    throw Error(ErrorCode::UnknownGenerator, "cocycle and representation use different generator lists");
  }
}

int require_genus(const Representation& rep) {
  if (!rep.genus()) throw Error(ErrorCode::GenusMismatch, "representation carries no genus");
  const int g = *rep.genus();
  if (rep.generators() != humphries_generators(g)) {
    throw Error(ErrorCode::UnknownGenerator, "expected the Humphries generators c1, b1, ..., a2");
  }
  return g;
}

HomologyVector as_class(int genus, IntVector v) { return HomologyVector(genus, std::move(v)); }

IntMatrix identity_minus(const IntMatrix& m) { return IntMatrix::identity(m.rows()) - m; }

// Fills the row block of relator `i` in `system`.
void fill_relator_block(IntMatrix& system, std::size_t i, const Word& relator, const Representation& rep) {
  const std::size_t n = rep.dimension();
  IntMatrix prefix = IntMatrix::identity(n);
  for (const Letter& l : relator.letters()) {
    if (!l.inverse) {
      system.add_block(i * n, l.generator * n, prefix, +1);
      prefix = kernels::multiply_serial(prefix, rep.matrix(l.generator));
    } else {
      prefix = kernels::multiply_serial(prefix, rep.inverse(l.generator));
      system.add_block(i * n, l.generator * n, prefix, -1);
    }
  }
}

}  // namespace

CocycleAssignment::CocycleAssignment(std::vector<std::string> generators, std::vector<IntVector> values,
                                     std::size_t dimension, std::optional<int> genus)
    : generators_(std::move(generators)), values_(std::move(values)), dimension_(dimension), genus_(genus) {
  if (generators_.size() != values_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "one value per generator required");
  }
  if (genus_ && dimension_ != static_cast<std::size_t>(2 * *genus_)) {
    throw Error(ErrorCode::GenusMismatch, "dimension must be twice the genus");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i].size() != dimension_) {
      throw Error(ErrorCode::GenusMismatch, "value for '" + generators_[i] + "' has " +
                                                std::to_string(values_[i].size()) + " entries, expected " +
                                                std::to_string(dimension_));
    }
  }
}

CocycleAssignment CocycleAssignment::zero(const Representation& rep) {
  return CocycleAssignment(rep.generators(), std::vector<IntVector>(rep.generator_count(), zero_vector(rep.dimension())),
                           rep.dimension(), rep.genus());
}

CocycleAssignment CocycleAssignment::from_flat(const Representation& rep, std::span<const Integer> flat) {
  const std::size_t n = rep.dimension();
  if (flat.size() != n * rep.generator_count()) {
    throw Error(ErrorCode::DimensionMismatch, "flat cocycle has the wrong length");
  }
  std::vector<IntVector> values;
  for (std::size_t i = 0; i < rep.generator_count(); ++i) {
    values.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(i * n),
                        flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
  }
  return CocycleAssignment(rep.generators(), std::move(values), n, rep.genus());
}

const IntVector& CocycleAssignment::value(std::string_view name) const {
  const auto it = std::find(generators_.begin(), generators_.end(), name);
  if (it == generators_.end()) {
    throw Error(ErrorCode::UnknownGenerator, "cocycle has no generator '" + std::string(name) + "'");
  }
  return values_[static_cast<std::size_t>(it - generators_.begin())];
}

void CocycleAssignment::set(std::string_view name, IntVector v) {
  const auto it = std::find(generators_.begin(), generators_.end(), name);
  if (it == generators_.end()) {
    throw Error(ErrorCode::UnknownGenerator, "cocycle has no generator '" + std::string(name) + "'");
  }
  if (v.size() != dimension_) throw Error(ErrorCode::GenusMismatch, "value has the wrong length");
  values_[static_cast<std::size_t>(it - generators_.begin())] = std::move(v);
}

IntVector CocycleAssignment::flat() const {
  IntVector out;
  out.reserve(values_.size() * dimension_);
  for (const auto& v : values_) out.insert(out.end(), v.begin(), v.end());
  return out;
}

bool CocycleAssignment::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const IntVector& v) { return mcgcoh::is_zero(v); });
}

CocycleAssignment& CocycleAssignment::operator+=(const CocycleAssignment& o) {
  if (generators_ != o.generators_ || dimension_ != o.dimension_) {
    throw Error(ErrorCode::UnknownGenerator, "adding cocycles over different generator lists");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] = add(values_[i], o.values_[i]);
  return *this;
}

CocycleAssignment operator-(CocycleAssignment a, const CocycleAssignment& b) {
  return a += Integer(-1) * b;
}

CocycleAssignment operator*(const Integer& s, CocycleAssignment a) {
  for (auto& v : a.values_) v = scale(s, v);
  return a;
}

IntVector evaluate(const CocycleAssignment& u, const Representation& rep, const Word& w) {
  check_context(u, rep);
  const std::size_t n = rep.dimension();
  IntVector value = zero_vector(n);
  IntMatrix prefix = IntMatrix::identity(n);
  for (const Letter& l : w.letters()) {
    if (l.generator >= rep.generator_count()) {
      throw Error(ErrorCode::UnknownGenerator, "letter outside the generator list");
    }
    if (!l.inverse) {
      value = add(value, prefix * std::span<const Integer>(u.value(l.generator)));
      prefix = kernels::multiply_serial(prefix, rep.matrix(l.generator));
    } else {
      prefix = kernels::multiply_serial(prefix, rep.inverse(l.generator));
      value = sub(value, prefix * std::span<const Integer>(u.value(l.generator)));
    }
  }
  return value;
}

IntVector conjugate_value(const CocycleAssignment& u, const Representation& rep, const Word& g, const Word& h) {
  const IntMatrix conj = rep.word_matrix(g * h * invert(g));
  const IntVector ug = evaluate(u, rep, g);
  const IntVector uh = evaluate(u, rep, h);
  return add(identity_minus(conj) * std::span<const Integer>(ug),
             rep.word_matrix(g) * std::span<const Integer>(uh));
}

IntMatrix relator_system(const Presentation& p, const Representation& rep, Execution execution) {
  const Representation aligned = rep.aligned_to(p.generators());
  const std::size_t n = aligned.dimension();
  IntMatrix system(p.relators().size() * n, p.generator_count() * n);
  const auto count = static_cast<std::int64_t>(p.relators().size());
  if (execution == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      fill_relator_block(system, idx, p.relators()[idx], aligned);
    }
  } else {
    for (std::size_t i = 0; i < p.relators().size(); ++i) fill_relator_block(system, i, p.relators()[i], aligned);
  }
  return system;
}

CocycleAssignment coboundary(const Representation& rep, std::span<const Integer> m) {
  if (m.size() != rep.dimension()) throw Error(ErrorCode::GenusMismatch, "vector length does not match");
  std::vector<IntVector> values;
  values.reserve(rep.generator_count());
  for (std::size_t i = 0; i < rep.generator_count(); ++i) {
    values.push_back(sub(m, rep.matrix(i) * m));
  }
  return CocycleAssignment(rep.generators(), std::move(values), rep.dimension(), rep.genus());
}

CocycleAssignment coboundary(const Representation& rep, const HomologyVector& m) {
  if (rep.genus() && *rep.genus() != m.genus()) throw Error(ErrorCode::GenusMismatch, "genus mismatch");
  return coboundary(rep, std::span<const Integer>(m.coords()));
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const RelatorCheck& c) { return c.ok; });
}

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const RelatorCheck& c) { return !c.ok; }));
}

VerificationReport verify_cocycle(const CocycleAssignment& u, const Presentation& p, const Representation& rep) {
  const Representation aligned = rep.aligned_to(p.generators());
  std::vector<IntVector> values;
  for (const auto& name : p.generators()) values.push_back(u.value(name));
  const CocycleAssignment ua(p.generators(), std::move(values), u.dimension(), u.genus());

  VerificationReport report;
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    RelatorCheck check;
    check.relator_index = i;
    check.residue = evaluate(ua, aligned, p.relators()[i]);
    check.ok = is_zero(check.residue);
    report.checks.push_back(std::move(check));
  }
  return report;
}

CohomologyResult compute_h1(const Presentation& p, const Representation& rep, Execution execution) {
  const Representation aligned = rep.aligned_to(p.generators());
  const std::size_t n = aligned.dimension();
  for (std::size_t r = 0; r < p.relators().size(); ++r) {
    if (!aligned.word_matrix(p.relators()[r]).is_identity()) {
      throw Error(ErrorCode::MalformedInput,
                  "representation does not satisfy relator " + std::to_string(r) + ": " +
                      to_string(p.relators()[r], p.generators()));
    }
  }

  const IntMatrix system = relator_system(p, aligned, execution);
  const std::vector<IntVector> z1 = kernel_basis(system, execution);

  std::vector<IntVector> b1;
  b1.reserve(n);
  for (std::size_t i = 0; i < n; ++i) b1.push_back(coboundary(aligned, unit_vector(n, i)).flat());

  const QuotientDecomposition q = quotient_decomposition(z1, b1, execution);

  CohomologyResult out;
  out.h1 = q.invariants;
  out.z1_rank = z1.size();
  {
    SnfOptions opt;
    opt.want_u = false;
    opt.want_v = false;
    opt.execution = execution;
    out.b1_rank = snf(IntMatrix::from_columns(n * aligned.generator_count(), b1), opt).rank;
  }
  for (const auto& v : z1) out.z1_basis.push_back(CocycleAssignment::from_flat(aligned, v));
  for (const auto& v : q.free_generators) out.generator_cocycles.push_back(CocycleAssignment::from_flat(aligned, v));
  for (const auto& v : q.torsion_generators) out.torsion_cocycles.push_back(CocycleAssignment::from_flat(aligned, v));
  return out;
}

CocycleAssignment theorem1_cocycle(int genus) {
  if (genus < 1) throw Error(ErrorCode::InvalidGenus, "genus must be at least 1");
  if (genus < 3) throw Error(ErrorCode::UnsupportedGenus, "the generator cocycle is defined for genus >= 3");
  const auto names = humphries_generators(genus);
  std::vector<IntVector> values(names.size(), zero_vector(static_cast<std::size_t>(2 * genus)));
  CocycleAssignment u(names, std::move(values), static_cast<std::size_t>(2 * genus), genus);
  u.set("a2", HomologyVector::a(genus, 2).coords());
  return u;
}

bool is_adapted_to_S(const CocycleAssignment& u, const Representation& rep) {
  const int g = require_genus(rep);
  check_context(u, rep);
  for (int j = 1; j <= g; ++j) {
    const auto alpha = as_class(g, evaluate(u, rep, alpha_twist_word(g, j)));
    const auto beta = as_class(g, u.value("b" + std::to_string(j)));
    if (alpha.a_coeff(j) != 0 || beta.b_coeff(j) != 0) return false;
  }
  return true;
}

Adaptation adapt_to_S(const CocycleAssignment& u, const Representation& rep) {
  const int g = require_genus(rep);
  check_context(u, rep);
  const WajnrybPresentation wp = wajnryb_presentation(g);
  if (!verify_cocycle(u, wp.presentation, rep).passed()) {
    throw Error(ErrorCode::NotACocycle, "assignment violates a Wajnryb relator");
  }
  HomologyVector shift(g);
  for (int j = 1; j <= g; ++j) {
    const auto alpha = as_class(g, evaluate(u, rep, alpha_twist_word(g, j)));
    const auto beta = as_class(g, u.value("b" + std::to_string(j)));
    shift += beta.b_coeff(j) * HomologyVector::a(g, j) - alpha.a_coeff(j) * HomologyVector::b(g, j);
  }
  return Adaptation{u + coboundary(rep, shift), shift};
}

Adaptation adapt_to_Sprime(const CocycleAssignment& u, const Representation& rep) {
  const int g = require_genus(rep);
  check_context(u, rep);
  if (!is_adapted_to_S(u, rep)) {
    throw Error(ErrorCode::NotAdaptedToS, "cocycle is not adapted to the basis S");
  }
  if (!is_zero(u.value("c1"))) {
    throw Error(ErrorCode::NotProportional, "u(c1) must vanish for an S-adapted cocycle");
  }
  HomologyVector shift(g);
  Integer r = 0;
  for (int j = 2; j <= g; ++j) {
    const auto value = as_class(g, u.value("c" + std::to_string(j)));
    const Integer q = value.a_coeff(j - 1);
    if (value != q * HomologyVector::c(g, j)) {
      throw Error(ErrorCode::NotProportional,
                  "u(c" + std::to_string(j) + ") = " + to_string(value) + " is not a multiple of c_" + std::to_string(j));
    }
    r += q;
    shift += r * HomologyVector::b(g, j);
  }
  return Adaptation{u + coboundary(rep, shift), shift};
}

CocycleAssignment canonical_cocycle(const CocycleAssignment& u, const Representation& rep) {
  const Adaptation s = adapt_to_S(u, rep);
  CocycleAssignment out = adapt_to_Sprime(s.adapted, rep).adapted;
  for (const Integer& x : out.flat()) {
    if (x == 0) continue;
    if (x < 0) out = Integer(-1) * out;
    break;
  }
  return out;
}

CohomologyResult compute_mapping_class_h1(int genus, Execution execution) {
  const WajnrybPresentation wp = wajnryb_presentation(genus);
  const auto [curves, rep] = humphries_representation(genus);
  CohomologyResult result = compute_h1(wp.presentation, rep, execution);
  for (auto& u : result.generator_cocycles) u = canonical_cocycle(u, rep);
  return result;
}

}  // namespace mcgcoh
