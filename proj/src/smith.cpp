#include "mcgcoh/smith.hpp"

#include "mcgcoh/errors.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

namespace mcgcoh {
namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

// Smallest nonzero |a(i, j)| with i, j >= t; ties go to the first in
// row-major order so the elimination sequence is deterministic.
std::optional<Position> smallest_in_block(const IntMatrix& a, std::size_t t) {
  std::optional<Position> best;
  for (std::size_t i = t; i < a.rows(); ++i) {
    const auto row = a.row(i);
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (row[j] == 0) continue;
      if (!best || mpz_cmpabs(row[j].get_mpz_t(), a(best->row, best->col).get_mpz_t()) < 0) best = Position{i, j};
    }
  }
  return best;
}

// Smallest nonzero entry in row t or column t (the pivot included).
Position smallest_in_cross(const IntMatrix& a, std::size_t t) {
  Position best{t, t};
  auto consider = [&](std::size_t i, std::size_t j) {
    if (a(i, j) == 0) return;
    if (a(best.row, best.col) == 0 || mpz_cmpabs(a(i, j).get_mpz_t(), a(best.row, best.col).get_mpz_t()) < 0) best = {i, j};
  };
  for (std::size_t i = t + 1; i < a.rows(); ++i) consider(i, t);
  for (std::size_t j = t + 1; j < a.cols(); ++j) consider(t, j);
  return best;
}

class SnfState {
 public:
  SnfState(const IntMatrix& m, const SnfOptions& opt) : opt_(opt), a_(m) {
    if (opt.want_u) u_ = IntMatrix::identity(m.rows());
    if (opt.want_v) v_ = IntMatrix::identity(m.cols());
    if (opt.want_u_inverse) u_inv_ = IntMatrix::identity(m.rows());
  }

  SnfResult run() {
    const std::size_t limit = std::min(a_.rows(), a_.cols());
    std::size_t t = 0;
    for (; t < limit; ++t) {
      const auto start = smallest_in_block(a_, t);
      if (!start) break;
      move_to_pivot(t, *start);
      settle_pivot(t);
      if (a_(t, t) < 0) negate_row(t);
    }
    SnfResult out;
    out.rank = t;
    out.d = std::move(a_);
    out.u = std::move(u_);
    out.v = std::move(v_);
    out.u_inverse = std::move(u_inv_);
    return out;
  }

 private:
  IntMatrix* left() { return opt_.want_u ? &u_ : nullptr; }
  IntMatrix* right() { return opt_.want_v ? &v_ : nullptr; }
  IntMatrix* left_inverse() { return opt_.want_u_inverse ? &u_inv_ : nullptr; }

  void swap_rows(std::size_t i, std::size_t j) {
    a_.swap_rows(i, j);
    if (opt_.want_u) u_.swap_rows(i, j);
    if (opt_.want_u_inverse) u_inv_.swap_cols(i, j);
  }

  void swap_cols(std::size_t i, std::size_t j) {
    a_.swap_cols(i, j);
    if (opt_.want_v) v_.swap_cols(i, j);
  }

  void negate_row(std::size_t t) {
    for (auto& x : a_.row(t)) x = -x;
    if (opt_.want_u)
      for (auto& x : u_.row(t)) x = -x;
    if (opt_.want_u_inverse)
      for (std::size_t k = 0; k < u_inv_.rows(); ++k) u_inv_(k, t) = -u_inv_(k, t);
  }

  // row t += row i
  void add_row_into_pivot(std::size_t t, std::size_t i) {
    auto pivot_row = a_.row(t);
    const auto src = a_.row(i);
    for (std::size_t c = t; c < a_.cols(); ++c) pivot_row[c] += src[c];
    if (opt_.want_u) {
      auto ut = u_.row(t);
      const auto ui = u_.row(i);
      for (std::size_t c = 0; c < u_.cols(); ++c) ut[c] += ui[c];
    }
    if (opt_.want_u_inverse) {
      for (std::size_t k = 0; k < u_inv_.rows(); ++k) u_inv_(k, i) -= u_inv_(k, t);
    }
  }

  void move_to_pivot(std::size_t t, Position p) {
    swap_rows(t, p.row);
    swap_cols(t, p.col);
  }

  std::optional<std::size_t> row_breaking_divisibility(std::size_t t) const {
    const Integer& pivot = a_(t, t);
    for (std::size_t i = t + 1; i < a_.rows(); ++i) {
      const auto row = a_.row(i);
      for (std::size_t j = t + 1; j < a_.cols(); ++j) {
        if (row[j] != 0 && !mpz_divisible_p(row[j].get_mpz_t(), pivot.get_mpz_t())) return i;
      }
    }
    return std::nullopt;
  }

  void settle_pivot(std::size_t t) {
    for (;;) {
      const bool rows_dirty = kernels::reduce_rows(a_, t, left(), left_inverse(), opt_.execution);
      const bool cols_dirty = kernels::reduce_cols(a_, t, right(), opt_.execution);
      if (rows_dirty || cols_dirty) {
        move_to_pivot(t, smallest_in_cross(a_, t));
        continue;
      }
      if (const auto i = row_breaking_divisibility(t)) {
        add_row_into_pivot(t, *i);
        continue;
      }
      return;
    }
  }

  SnfOptions opt_;
  IntMatrix a_;
  IntMatrix u_;
  IntMatrix v_;
  IntMatrix u_inv_;
};

}  // namespace

std::vector<Integer> SnfResult::diagonal() const {
  std::vector<Integer> out;
  const std::size_t n = std::min(d.rows(), d.cols());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(d(i, i));
  return out;
}

SnfResult snf(const IntMatrix& m, const SnfOptions& options) {
  return SnfState(m, options).run();
}

std::vector<IntVector> kernel_basis(const IntMatrix& m, Execution execution) {
  SnfOptions opt;
  opt.want_u = false;
  opt.execution = execution;
  const SnfResult r = snf(m, opt);
  std::vector<IntVector> basis;
  for (std::size_t c = r.rank; c < m.cols(); ++c) basis.push_back(r.v.column(c));
  return basis;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::NotUnimodular, "matrix is not square");
  }
  SnfOptions opt;
  opt.execution = Execution::serial;
  const SnfResult r = snf(m, opt);
  if (!r.d.is_identity()) {
    throw Error(ErrorCode::NotUnimodular, "matrix is not invertible over the integers");
  }
  // u m v = 1  =>  m^-1 = v u
  return kernels::multiply_serial(r.v, r.u);
}

std::string to_string(const AbelianInvariants& inv) {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " + ";
    first = false;
  };
  if (inv.rank > 0) {
    sep();
    os << "Z";
    if (inv.rank > 1) os << '^' << inv.rank;
  }
  for (const auto& t : inv.torsion) {
    sep();
    os << "Z/" << t;
  }
  if (first) os << '0';
  return os.str();
}

QuotientDecomposition quotient_decomposition(std::span<const IntVector> ambient_basis,
                                             std::span<const IntVector> sub_generators,
                                             Execution execution) {
  const std::size_t k = ambient_basis.size();
  std::size_t n = 0;
  if (k > 0) {
    n = ambient_basis.front().size();
  } else if (!sub_generators.empty()) {
    n = sub_generators.front().size();
  }
  for (const auto& s : sub_generators) {
    if (s.size() != n) throw Error(ErrorCode::DimensionMismatch, "sub-generator length mismatch");
  }

  const IntMatrix basis = IntMatrix::from_columns(n, ambient_basis);
  SnfOptions opt;
  opt.execution = execution;
  const SnfResult b = snf(basis, opt);
  if (b.rank < k) {
    throw Error(ErrorCode::DependentBasis, "ambient vectors are linearly dependent");
  }

  // Solve basis * c = s through u * basis * v = d.
  IntMatrix coords(k, sub_generators.size());
  for (std::size_t col = 0; col < sub_generators.size(); ++col) {
    const IntVector y = b.u * std::span<const Integer>(sub_generators[col]);
    IntVector z(k);
    for (std::size_t i = 0; i < n; ++i) {
      if (i < k) {
        if (!mpz_divisible_p(y[i].get_mpz_t(), b.d(i, i).get_mpz_t())) {
          throw Error(ErrorCode::SubgroupNotContained,
                      "sub-generator " + std::to_string(col) + " is not an integer combination");
        }
        mpz_divexact(z[i].get_mpz_t(), y[i].get_mpz_t(), b.d(i, i).get_mpz_t());
      } else if (y[i] != 0) {
        throw Error(ErrorCode::SubgroupNotContained,
                    "sub-generator " + std::to_string(col) + " lies outside the ambient span");
      }
    }
    const IntVector c = b.v * std::span<const Integer>(z);
    for (std::size_t i = 0; i < k; ++i) coords(i, col) = c[i];
  }

  SnfOptions qopt;
  qopt.want_u = false;
  qopt.want_v = false;
  qopt.want_u_inverse = true;
  qopt.execution = execution;
  const SnfResult q = snf(coords, qopt);

  QuotientDecomposition out;
  out.sub_coordinates = coords;
  out.invariants.rank = k - q.rank;
  auto lift = [&](std::size_t i) { return basis * std::span<const Integer>(q.u_inverse.column(i)); };
  for (std::size_t i = 0; i < q.rank; ++i) {
    if (q.d(i, i) > 1) {
      out.invariants.torsion.push_back(q.d(i, i));
      out.torsion_generators.push_back(lift(i));
    }
  }
  for (std::size_t i = q.rank; i < k; ++i) out.free_generators.push_back(lift(i));
  return out;
}

AbelianInvariants quotient_invariants(std::span<const IntVector> ambient_basis,
                                      std::span<const IntVector> sub_generators,
                                      Execution execution) {
  return quotient_decomposition(ambient_basis, sub_generators, execution).invariants;
}

}  // namespace mcgcoh
