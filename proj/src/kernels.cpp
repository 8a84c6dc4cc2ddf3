#include "mcgcoh/kernels.hpp"

#include "mcgcoh/errors.hpp"

#include <cstdint>
#include <vector>

namespace mcgcoh::kernels {
namespace {

void check_product_shape(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  }
}

void multiply_row(const IntMatrix& a, const IntMatrix& b, IntMatrix& out, std::size_t r) {
  const auto arow = a.row(r);
  auto orow = out.row(r);
  for (std::size_t k = 0; k < a.cols(); ++k) {
    if (arow[k] == 0) continue;
    const auto brow = b.row(k);
    for (std::size_t c = 0; c < b.cols(); ++c) {
      if (brow[c] != 0) orow[c] += arow[k] * brow[c];
    }
  }
}

// q = a(i, p) / a(p, p), truncated; zero when the entry is already zero.
Integer row_quotient(const IntMatrix& a, std::size_t i, std::size_t p) {
  Integer q;
  if (a(i, p) != 0) mpz_tdiv_q(q.get_mpz_t(), a(i, p).get_mpz_t(), a(p, p).get_mpz_t());
  return q;
}

Integer col_quotient(const IntMatrix& a, std::size_t j, std::size_t p) {
  Integer q;
  if (a(p, j) != 0) mpz_tdiv_q(q.get_mpz_t(), a(p, j).get_mpz_t(), a(p, p).get_mpz_t());
  return q;
}

void subtract_row_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& q,
                           std::size_t from_col) {
  auto t = m.row(target);
  const auto s = m.row(source);
  for (std::size_t c = from_col; c < m.cols(); ++c) {
    if (s[c] != 0) t[c] -= q * s[c];
  }
}

void subtract_col_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& q,
                           std::size_t from_row) {
  for (std::size_t r = from_row; r < m.rows(); ++r) {
    if (m(r, source) != 0) m(r, target) -= q * m(r, source);
  }
}

// Uinv <- Uinv * prod_i (I + q_i e_i e_p^T): column p gains sum_i q_i * column i.
void apply_inverse_update(IntMatrix& inv, std::size_t p, const std::vector<Integer>& q) {
  for (std::size_t k = 0; k < inv.rows(); ++k) {
    Integer acc = 0;
    for (std::size_t i = p + 1; i < q.size(); ++i) {
      if (q[i] != 0 && inv(k, i) != 0) acc += q[i] * inv(k, i);
    }
    inv(k, p) += acc;
  }
}

}  // namespace

IntMatrix multiply_serial(const IntMatrix& a, const IntMatrix& b) {
  check_product_shape(a, b);
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) multiply_row(a, b, out, r);
  return out;
}

IntMatrix multiply_parallel(const IntMatrix& a, const IntMatrix& b) {
  check_product_shape(a, b);
  IntMatrix out(a.rows(), b.cols());
  const auto rows = static_cast<std::int64_t>(a.rows());
#pragma omp parallel for schedule(static) if (rows > 16)
  for (std::int64_t r = 0; r < rows; ++r) multiply_row(a, b, out, static_cast<std::size_t>(r));
  return out;
}

bool reduce_rows_serial(IntMatrix& a, std::size_t pivot, IntMatrix* left, IntMatrix* left_inverse) {
  std::vector<Integer> q(a.rows());
  bool dirty = false;
  for (std::size_t i = pivot + 1; i < a.rows(); ++i) {
    q[i] = row_quotient(a, i, pivot);
    if (q[i] != 0) {
      subtract_row_multiple(a, i, pivot, q[i], pivot);
      if (left) subtract_row_multiple(*left, i, pivot, q[i], 0);
    }
    if (a(i, pivot) != 0) dirty = true;
  }
  if (left_inverse) apply_inverse_update(*left_inverse, pivot, q);
  return dirty;
}

bool reduce_rows_parallel(IntMatrix& a, std::size_t pivot, IntMatrix* left, IntMatrix* left_inverse) {
  std::vector<Integer> q(a.rows());
  const auto first = static_cast<std::int64_t>(pivot + 1);
  const auto rows = static_cast<std::int64_t>(a.rows());
  bool dirty = false;
#pragma omp parallel for schedule(dynamic, 8) reduction(|| : dirty) if (rows - first > 32)
  for (std::int64_t ii = first; ii < rows; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    q[i] = row_quotient(a, i, pivot);
    if (q[i] != 0) {
      subtract_row_multiple(a, i, pivot, q[i], pivot);
      if (left) subtract_row_multiple(*left, i, pivot, q[i], 0);
    }
    dirty = dirty || a(i, pivot) != 0;
  }
  if (left_inverse) {
    const auto inv_rows = static_cast<std::int64_t>(left_inverse->rows());
#pragma omp parallel for schedule(static) if (inv_rows > 32)
    for (std::int64_t k = 0; k < inv_rows; ++k) {
      Integer acc = 0;
      for (std::size_t i = pivot + 1; i < q.size(); ++i) {
        const auto& x = (*left_inverse)(static_cast<std::size_t>(k), i);
        if (q[i] != 0 && x != 0) acc += q[i] * x;
      }
      (*left_inverse)(static_cast<std::size_t>(k), pivot) += acc;
    }
  }
  return dirty;
}

bool reduce_cols_serial(IntMatrix& a, std::size_t pivot, IntMatrix* right) {
  bool dirty = false;
  for (std::size_t j = pivot + 1; j < a.cols(); ++j) {
    const Integer q = col_quotient(a, j, pivot);
    if (q != 0) {
      subtract_col_multiple(a, j, pivot, q, pivot);
      if (right) subtract_col_multiple(*right, j, pivot, q, 0);
    }
    if (a(pivot, j) != 0) dirty = true;
  }
  return dirty;
}

bool reduce_cols_parallel(IntMatrix& a, std::size_t pivot, IntMatrix* right) {
  const auto first = static_cast<std::int64_t>(pivot + 1);
  const auto cols = static_cast<std::int64_t>(a.cols());
  bool dirty = false;
#pragma omp parallel for schedule(dynamic, 4) reduction(|| : dirty) if (cols - first > 32)
  for (std::int64_t jj = first; jj < cols; ++jj) {
    const auto j = static_cast<std::size_t>(jj);
    const Integer q = col_quotient(a, j, pivot);
    if (q != 0) {
      subtract_col_multiple(a, j, pivot, q, pivot);
      if (right) subtract_col_multiple(*right, j, pivot, q, 0);
    }
    dirty = dirty || a(pivot, j) != 0;
  }
  return dirty;
}

}  // namespace mcgcoh::kernels
