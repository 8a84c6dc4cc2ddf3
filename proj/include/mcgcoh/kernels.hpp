#pragma once

// Data-parallel inner loops. Each kernel has an OpenMP variant and a serial
// reference; both produce bit-identical results and the test suite checks
// that they agree.

#include "mcgcoh/int_matrix.hpp"

#include <cstddef>

namespace mcgcoh {

enum class Execution { serial, parallel };

namespace kernels {

IntMatrix multiply_serial(const IntMatrix& a, const IntMatrix& b);
IntMatrix multiply_parallel(const IntMatrix& a, const IntMatrix& b);

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, Execution exec) {
  return exec == Execution::parallel ? multiply_parallel(a, b) : multiply_serial(a, b);
}

/// For every row i > pivot with a(i, pivot) != 0, subtracts q_i times the
/// pivot row where q_i = a(i, pivot) / a(pivot, pivot) (truncated). The same
/// row operation is applied to `left` when it is non-null, and the matching
/// inverse column operation to `left_inverse` when it is non-null. Returns
/// true if some entry below the pivot remains nonzero.
bool reduce_rows_serial(IntMatrix& a, std::size_t pivot, IntMatrix* left, IntMatrix* left_inverse);
bool reduce_rows_parallel(IntMatrix& a, std::size_t pivot, IntMatrix* left, IntMatrix* left_inverse);

/// Column analogue of reduce_rows: clears entries right of the pivot using
/// the pivot column, mirroring the column operations into `right`.
bool reduce_cols_serial(IntMatrix& a, std::size_t pivot, IntMatrix* right);
bool reduce_cols_parallel(IntMatrix& a, std::size_t pivot, IntMatrix* right);

inline bool reduce_rows(IntMatrix& a, std::size_t pivot, IntMatrix* left, IntMatrix* left_inverse,
                        Execution exec) {
  return exec == Execution::parallel ? reduce_rows_parallel(a, pivot, left, left_inverse)
                                     : reduce_rows_serial(a, pivot, left, left_inverse);
}

inline bool reduce_cols(IntMatrix& a, std::size_t pivot, IntMatrix* right, Execution exec) {
  return exec == Execution::parallel ? reduce_cols_parallel(a, pivot, right)
                                     : reduce_cols_serial(a, pivot, right);
}

}  // namespace kernels
}  // namespace mcgcoh
