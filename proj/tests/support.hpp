#pragma once

#include "mcgcoh/cocycle.hpp"
#include "mcgcoh/presentation.hpp"
#include "mcgcoh/smith.hpp"

#include <random>

namespace testing {

using namespace mcgcoh;

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20240611);
  return engine;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline IntMatrix random_matrix(std::size_t rows, std::size_t cols, long bound) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(-bound, bound);
  return m;
}

inline IntVector random_vector(std::size_t n, long bound) {
  IntVector v(n);
  for (auto& x : v) x = uniform(-bound, bound);
  return v;
}

inline Word random_word(std::size_t generators, std::size_t max_length) {
  const auto len = static_cast<std::size_t>(uniform(0, static_cast<long>(max_length)));
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < len; ++i) {
    letters.push_back(Letter{static_cast<std::size_t>(uniform(0, static_cast<long>(generators) - 1)), uniform(0, 1) == 1});
  }
  return Word(std::move(letters));
}

// Product of elementary operations; determinant +-1 by construction.
inline IntMatrix random_unimodular(std::size_t n, int steps) {
  IntMatrix m = IntMatrix::identity(n);
  if (n < 2) return m;
  for (int s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    const long k = uniform(-2, 2);
    for (std::size_t c = 0; c < n; ++c) m(i, c) += k * m(j, c);
    if (uniform(0, 3) == 0) m.swap_rows(i, j);
  }
  return m;
}

inline CocycleAssignment random_z1_element(const CohomologyResult& h, const Representation& rep, long bound) {
  CocycleAssignment u = CocycleAssignment::zero(rep);
  for (const auto& b : h.z1_basis) u += Integer(uniform(-bound, bound)) * b;
  return u;
}

}  // namespace testing
