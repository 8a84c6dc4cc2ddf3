#include "support.hpp"

#include "mcgcoh/errors.hpp"
#include "mcgcoh/int_matrix.hpp"
#include "mcgcoh/smith.hpp"

#include <doctest.h>

using namespace mcgcoh;
using namespace testing;

namespace {

bool is_snf_diagonal(const SnfResult& r) {
  const IntMatrix& d = r.d;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  for (std::size_t i = 0; i < r.rank; ++i) {
    if (d(i, i) <= 0) return false;
    if (i + 1 < r.rank && !mpz_divisible_p(d(i + 1, i + 1).get_mpz_t(), d(i, i).get_mpz_t())) return false;
  }
  for (std::size_t i = r.rank; i < std::min(d.rows(), d.cols()); ++i)
    if (d(i, i) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("matrix basics") {
  const IntMatrix a{{1, 2}, {3, 4}};
  const IntMatrix b{{0, 1}, {1, 0}};
  CHECK(a * b == IntMatrix{{2, 1}, {4, 3}});
  CHECK(a.transpose() == IntMatrix{{1, 3}, {2, 4}});
  CHECK(determinant(a) == -2);
  CHECK(determinant(IntMatrix::identity(5)) == 1);
  CHECK(a + b - b == a);
  const IntVector v{Integer(1), Integer(-1)};
  CHECK(a * std::span<const Integer>(v) == IntVector{Integer(-1), Integer(-1)});
  CHECK(to_string(std::span<const Integer>(v)) == "(1, -1)");
}

TEST_CASE("snf fixed examples") {
  SUBCASE("2x2") {
    const auto r = snf(IntMatrix{{2, 4}, {6, 8}});
    CHECK(r.diagonal() == std::vector<Integer>{2, 4});
    CHECK(r.rank == 2);
  }
  SUBCASE("identity") {
    const auto r = snf(IntMatrix::identity(4));
    CHECK(r.d == IntMatrix::identity(4));
  }
  SUBCASE("zero") {
    const auto r = snf(IntMatrix::zero(2, 3));
    CHECK(r.rank == 0);
    CHECK(r.d.is_zero());
    CHECK(r.u == IntMatrix::identity(2));
    CHECK(r.v == IntMatrix::identity(3));
  }
  SUBCASE("needs divisibility fix") {
    const auto r = snf(IntMatrix{{2, 0}, {0, 3}});
    CHECK(r.diagonal() == std::vector<Integer>{1, 6});
  }
  SUBCASE("rectangular") {
    const auto r = snf(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    CHECK(r.diagonal() == std::vector<Integer>{2, 6, 12});
  }
}

TEST_CASE("snf property: u m v = d, unimodular factors, divisibility chain") {
  for (int iter = 0; iter < 300; ++iter) {
    const auto rows = static_cast<std::size_t>(uniform(1, 6));
    const auto cols = static_cast<std::size_t>(uniform(1, 6));
    IntMatrix m = random_matrix(rows, cols, 9);
    if (uniform(0, 4) == 0) {
      // force rank deficiency
      for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = 2 * m(0, c);
    }
    SnfOptions opt;
    opt.want_u_inverse = true;
    const auto r = snf(m, opt);
    CAPTURE(to_string(m));
    REQUIRE(is_snf_diagonal(r));
    CHECK(r.u * m * r.v == r.d);
    CHECK(abs(determinant(r.u)) == 1);
    CHECK(abs(determinant(r.v)) == 1);
    CHECK(r.u * r.u_inverse == IntMatrix::identity(rows));
  }
}

TEST_CASE("snf invariants are stable under unimodular changes") {
  for (int iter = 0; iter < 200; ++iter) {
    const auto n = static_cast<std::size_t>(uniform(1, 5));
    const auto k = static_cast<std::size_t>(uniform(1, 5));
    const IntMatrix m = random_matrix(n, k, 6);
    const IntMatrix p = random_unimodular(n, 8);
    const IntMatrix q = random_unimodular(k, 8);
    CHECK(snf(m).diagonal() == snf(p * m * q).diagonal());
  }
}

TEST_CASE("kernel basis") {
  SUBCASE("fixed") {
    const IntMatrix m{{1, 1, 0}, {0, 0, 0}};
    const auto k = kernel_basis(m);
    REQUIRE(k.size() == 2);
    for (const auto& v : k) CHECK(is_zero(m * std::span<const Integer>(v)));
  }
  SUBCASE("full rank has trivial kernel") { CHECK(kernel_basis(IntMatrix{{2, 1}, {1, 1}}).empty()); }
  SUBCASE("random: annihilated, correct size, saturated") {
    for (int iter = 0; iter < 200; ++iter) {
      const auto rows = static_cast<std::size_t>(uniform(1, 5));
      const auto cols = static_cast<std::size_t>(uniform(1, 6));
      const IntMatrix m = random_matrix(rows, cols, 5);
      const auto basis = kernel_basis(m);
      const auto rank = snf(m).rank;
      REQUIRE(basis.size() == cols - rank);
      for (const auto& v : basis) CHECK(is_zero(m * std::span<const Integer>(v)));
      if (!basis.empty()) {
        // Saturated: the basis spans a direct summand, so its SNF is all ones.
        const auto d = snf(IntMatrix::from_columns(cols, basis)).diagonal();
        for (const auto& x : d) CHECK(x == 1);
      }
    }
  }
}

TEST_CASE("inverse_unimodular") {
  const IntMatrix m{{2, 1}, {1, 1}};
  CHECK(m * inverse_unimodular(m) == IntMatrix::identity(2));
  CHECK_THROWS_AS(inverse_unimodular(IntMatrix{{2, 0}, {0, 1}}), Error);
  for (int iter = 0; iter < 100; ++iter) {
    const IntMatrix u = random_unimodular(4, 10);
    CHECK(inverse_unimodular(u) * u == IntMatrix::identity(4));
  }
}

TEST_CASE("quotient invariants") {
  const std::vector<IntVector> e = {unit_vector(2, 0), unit_vector(2, 1)};
  SUBCASE("Z^2 / <(2,0)> = Z + Z/2") {
    const std::vector<IntVector> sub = {IntVector{2, 0}};
    const auto inv = quotient_invariants(e, sub);
    CHECK(inv.rank == 1);
    CHECK(inv.torsion == std::vector<Integer>{2});
    CHECK(to_string(inv) == "Z + Z/2");
  }
  SUBCASE("everything") {
    CHECK(quotient_invariants(e, e) == AbelianInvariants{0, {}});
    CHECK(to_string(quotient_invariants(e, e)) == "0");
  }
  SUBCASE("nothing") { CHECK(quotient_invariants(e, std::vector<IntVector>{}) == AbelianInvariants{2, {}}); }
  SUBCASE("sublattice ambient") {
    const std::vector<IntVector> amb = {IntVector{2, 0, 0}, IntVector{0, 3, 0}};
    const std::vector<IntVector> sub = {IntVector{4, 6, 0}};
    const auto q = quotient_decomposition(amb, sub);
    CHECK(q.invariants == AbelianInvariants{1, {2}});
    REQUIRE(q.free_generators.size() == 1);
    REQUIRE(q.torsion_generators.size() == 1);
  }
  SUBCASE("errors") {
    const std::vector<IntVector> dep = {IntVector{1, 0}, IntVector{2, 0}};
    CHECK_THROWS_WITH_AS(quotient_invariants(dep, std::vector<IntVector>{}), doctest::Contains("DependentBasis"), Error);
    const std::vector<IntVector> amb = {IntVector{2, 0}};
    const std::vector<IntVector> sub = {IntVector{1, 0}};
    CHECK_THROWS_WITH_AS(quotient_invariants(amb, sub), doctest::Contains("SubgroupNotContained"), Error);
    const std::vector<IntVector> off = {IntVector{0, 1}};
    CHECK_THROWS_WITH_AS(quotient_invariants(amb, off), doctest::Contains("SubgroupNotContained"), Error);
  }
  SUBCASE("invariant under change of sub-generators") {
    for (int iter = 0; iter < 200; ++iter) {
      const auto n = static_cast<std::size_t>(uniform(1, 4));
      std::vector<IntVector> amb;
      for (std::size_t i = 0; i < n; ++i) amb.push_back(unit_vector(n, i));
      const auto k = static_cast<std::size_t>(uniform(1, 4));
      const IntMatrix s = random_matrix(n, k, 6);
      const IntMatrix t = s * random_unimodular(k, 6);
      std::vector<IntVector> s_cols, t_cols;
      for (std::size_t c = 0; c < k; ++c) {
        s_cols.push_back(s.column(c));
        t_cols.push_back(t.column(c));
      }
      const auto qs = quotient_invariants(amb, s_cols);
      CHECK(qs == quotient_invariants(amb, t_cols));
      const auto d = snf(s).diagonal();
      std::vector<Integer> tors;
      std::size_t nonzero = 0;
      for (const auto& x : d) {
        if (x != 0) ++nonzero;
        if (x > 1) tors.push_back(x);
      }
      CHECK(qs.rank == n - nonzero);
      CHECK(qs.torsion == tors);
    }
  }
}
