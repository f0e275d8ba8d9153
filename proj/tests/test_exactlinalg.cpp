#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "periodhecke/errors.hpp"
#include "periodhecke/exactlinalg.hpp"

#include <numeric>
#include <random>

using namespace periodhecke;

namespace {

Matrix random_int_matrix(std::mt19937& rng, std::size_t n, long range) {
  std::uniform_int_distribution<long> dist(-range, range);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  return m;
}

// Leibniz expansion, fine up to 6x6.
Rational leibniz(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term = inversions % 2 == 0 ? 1 : -1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST_CASE("inverse examples") {
  CHECK(inverse(Matrix::identity(3)) == Matrix::identity(3));
  CHECK(inverse(Matrix{{1, 2}, {3, 4}}) == Matrix{{-2, 1}, {Rational(3, 2), Rational(-1, 2)}});
  try {
    (void)inverse(Matrix{{0, 0}, {0, 0}});
    FAIL("expected SingularMatrixError");
  } catch (const SingularMatrixError& e) {
    CHECK(e.rank() == 0);
    CHECK(e.code() == ErrorCode::singular_matrix);
  }
  try {
    (void)inverse(Matrix{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
    FAIL("expected SingularMatrixError");
  } catch (const SingularMatrixError& e) {
    CHECK(e.rank() == 2);
  }
  CHECK_THROWS_AS(inverse(Matrix(2, 3)), PreconditionError);
}

TEST_CASE("inverse of random integer and rational matrices") {
  std::mt19937 rng(42);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      Matrix m = random_int_matrix(rng, n, 9);
      if (trial % 2 == 1) {
        for (std::size_t i = 0; i < n; ++i) m(i, 0) /= Rational(static_cast<long>(i + 2));
      }
      if (determinant(m) == 0) continue;
      CHECK(m * inverse(m) == Matrix::identity(n));
      CHECK(inverse(m) * m == Matrix::identity(n));
    }
  }
}

TEST_CASE("determinant agrees with the Leibniz expansion") {
  std::mt19937 rng(1);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      Matrix m = random_int_matrix(rng, n, 5);
      m(0, 0) /= 3;
      if (trial == 0 && n > 1) {
        for (std::size_t j = 0; j < n; ++j) m(1, j) = m(0, j) * 2;
      }
      CHECK(determinant(m) == leibniz(m));
    }
  CHECK(determinant(Matrix(0, 0)) == 1);
  // Needs a row swap on the first pivot.
  CHECK(determinant(Matrix{{0, 1}, {1, 0}}) == -1);
}

TEST_CASE("rank and solve") {
  CHECK(rank(Matrix{{1, 2}, {2, 4}}) == 1);
  CHECK(rank(Matrix(3, 3)) == 0);
  const Matrix a{{1, 1}, {1, -1}, {2, 0}};
  const SolveResult ok = solve_exact(a, Matrix{{3}, {1}, {4}});
  REQUIRE(ok.status == SolveStatus::unique);
  CHECK(ok.solution == Matrix{{2}, {1}});
  CHECK(solve_exact(a, Matrix{{3}, {1}, {5}}).status == SolveStatus::inconsistent);
  CHECK(solve_exact(Matrix{{1, 1}}, Matrix{{1}}).status == SolveStatus::underdetermined);
}

TEST_CASE("charpoly") {
  CHECK(charpoly(Matrix::identity(2)) == std::vector<Rational>{1, -2, 1});
  CHECK(charpoly(Matrix{{-208, 36}, {-1120, 184}}) == std::vector<Rational>{2048, 24, 1});
  const std::vector<Rational> cubic{-5, 0, 0, 1};
  CHECK(charpoly(companion_matrix(cubic)) == cubic);

  std::mt19937 rng(8);
  for (std::size_t n = 1; n <= 7; ++n) {
    Matrix m = random_int_matrix(rng, n, 6);
    m(n - 1, 0) /= 5;
    const auto c = charpoly(m);
    REQUIRE(c.size() == n + 1);
    CHECK(c[n] == 1);
    CHECK(c[n - 1] == -m.trace());
    CHECK(c[0] == (n % 2 == 0 ? 1 : -1) * determinant(m));
    // Cayley-Hamilton.
    Matrix acc(n, n);
    for (std::size_t k = n + 1; k-- > 0;) {
      acc = acc * m;
      for (std::size_t i = 0; i < n; ++i) acc(i, i) += c[k];
    }
    CHECK(acc == Matrix(n, n));
  }
}

TEST_CASE("poly_from_roots") {
  const std::vector<Rational> roots{228, -156, -156};
  CHECK(poly_from_roots(roots) == std::vector<Rational>{-5548608, -46800, 84, 1});
  CHECK(poly_from_roots(std::vector<Rational>{}) == std::vector<Rational>{1});
}

TEST_CASE("hankel identities") {
  const HankelIdentity h1 = hankel_bernoulli(1, 1);
  CHECK(h1.determinant == Rational(1, 12));
  CHECK(h1.closed_form == Rational(1, 12));
  const HankelIdentity h2 = hankel_bernoulli(2, 1);
  CHECK(h2.determinant == Rational(-1, 720));
  CHECK(h2.closed_form == Rational(-1, 720));
  const HankelIdentity h3 = hankel_bernoulli(3, 1);
  CHECK(h3.determinant == Rational(1, 30240));
  CHECK(h3.closed_form == Rational(1, 30240));
  for (int which = 1; which <= 3; ++which)
    for (int n = 1; n <= 8; ++n) {
      const HankelIdentity h = hankel_bernoulli(which, n);
      CHECK_MESSAGE(h.determinant == h.closed_form, "which=" << which << " n=" << n);
      CHECK(h.determinant != 0);
    }
  CHECK_THROWS_AS(hankel_bernoulli(4, 1), PreconditionError);
  CHECK_THROWS_AS(hankel_bernoulli(1, 0), PreconditionError);
}
