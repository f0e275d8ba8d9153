#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "periodhecke/errors.hpp"
#include "periodhecke/exactlinalg.hpp"
#include "periodhecke/exactnum.hpp"
#include "periodhecke/heckeop.hpp"
#include "periodhecke/heckesum.hpp"
#include "periodhecke/periodpoly.hpp"

#include <map>

using namespace periodhecke;

namespace {

Rational two_pow(long e) { return pow(Rational(2), e); }

}  // namespace

TEST_CASE("dim_cusp") {
  CHECK(dim_cusp(2, 10) == 2);
  CHECK(dim_cusp(2, 4) == 0);
  CHECK(dim_cusp(4, 8) == 3);
  // dim S_k(Gamma_0(N)) for k = 4..24.
  const std::map<long, std::vector<long>> table{
      {2, {0, 0, 1, 1, 2, 2, 3, 3, 4, 4, 5}},
      {3, {0, 1, 1, 2, 3, 3, 4, 5, 5, 6, 7}},
      {4, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}},
      {5, {1, 1, 3, 3, 5, 5, 7, 7, 9, 9, 11}},
  };
  for (const auto& [level, dims] : table)
    for (std::size_t i = 0; i < dims.size(); ++i) {
      const int w = static_cast<int>(2 + 2 * i);
      CHECK_MESSAGE(dim_cusp(level, w) == dims[i], "N=" << level << " k=" << w + 2);
    }
  CHECK_THROWS_AS(dim_cusp(7, 10), UnsupportedError);
  CHECK_THROWS_AS(dim_cusp(2, 5), PreconditionError);
}

TEST_CASE("basis matrices match the explicit coefficient formulas") {
  for (int w = 6; w <= 40; w += 2) {
    const Matrix low = basis_matrix(w, BasisFamily::even_low);
    const Matrix high = basis_matrix(w, BasisFamily::even_high);
    const long d = dim_cusp(2, w);
    REQUIRE(low.rows() == static_cast<std::size_t>(d));
    for (long i = 1; i <= d; ++i)
      for (long j = 1; j <= d; ++j) {
        const Rational b = bernoulli_number(static_cast<int>(w - 2 * i - 2 * j + 2));
        const Rational binom(binomial(w - 2 * i + 1, 2 * j - 1));
        const auto ii = static_cast<std::size_t>(i - 1), jj = static_cast<std::size_t>(j - 1);
        CHECK(low(ii, jj) == two_pow(w - 2 * i - 2 * j + 1) / (w - 2 * i + 1) * binom * b);
        CHECK(high(ii, jj) == -binom * b / (w - 2 * i + 1));
      }
  }
  CHECK(basis_matrix(6, BasisFamily::even_low) == Matrix{{Rational(-4, 15)}});
  CHECK(basis_matrix(4, BasisFamily::odd_low).empty());
}

TEST_CASE("basis matrices are nonsingular for w <= 60") {
  for (int w = 6; w <= 60; w += 2)
    for (BasisFamily f : {BasisFamily::even_low, BasisFamily::even_high, BasisFamily::odd_low, BasisFamily::odd_high})
      CHECK_MESSAGE(determinant(basis_matrix(w, f)) != 0, "w=" << w);
}

TEST_CASE("hecke matrix on S_12(Gamma_0(2))") {
  const HeckeComputation hc = compute_hecke(2, 10, 2);
  CHECK(hc.t == Matrix{{-208, 36}, {-1120, 184}});
  CHECK(hc.charpoly == std::vector<Rational>{2048, 24, 1});
  CHECK(hc.s1.is_symmetric());
  CHECK(hc.s1(0, 0) == Rational(169538, 2025));
  CHECK(hc.basis_indices == std::vector<int>{2, 4});
}

TEST_CASE("hecke matrix on S_10(Gamma_0(4))") {
  const HeckeComputation hc = compute_hecke(4, 8, 3);
  CHECK(hc.t == Matrix{{1636, -224, 112}, {25600, -3356, 1600}, {28672, -3584, 1636}});
  CHECK(hc.charpoly == poly_from_roots(std::vector<Rational>{228, -156, -156}));
  const Matrix adj = compute_hecke(4, 8, 3, Pairing::transposed).t;
  CHECK(adj == inverse(hc.s1) * hc.s2.transpose());
  CHECK(charpoly(adj) == hc.charpoly);
}

TEST_CASE("T expresses each Hecke image exactly in the basis") {
  for (long level = 2; level <= 5; ++level)
    for (int w = 6; w <= 16; w += 2) {
      const long d = dim_cusp(level, w);
      if (d == 0 || 2 * d >= w) continue;
      for (long m = 2; m <= 6; ++m) {
        HeckeComputation hc;
        try {
          hc = compute_hecke(level, w, m);
        } catch (const BasisDeficientError&) {
          continue;
        }
        for (std::size_t j = 0; j < hc.basis_indices.size(); ++j) {
          BoundedPolynomial combo(w);
          for (std::size_t k = 0; k < hc.basis_indices.size(); ++k)
            combo += hc.t(k, j) * s_poly(PeriodContext::make(level, w, hc.basis_indices[k]));
          CHECK_MESSAGE(combo == r_minus_hecke(PeriodContext::make(level, w, hc.basis_indices[j]), m),
                        "N=" << level << " w=" << w << " m=" << m);
        }
      }
    }
}

TEST_CASE("T_1 is the identity") {
  for (long level = 2; level <= 5; ++level)
    for (int w = 6; w <= 16; w += 2) {
      const long d = dim_cusp(level, w);
      if (d == 0 || 2 * d >= w) continue;
      CHECK(hecke_matrix(level, w, 1) == Matrix::identity(static_cast<std::size_t>(d)));
      const std::vector<Rational> ones(static_cast<std::size_t>(d), Rational(1));
      CHECK(hecke_charpoly(level, w, 1) == poly_from_roots(ones));
    }
}

TEST_CASE("hecke relations on Gamma_0(2)") {
  for (int w = 6; w <= 14; w += 2) {
    const Matrix t2 = hecke_matrix(2, w, 2), t3 = hecke_matrix(2, w, 3), t5 = hecke_matrix(2, w, 5);
    CHECK(t2 * t3 == t3 * t2);
    CHECK(t2 * t3 == hecke_matrix(2, w, 6));
    CHECK(t2 * t5 == hecke_matrix(2, w, 10));
    CHECK(hecke_matrix(2, w, 9) == t3 * t3 - Rational(pow(BigInt(3), static_cast<unsigned long>(w + 1))) * Matrix::identity(t3.rows()));
    CHECK(hecke_matrix(2, w, 4) == t2 * t2);
  }
}

TEST_CASE("hecke errors") {
  CHECK_THROWS_AS(hecke_matrix(2, 4, 2), UnsupportedError);
  try {
    (void)hecke_matrix(2, 4, 2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::dimension_zero);
  }
  try {
    (void)hecke_matrix(7, 10, 2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unsupported_level);
  }
  // S_4(Gamma_0(5)) is one-dimensional but there is no even n with 0 < n < 2.
  CHECK_THROWS_AS(hecke_matrix(5, 2, 2), BasisDeficientError);
  CHECK_THROWS_AS(hecke_matrix(2, 10, 0), PreconditionError);
  CHECK_THROWS_AS(hecke_matrix(2, 9, 2), PreconditionError);
}
