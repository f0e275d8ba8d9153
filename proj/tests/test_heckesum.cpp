#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "periodhecke/errors.hpp"
#include "periodhecke/exactnum.hpp"
#include "periodhecke/heckeop.hpp"
#include "periodhecke/heckesum.hpp"
#include "periodhecke/polyring.hpp"
#include "periodhecke/qoracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

using namespace periodhecke;

namespace {

// Direct scan of the 4-cube |a|,|b|,|c|,|d| <= m.
std::vector<IntMat2> brute_h_neg(long level, long m) {
  std::vector<IntMat2> out;
  for (long a = -m; a <= m; ++a)
    for (long b = -m; b <= m; ++b)
      for (long c = -m; c <= m; ++c)
        for (long d = -m; d <= m; ++d) {
          if (a * d - b * c != m || c % level != 0 || std::gcd(std::labs(a), level) != 1) continue;
          if (a * b * c * d >= 0) continue;
          out.push_back({a, b, c, d});
        }
  std::sort(out.begin(), out.end());
  return out;
}

BoundedPolynomial poly_power(const Rational& a, const Rational& b, int e, int w) {
  BoundedPolynomial lin(w, {b, a});
  BoundedPolynomial r = BoundedPolynomial::constant(w, 1);
  for (int i = 0; i < e; ++i) r = multiply(r, lin, w);
  return r;
}

// S^m straight from its definition, with rational polynomial products.
BoundedPolynomial naive_s_poly_m(long level, int w, int n, long m) {
  const int nt = w - n;
  BoundedPolynomial out(w);
  for (const IntMat2& g : brute_h_neg(level, m)) {
    BoundedPolynomial term = multiply(poly_power(g.a, g.b, n, w), poly_power(g.c, g.d, nt, w), w);
    term *= Rational((g.a > 0) == (g.b > 0) ? 1 : -1, 2);
    out += term;
  }
  for (long a = 1; a <= m; ++a) {
    if (m % a != 0 || std::gcd(a, level) != 1) continue;
    const long d = m / a;
    BoundedPolynomial head = reciprocal_scale(bernoulli_poly0(nt + 1), make_rational(d, level), w);
    head *= pow(Rational(a), n) * pow(Rational(level), nt) / (nt + 1);
    BoundedPolynomial tail = compose_linear(bernoulli_poly0(n + 1).with_bound(w), a, 0);
    tail *= pow(Rational(d), nt) / (n + 1);
    out += head - tail;
  }
  return out;
}

}  // namespace

TEST_CASE("enumerate_h_neg examples") {
  const std::vector<IntMat2> n4m8{{-1, -1, 4, -4}, {-1, 1, -4, -4}, {1, -1, 4, 4}, {1, 1, -4, 4}};
  CHECK(enumerate_h_neg(4, 8) == n4m8);
  CHECK(enumerate_h_neg(2, 1).empty());
  const std::vector<IntMat2> n2m3{{-1, -1, 2, -1}, {-1, 1, -2, -1}, {1, -1, 2, 1}, {1, 1, -2, 1}};
  CHECK(enumerate_h_neg(2, 3) == n2m3);
}

TEST_CASE("enumerate_h_neg agrees with a 4-cube scan") {
  for (long level = 2; level <= 5; ++level)
    for (long m = 1; m <= 12; ++m) CHECK_MESSAGE(enumerate_h_neg(level, m) == brute_h_neg(level, m), level << " " << m);
}

TEST_CASE("enumerate_h_neg is closed under negation") {
  for (long level = 2; level <= 5; ++level)
    for (long m = 1; m <= 30; ++m) {
      const auto list = enumerate_h_neg(level, m);
      for (const auto& g : list) {
        CHECK(g.det() == m);
        CHECK(std::binary_search(list.begin(), list.end(), g.negated()));
      }
    }
}

TEST_CASE("s_poly_m agrees with the naive definition") {
  for (long level = 2; level <= 4; ++level)
    for (int w = 4; w <= 10; w += 2)
      for (int n = 1; n < w; ++n)
        for (long m = 1; m <= 6; ++m)
          CHECK_MESSAGE(s_poly_m(PeriodContext::make(level, w, n), m) == naive_s_poly_m(level, w, n, m),
                        level << " " << w << " " << n << " " << m);
}

TEST_CASE("s_poly_m at m = 1 is s_poly") {
  for (int w = 4; w <= 14; w += 2)
    for (int n = 2; n < w; n += 2) {
      const PeriodContext ctx = PeriodContext::make(2, w, n);
      CHECK(s_poly_m(ctx, 1) == s_poly(ctx));
    }
}

TEST_CASE("parts of S^8_{4,6,2}") {
  const PeriodContext ctx = PeriodContext::make(4, 6, 2);
  BoundedPolynomial orbit(6), diag(6), corr(6), total(6);
  orbit[5] = -1024, orbit[3] = 2048, orbit[1] = -1024;
  diag[5] = Rational(-256, 15), diag[3] = Rational(-2048, 3), diag[1] = Rational(256 * 56, 15);
  corr[5] = 768, corr[3] = -1024;
  total[5] = Rational(-4096, 15), total[3] = Rational(1024, 3), total[1] = Rational(-1024, 15);
  CHECK(hecke_orbit_sum(ctx, 8) == orbit);
  CHECK(hecke_diagonal_sum(ctx, 8) == diag);
  CHECK(moebius_correction(ctx, 8) == corr);
  CHECK(r_minus_hecke(ctx, 8) == total);
}

TEST_CASE("S^2_{4,4,2} vanishes") { CHECK(s_poly_m(PeriodContext::make(4, 4, 2), 2).is_zero()); }

TEST_CASE("weight-12 examples include the Moebius term") {
  BoundedPolynomial a(10), b(10);
  const Rational sa(128, 45), sb(-32, 105);
  a[9] = sa * 12, a[7] = sa * 5, a[5] = sa * -42, a[3] = sa * 30, a[1] = sa * -5;
  b[9] = sb * 44, b[7] = sb * -35, b[5] = sb * -42, b[3] = sb * 40, b[1] = sb * -7;
  CHECK(r_minus_hecke(PeriodContext::make(2, 10, 2), 2) == a);
  CHECK(r_minus_hecke(PeriodContext::make(2, 10, 4), 2) == b);
  CHECK(s_poly_m(PeriodContext::make(2, 10, 2), 2) != a);
}

TEST_CASE("r_minus_hecke properties") {
  for (long level = 2; level <= 5; ++level)
    for (int w = 4; w <= 20; w += 4)
      for (int n = 2; n < w; n += 2)
        for (long m = 1; m <= 12; ++m) {
          const PeriodContext ctx = PeriodContext::make(level, w, n);
          const BoundedPolynomial s = s_poly_m(ctx, m);
          CHECK(is_odd_polynomial(s));
          if (m % level != 0) {
            CHECK(moebius_correction(ctx, m).is_zero());
            CHECK(r_minus_hecke(ctx, m) == s);
          }
        }
  CHECK_THROWS_AS(r_minus_hecke(PeriodContext::make(2, 6, 3), 2), UnsupportedError);
  CHECK_THROWS_AS(s_poly_m(PeriodContext::make(2, 6, 2), 0), PreconditionError);
}

TEST_CASE("eigenvalue_w6") {
  CHECK(eigenvalue_w6(1) == 1);
  CHECK(eigenvalue_w6(3) == 12);
  CHECK(eigenvalue_w6(5) == -210);
  CHECK_THROWS_AS(eigenvalue_w6(2), UnsupportedError);
  const QSeries f = eta_quotient({{1, 8}, {2, 8}}, 99);
  for (long m = 1; m <= 99; m += 2) {
    CHECK(Rational(eigenvalue_w6(m)) == f[m]);
    CHECK(hecke_matrix(2, 6, m) == Matrix{{Rational(eigenvalue_w6(m))}});
  }
}
