#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "periodhecke/errors.hpp"
#include "periodhecke/format.hpp"
#include "periodhecke/periodpoly.hpp"

using namespace periodhecke;

TEST_CASE("rational strings") {
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(make_rational(4, 2)) == "2");
  CHECK(parse_rational("+10/4") == Rational(5, 2));
  CHECK(parse_rational("-7") == -7);
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("polynomial JSON") {
  const BoundedPolynomial s = s_poly(PeriodContext::make(2, 6, 2));
  const Json j = polynomial_json(s);
  CHECK(j.dump() == R"({"bound":6,"coeffs":["0","-1/15","0","1/3","0","-4/15","0"]})");
  CHECK(polynomial_from_json(j) == s);
  CHECK(polynomial_from_json(j).bound() == 6);
  CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"({"coeffs":[]})")), InvalidArgumentError);
}

TEST_CASE("matrix JSON") {
  const Matrix m{{-208, 36}, {Rational(-1120, 3), 184}};
  const Json j = matrix_json(m);
  CHECK(j.dump() == R"([["-208","36"],["-1120/3","184"]])");
  CHECK(matrix_from_json(j) == m);
  CHECK(rationals_json(std::vector<Rational>{2048, 24, 1}).dump() == R"(["2048","24","1"])");
}

TEST_CASE("text and LaTeX render descending powers") {
  const BoundedPolynomial s = s_poly(PeriodContext::make(2, 6, 2));
  CHECK(polynomial_text(s) == "-4/15*X^5 + 1/3*X^3 - 1/15*X");
  CHECK(polynomial_latex(s) == "-\\frac{4}{15}X^{5} + \\frac{1}{3}X^{3} - \\frac{1}{15}X");
  CHECK(polynomial_text(BoundedPolynomial(3)) == "0");
  CHECK(coefficients_text(std::vector<Rational>{2048, 24, 1}) == "x^2 + 24*x + 2048");
  CHECK(coefficients_latex(std::vector<Rational>{-1, 0, -1}) == "-x^{2} - 1");
  CHECK(qseries_text(QSeries(4, std::vector<Rational>{1, -2, 0, Rational(1, 3)})) == "1 - 2*q + 1/3*q^3 + O(q^4)");
  CHECK(qseries_latex(QSeries(0, std::vector<Rational>{0, 1})) == "q + O(q^{2})");
  CHECK(matrix_text(Matrix{{1, Rational(1, 2)}, {0, -3}}) == "1  1/2\n0  -3\n");
  CHECK(matrix_latex(Matrix{{1, Rational(-1, 2)}}) == "\\begin{pmatrix} 1 & -\\frac{1}{2} \\end{pmatrix}");
}
