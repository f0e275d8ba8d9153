#pragma once

// Serialization: JSON (rationals as reduced "p/q" strings), plain text and
// LaTeX. Polynomials are rendered with descending powers, q-series ascending.

#include "periodhecke/matrix.hpp"
#include "periodhecke/polynomial.hpp"
#include "periodhecke/qseries.hpp"
#include "periodhecke/rational.hpp"

#include <json.hpp>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace periodhecke {

using Json = nlohmann::ordered_json;

/// {"bound": w, "coeffs": ["p/q", ...]} with ascending coefficients.
Json polynomial_json(const BoundedPolynomial& p);
BoundedPolynomial polynomial_from_json(const Json& j);

/// Array of arrays of rational strings.
Json matrix_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json rationals_json(std::span<const Rational> values);
Json qseries_json(const QSeries& f);

/// e.g. "-4/15*X^5 + 1/3*X^3 - 1/15*X"; "0" for the zero polynomial.
std::string polynomial_text(const BoundedPolynomial& p, std::string_view var = "X");
/// Ascending coefficient list rendered as a polynomial in `var`.
std::string coefficients_text(std::span<const Rational> ascending, std::string_view var = "x");
std::string polynomial_latex(const BoundedPolynomial& p, std::string_view var = "X");
std::string coefficients_latex(std::span<const Rational> ascending, std::string_view var = "x");

/// Ascending powers with the truncation order: "1 + 240*q + 2160*q^2 + O(q^3)".
std::string qseries_text(const QSeries& f);
std::string qseries_latex(const QSeries& f);

std::string rational_latex(const Rational& r);
/// One row per line, entries separated by two spaces.
std::string matrix_text(const Matrix& m);
std::string matrix_latex(const Matrix& m);

}  // namespace periodhecke
