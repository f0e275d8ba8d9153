#include "periodhecke/format.hpp"

#include "periodhecke/errors.hpp"

#include <sstream>

namespace periodhecke {

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(BigInt(std::to_string(j.get<long long>())));
  throw InvalidArgumentError("expected a rational string, got " + j.dump());
}

// Shared renderer; `latex` switches the coefficient and power syntax.
std::string render(std::span<const Rational> asc, std::string_view var, bool latex, bool ascending = false) {
  std::string out;
  for (std::size_t step = 0; step < asc.size(); ++step) {
    const std::size_t idx = ascending ? step : asc.size() - 1 - step;
    const Rational& c = asc[idx];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (idx == 0 || !unit) {
      out += latex ? rational_latex(mag) : to_string(mag);
      if (idx > 0 && !latex) out += "*";
    }
    if (idx > 0) {
      out += var;
      if (idx > 1) out += latex ? "^{" + std::to_string(idx) + "}" : "^" + std::to_string(idx);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

Json polynomial_json(const BoundedPolynomial& p) {
  Json j;
  j["bound"] = p.bound();
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
  j["coeffs"] = std::move(coeffs);
  return j;
}

BoundedPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("bound") || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw InvalidArgumentError("polynomial JSON needs \"bound\" and \"coeffs\"");
  }
  std::vector<Rational> coeffs;
  for (const auto& c : j["coeffs"]) coeffs.push_back(rational_from_json(c));
  return BoundedPolynomial(j["bound"].get<int>(), std::move(coeffs));
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgumentError("matrix JSON must be an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw InvalidArgumentError("matrix JSON rows must be arrays");
    std::vector<Rational> r;
    for (const auto& v : row) r.push_back(rational_from_json(v));
    rows.push_back(std::move(r));
  }
  return Matrix::from_rows(rows);
}

Json rationals_json(std::span<const Rational> values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(to_string(v));
  return arr;
}

Json qseries_json(const QSeries& f) {
  Json j;
  j["weight"] = f.weight();
  j["prec"] = f.prec();
  j["coeffs"] = rationals_json(f.coeffs());
  return j;
}

std::string polynomial_text(const BoundedPolynomial& p, std::string_view var) {
  return render(p.coeffs(), var, false);
}

std::string coefficients_text(std::span<const Rational> ascending, std::string_view var) {
  return render(ascending, var, false);
}

std::string polynomial_latex(const BoundedPolynomial& p, std::string_view var) {
  return render(p.coeffs(), var, true);
}

std::string coefficients_latex(std::span<const Rational> ascending, std::string_view var) {
  return render(ascending, var, true);
}

std::string qseries_text(const QSeries& f) {
  return render(f.coeffs(), "q", false, true) + " + O(q^" + std::to_string(f.prec() + 1) + ")";
}

std::string qseries_latex(const QSeries& f) {
  return render(f.coeffs(), "q", true, true) + " + O(q^{" + std::to_string(f.prec() + 1) + "})";
}

std::string rational_latex(const Rational& r) {
  if (r.get_den() == 1) return to_string(r);
  const bool negative = r < 0;
  const BigInt num = negative ? BigInt(-r.get_num()) : r.get_num();
  return std::string(negative ? "-" : "") + "\\frac{" + num.get_str() + "}{" + r.get_den().get_str() + "}";
}

std::string matrix_text(const Matrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out << "  ";
      out << to_string(m(i, j));
    }
    out << '\n';
  }
  return out.str();
}

std::string matrix_latex(const Matrix& m) {
  std::string out = "\\begin{pmatrix}";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i > 0) out += " \\\\";
    out += " ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += " & ";
      out += rational_latex(m(i, j));
    }
  }
  out += " \\end{pmatrix}";
  return out;
}

}  // namespace periodhecke
