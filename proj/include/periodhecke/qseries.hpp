#pragma once

// Truncated q-expansions sum_{n=0}^{prec} a_n q^n with exact coefficients.

#include "periodhecke/rational.hpp"

#include <vector>

namespace periodhecke {

class QSeries {
 public:
  QSeries() = default;
  /// Zero series of the given weight known through q^prec.
  QSeries(int weight, long prec);
  QSeries(int weight, std::vector<Rational> coeffs);

  int weight() const noexcept { return weight_; }
  long prec() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  /// a_n; throws PrecisionTooLow past prec.
  const Rational& operator[](long n) const;
  Rational& operator[](long n);

  QSeries truncated(long prec) const;
  /// f(d z): a_n moves to index d n, so precision grows to d * prec.
  QSeries rescaled(long d) const;

  QSeries& operator+=(const QSeries& other);
  QSeries& operator-=(const QSeries& other);
  QSeries& operator*=(const Rational& scalar);

  /// Equality of the first min(prec) + 1 coefficients and of the weights.
  bool agrees_with(const QSeries& other) const;

 private:
  int weight_ = 0;
  std::vector<Rational> coeffs_{Rational(0)};
};

QSeries operator+(QSeries lhs, const QSeries& rhs);
QSeries operator-(QSeries lhs, const QSeries& rhs);
QSeries operator*(QSeries f, const Rational& scalar);
QSeries operator*(const Rational& scalar, QSeries f);
/// Product to min(prec) with weights added.
QSeries operator*(const QSeries& lhs, const QSeries& rhs);
QSeries pow(const QSeries& f, unsigned exponent);

}  // namespace periodhecke
