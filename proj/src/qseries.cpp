#include "periodhecke/qseries.hpp"

#include "periodhecke/errors.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace periodhecke {

QSeries::QSeries(int weight, long prec) : weight_(weight) {
  if (prec < 0) throw PreconditionError("q-series precision must be nonnegative");
  coeffs_.assign(static_cast<std::size_t>(prec) + 1, Rational(0));
}

QSeries::QSeries(int weight, std::vector<Rational> coeffs) : weight_(weight), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw PreconditionError("q-series needs at least the constant term");
}

const Rational& QSeries::operator[](long n) const {
  if (n < 0 || n > prec()) throw PrecisionTooLowError(n, prec());
  return coeffs_[static_cast<std::size_t>(n)];
}

Rational& QSeries::operator[](long n) {
  if (n < 0 || n > prec()) throw PrecisionTooLowError(n, prec());
  return coeffs_[static_cast<std::size_t>(n)];
}

QSeries QSeries::truncated(long p) const {
  if (p > prec()) throw PrecisionTooLowError(p, prec());
  return QSeries(weight_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + p + 1));
}

QSeries QSeries::rescaled(long d) const {
  if (d < 1) throw PreconditionError("rescale factor must be positive");
  QSeries out(weight_, prec() * d);
  for (long n = 0; n <= prec(); ++n) out.coeffs_[static_cast<std::size_t>(n * d)] = coeffs_[static_cast<std::size_t>(n)];
  return out;
}

QSeries& QSeries::operator+=(const QSeries& other) {
  if (weight_ != other.weight_) throw PreconditionError("adding q-series of different weights");
  coeffs_.resize(static_cast<std::size_t>(std::min(prec(), other.prec())) + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& other) {
  if (weight_ != other.weight_) throw PreconditionError("subtracting q-series of different weights");
  coeffs_.resize(static_cast<std::size_t>(std::min(prec(), other.prec())) + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

QSeries& QSeries::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

bool QSeries::agrees_with(const QSeries& other) const {
  if (weight_ != other.weight_) return false;
  const long p = std::min(prec(), other.prec());
  for (long n = 0; n <= p; ++n)
    if (coeffs_[static_cast<std::size_t>(n)] != other.coeffs_[static_cast<std::size_t>(n)]) return false;
  return true;
}

QSeries operator+(QSeries lhs, const QSeries& rhs) { return lhs += rhs; }
QSeries operator-(QSeries lhs, const QSeries& rhs) { return lhs -= rhs; }
QSeries operator*(QSeries f, const Rational& scalar) { return f *= scalar; }
QSeries operator*(const Rational& scalar, QSeries f) { return f *= scalar; }

QSeries operator*(const QSeries& lhs, const QSeries& rhs) {
  const long p = std::min(lhs.prec(), rhs.prec());
  std::vector<Rational> out(static_cast<std::size_t>(p) + 1, Rational(0));
  const auto& a = lhs.coeffs();
  const auto& b = rhs.coeffs();
  for (long i = 0; i <= p; ++i) {
    if (a[static_cast<std::size_t>(i)] == 0) continue;
    for (long j = 0; i + j <= p; ++j) out[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
  }
  return QSeries(lhs.weight() + rhs.weight(), std::move(out));
}

QSeries pow(const QSeries& f, unsigned exponent) {
  std::vector<Rational> one(static_cast<std::size_t>(f.prec()) + 1, Rational(0));
  one[0] = 1;
  QSeries result(0, std::move(one));
  QSeries base = f;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

}  // namespace periodhecke
