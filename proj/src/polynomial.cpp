#include "periodhecke/polynomial.hpp"

#include "periodhecke/errors.hpp"

#include <algorithm>
#include <string>

namespace periodhecke {

namespace {

void require_bound(int bound) {
  if (bound < 0) throw PreconditionError("polynomial bound must be nonnegative, got " + std::to_string(bound));
}

}  // namespace

BoundedPolynomial::BoundedPolynomial(int bound) : bound_(bound) {
  require_bound(bound);
  coeffs_.assign(static_cast<std::size_t>(bound) + 1, Rational(0));
}

BoundedPolynomial::BoundedPolynomial(int bound, std::vector<Rational> coeffs) : bound_(bound) {
  require_bound(bound);
  const auto size = static_cast<std::size_t>(bound) + 1;
  for (std::size_t k = size; k < coeffs.size(); ++k) {
    if (coeffs[k] != 0) {
      throw PreconditionError("coefficient of X^" + std::to_string(k) + " exceeds bound " + std::to_string(bound));
    }
  }
  coeffs.resize(size, Rational(0));
  coeffs_ = std::move(coeffs);
}

BoundedPolynomial BoundedPolynomial::monomial(int bound, int power, const Rational& coeff) {
  if (power < 0 || power > bound) {
    throw PreconditionError("monomial X^" + std::to_string(power) + " outside bound " + std::to_string(bound));
  }
  BoundedPolynomial p(bound);
  p[power] = coeff;
  return p;
}

BoundedPolynomial BoundedPolynomial::constant(int bound, const Rational& value) { return monomial(bound, 0, value); }

int BoundedPolynomial::degree() const {
  for (int k = bound_; k >= 0; --k) {
    if (coeffs_[static_cast<std::size_t>(k)] != 0) return k;
  }
  return -1;
}

bool BoundedPolynomial::is_zero() const { return degree() < 0; }

Rational BoundedPolynomial::coefficient(int power) const {
  if (power < 0 || power > bound_) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

BoundedPolynomial BoundedPolynomial::with_bound(int new_bound) const {
  if (degree() > new_bound) {
    throw PreconditionError("degree " + std::to_string(degree()) + " does not fit bound " + std::to_string(new_bound));
  }
  std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + std::min(bound_, new_bound) + 1);
  return BoundedPolynomial(new_bound, std::move(c));
}

BoundedPolynomial& BoundedPolynomial::operator+=(const BoundedPolynomial& other) {
  if (other.bound_ > bound_) *this = with_bound(other.bound_);
  for (int k = 0; k <= other.bound_; ++k) coeffs_[static_cast<std::size_t>(k)] += other[k];
  return *this;
}

BoundedPolynomial& BoundedPolynomial::operator-=(const BoundedPolynomial& other) {
  if (other.bound_ > bound_) *this = with_bound(other.bound_);
  for (int k = 0; k <= other.bound_; ++k) coeffs_[static_cast<std::size_t>(k)] -= other[k];
  return *this;
}

BoundedPolynomial& BoundedPolynomial::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Rational BoundedPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (int k = bound_; k >= 0; --k) acc = acc * x + coeffs_[static_cast<std::size_t>(k)];
  return acc;
}

// Polynomials compare as elements of the polynomial ring; the bound is a
// container property and does not participate.
bool operator==(const BoundedPolynomial& lhs, const BoundedPolynomial& rhs) {
  const int top = std::max(lhs.bound_, rhs.bound_);
  for (int k = 0; k <= top; ++k) {
    if (lhs.coefficient(k) != rhs.coefficient(k)) return false;
  }
  return true;
}

BoundedPolynomial operator+(BoundedPolynomial lhs, const BoundedPolynomial& rhs) { return lhs += rhs; }
BoundedPolynomial operator-(BoundedPolynomial lhs, const BoundedPolynomial& rhs) { return lhs -= rhs; }
BoundedPolynomial operator-(BoundedPolynomial p) { return p *= Rational(-1); }
BoundedPolynomial operator*(BoundedPolynomial p, const Rational& scalar) { return p *= scalar; }
BoundedPolynomial operator*(const Rational& scalar, BoundedPolynomial p) { return p *= scalar; }

BoundedPolynomial multiply(const BoundedPolynomial& lhs, const BoundedPolynomial& rhs, int bound) {
  const int dl = lhs.degree();
  const int dr = rhs.degree();
  BoundedPolynomial out(bound);
  if (dl < 0 || dr < 0) return out;
  if (dl + dr > bound) {
    throw PreconditionError("product degree " + std::to_string(dl + dr) + " exceeds bound " + std::to_string(bound));
  }
  for (int i = 0; i <= dl; ++i) {
    if (lhs[i] == 0) continue;
    for (int j = 0; j <= dr; ++j) out[i + j] += lhs[i] * rhs[j];
  }
  return out;
}

BoundedPolynomial operator*(const BoundedPolynomial& lhs, const BoundedPolynomial& rhs) {
  return multiply(lhs, rhs, std::max(lhs.bound(), rhs.bound()));
}

}  // namespace periodhecke
