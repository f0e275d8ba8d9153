#pragma once

#include "periodhecke/rational.hpp"

#include <span>
#include <vector>

namespace periodhecke {

/// A polynomial in X of degree at most `bound`, stored densely with ascending
/// powers: coeffs()[k] is the coefficient of X^k and coeffs().size() == bound + 1.
class BoundedPolynomial {
 public:
  explicit BoundedPolynomial(int bound = 0);
  /// Short coefficient lists are zero-padded; nonzero entries past `bound` are rejected.
  BoundedPolynomial(int bound, std::vector<Rational> coeffs);

  static BoundedPolynomial monomial(int bound, int power, const Rational& coeff = 1);
  static BoundedPolynomial constant(int bound, const Rational& value);

  int bound() const noexcept { return bound_; }
  /// Index of the highest nonzero coefficient, -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const;

  const Rational& operator[](int power) const { return coeffs_.at(static_cast<std::size_t>(power)); }
  Rational& operator[](int power) { return coeffs_.at(static_cast<std::size_t>(power)); }
  /// Zero for powers outside [0, bound].
  Rational coefficient(int power) const;
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  /// Same polynomial in V_{new_bound}; requires degree() <= new_bound.
  BoundedPolynomial with_bound(int new_bound) const;

  BoundedPolynomial& operator+=(const BoundedPolynomial& other);
  BoundedPolynomial& operator-=(const BoundedPolynomial& other);
  BoundedPolynomial& operator*=(const Rational& scalar);

  Rational evaluate(const Rational& x) const;

  friend bool operator==(const BoundedPolynomial& lhs, const BoundedPolynomial& rhs);

 private:
  int bound_;
  std::vector<Rational> coeffs_;
};

BoundedPolynomial operator+(BoundedPolynomial lhs, const BoundedPolynomial& rhs);
BoundedPolynomial operator-(BoundedPolynomial lhs, const BoundedPolynomial& rhs);
BoundedPolynomial operator-(BoundedPolynomial p);
BoundedPolynomial operator*(BoundedPolynomial p, const Rational& scalar);
BoundedPolynomial operator*(const Rational& scalar, BoundedPolynomial p);

/// Product in V_bound. Requires deg(lhs) + deg(rhs) <= bound.
BoundedPolynomial multiply(const BoundedPolynomial& lhs, const BoundedPolynomial& rhs, int bound);
/// Product with bound max(lhs.bound(), rhs.bound()).
BoundedPolynomial operator*(const BoundedPolynomial& lhs, const BoundedPolynomial& rhs);

}  // namespace periodhecke
