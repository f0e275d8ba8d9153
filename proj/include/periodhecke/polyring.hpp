#pragma once

// The two nonstandard polynomial operations used by the period formulas,
// plus parity masking.

#include "periodhecke/polynomial.hpp"

namespace periodhecke {

/// X^w * P(scale / X) as an element of V_w: the monomial x^k maps to
/// scale^k * X^(w-k). Requires deg(P) <= w.
BoundedPolynomial reciprocal_scale(const BoundedPolynomial& p, const Rational& scale, int w);

/// X^w * P(1 / (N X)); shorthand for scale = 1/N.
BoundedPolynomial reciprocal_scale(const BoundedPolynomial& p, long level, int w);

/// P(aX + b), keeping P's bound. Requires the result to fit that bound, which
/// always holds since the degree cannot grow.
BoundedPolynomial compose_linear(const BoundedPolynomial& p, const Rational& a, const Rational& b);

/// sum_k f_k g_k over the shared coefficient range. Both must have the same bound.
Rational coeff_inner_product(const BoundedPolynomial& f, const BoundedPolynomial& g);

/// Even part (f(X) + f(-X)) / 2 and odd part (f(X) - f(-X)) / 2.
BoundedPolynomial even_part(const BoundedPolynomial& f);
BoundedPolynomial odd_part(const BoundedPolynomial& f);
bool is_even_polynomial(const BoundedPolynomial& f);
bool is_odd_polynomial(const BoundedPolynomial& f);

/// (aX + b)^e in V_bound with integer coefficients.
BoundedPolynomial linear_power(const Rational& a, const Rational& b, int exponent, int bound);

}  // namespace periodhecke
