#include "periodhecke/polyring.hpp"

#include "periodhecke/errors.hpp"
#include "periodhecke/exactnum.hpp"

#include <string>

namespace periodhecke {

BoundedPolynomial reciprocal_scale(const BoundedPolynomial& p, const Rational& scale, int w) {
  const int deg = p.degree();
  if (deg > w) {
    throw PreconditionError("reciprocal_scale: degree " + std::to_string(deg) + " exceeds w = " + std::to_string(w));
  }
  BoundedPolynomial out(w);
  Rational power = 1;
  for (int k = 0; k <= deg; ++k) {
    if (p[k] != 0) out[w - k] = p[k] * power;
    power *= scale;
  }
  return out;
}

BoundedPolynomial reciprocal_scale(const BoundedPolynomial& p, long level, int w) {
  if (level < 1) throw PreconditionError("reciprocal_scale: level must be positive");
  return reciprocal_scale(p, Rational(1, level), w);
}

BoundedPolynomial compose_linear(const BoundedPolynomial& p, const Rational& a, const Rational& b) {
  const int deg = p.degree();
  BoundedPolynomial out(p.bound());
  for (int k = 0; k <= deg; ++k) {
    if (p[k] == 0) continue;
    for (int j = 0; j <= k; ++j) out[j] += p[k] * Rational(binomial(k, j)) * pow(a, j) * pow(b, k - j);
  }
  return out;
}

Rational coeff_inner_product(const BoundedPolynomial& f, const BoundedPolynomial& g) {
  if (f.bound() != g.bound()) {
    throw PreconditionError("coeff_inner_product: bounds differ (" + std::to_string(f.bound()) + " vs " +
                            std::to_string(g.bound()) + ")");
  }
  Rational acc = 0;
  for (int k = 0; k <= f.bound(); ++k) {
    if (f[k] != 0 && g[k] != 0) acc += f[k] * g[k];
  }
  return acc;
}

BoundedPolynomial even_part(const BoundedPolynomial& f) {
  BoundedPolynomial out = f;
  for (int k = 1; k <= out.bound(); k += 2) out[k] = 0;
  return out;
}

BoundedPolynomial odd_part(const BoundedPolynomial& f) {
  BoundedPolynomial out = f;
  for (int k = 0; k <= out.bound(); k += 2) out[k] = 0;
  return out;
}

bool is_even_polynomial(const BoundedPolynomial& f) { return odd_part(f).is_zero(); }

bool is_odd_polynomial(const BoundedPolynomial& f) { return even_part(f).is_zero(); }

BoundedPolynomial linear_power(const Rational& a, const Rational& b, int exponent, int bound) {
  if (exponent < 0) throw PreconditionError("linear_power: negative exponent");
  if (exponent > bound && a != 0) throw PreconditionError("linear_power: degree exceeds bound");
  BoundedPolynomial out(bound);
  for (int k = 0; k <= exponent; ++k) {
    if (k > bound) break;
    out[k] = Rational(binomial(exponent, k)) * pow(a, k) * pow(b, exponent - k);
  }
  return out;
}

}  // namespace periodhecke
