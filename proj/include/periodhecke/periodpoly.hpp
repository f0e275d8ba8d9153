#pragma once

// Closed-form period polynomials of the cusp forms R_{N,w,n} on Gamma_0(N),
// their individual periods r_m, and the assembly of a period polynomial from
// those periods (an independent route to the same polynomials).
//
// Periods are kept in exact rationals: every closed form carries the factor
// 2*pi*i on both sides through c_{w,n} = (-1)^n 2 pi i binom(w, n), so only
// the rational part c_rat = (-1)^n binom(w, n) is ever stored.

#include "periodhecke/polynomial.hpp"
#include "periodhecke/rational.hpp"

namespace periodhecke {

/// (N, w, n, w - n) for one period computation. Construct through make().
class PeriodContext {
 public:
  /// Requires level >= 2, w even and positive, 0 <= n <= w.
  static PeriodContext make(long level, int w, int n);

  long level() const noexcept { return level_; }
  int w() const noexcept { return w_; }
  int n() const noexcept { return n_; }
  int ntilde() const noexcept { return w_ - n_; }
  /// (-1)^n binom(w, n).
  Rational c_rat() const;
  /// The same level and weight with n replaced by w - n.
  PeriodContext mirrored() const { return PeriodContext(level_, w_, w_ - n_); }

 private:
  PeriodContext(long level, int w, int n) : level_(level), w_(w), n_(n) {}
  long level_;
  int w_;
  int n_;
};

enum class PeriodSign { plus, minus };

/// prod over primes p | N of (1 - p^-a) / (1 - p^-b).
Rational euler_factor(long level, int a, int b);

/// S_{N,w,n}(X) = N^ñ X^w B^0_{ñ+1}(1/(NX)) / (ñ+1) - B^0_{n+1}(X) / (n+1).
/// Equals r^-(R_{N,w,n}) for even n. Requires 0 < n < w.
BoundedPolynomial s_poly(const PeriodContext& ctx);

/// r^+(R_{N,w,n}) for odd n: S_{N,w,n} minus the Euler-product correction
/// supported on X^w and X^0.
BoundedPolynomial r_plus_odd(const PeriodContext& ctx);

/// The correction subtracted by r_plus_odd (only X^w and X^0 are nonzero).
BoundedPolynomial r_plus_correction(const PeriodContext& ctx);

/// r_m(R_{N,w,n}) as an exact rational.
/// Defined for 0 < n < w with m and n of opposite parity, and for n in {0, w}
/// with m odd, 0 < m < w. Same-parity requests throw UnsupportedParity.
Rational period_value(const PeriodContext& ctx, int m);

/// Builds r^-(R_n) (sign = minus, needs even n) or r^+(R_n) (sign = plus,
/// needs odd n) from period_value alone, via the binomial expansion of (X - z)^w.
BoundedPolynomial assemble_from_periods(const PeriodContext& ctx, PeriodSign sign);

}  // namespace periodhecke
