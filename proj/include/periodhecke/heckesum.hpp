#pragma once

// The Hecke side of the period formulas: the sign-restricted part of H_{N,m},
// the polynomial S^m_{N,w,n}, the full r^-(R^m_{N,w,n}) including the Moebius
// correction for N | m, and the closed-form weight-8 eigenvalue on Gamma_0(2).

#include "periodhecke/periodpoly.hpp"
#include "periodhecke/polynomial.hpp"
#include "periodhecke/rational.hpp"

#include <compare>
#include <vector>

namespace periodhecke {

struct IntMat2 {
  long a = 0;
  long b = 0;
  long c = 0;
  long d = 0;

  long det() const { return a * d - b * c; }
  IntMat2 negated() const { return {-a, -b, -c, -d}; }
  auto operator<=>(const IntMat2&) const = default;
};

/// Matrices [[a, b], [c, d]] with ad - bc = m, N | c, gcd(a, N) = 1 and abcd < 0,
/// sorted lexicographically by (a, b, c, d). abcd < 0 with det m > 0 forces
/// ad > 0 > bc and |ad| + |bc| = m, so the search runs over the splittings
/// m = s + (m - s) and the signed divisor pairs of each part.
std::vector<IntMat2> enumerate_h_neg(long level, long m);

/// (1/2) sum over enumerate_h_neg of sgn(ab) (aX+b)^n (cX+d)^ñ.
BoundedPolynomial hecke_orbit_sum(const PeriodContext& ctx, long m);
/// sum over ad = m, a > 0, gcd(a, N) = 1 of
///   N^ñ a^n X^w B^0_{ñ+1}(d/(NX)) / (ñ+1) - d^ñ B^0_{n+1}(aX) / (n+1).
BoundedPolynomial hecke_diagonal_sum(const PeriodContext& ctx, long m);
/// S^m_{N,w,n}(X) = hecke_orbit_sum + hecke_diagonal_sum. Requires 0 < n < w and m >= 1.
BoundedPolynomial s_poly_m(const PeriodContext& ctx, long m);

/// The term added to S^m when N | m:
///   -(NX)^w / (n+1) * sum_{d|N} mu(N/d) d^-n sum_{c | m/N} c^ñ B^0_{n+1}(md / (c N^2 X)).
/// Zero when N does not divide m.
BoundedPolynomial moebius_correction(const PeriodContext& ctx, long m);

/// r^-(R^m_{N,w,n}) = s_poly_m + moebius_correction. Requires even n.
BoundedPolynomial r_minus_hecke(const PeriodContext& ctx, long m);

/// m sigma_1(m) + 240 sum_{u+2v=m} (u - v) sigma_1(u) sigma_3(v): the T_m
/// eigenvalue on S_8(Gamma_0(2)). Requires m odd and positive.
BigInt eigenvalue_w6(long m);

}  // namespace periodhecke
