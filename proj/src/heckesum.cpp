#include "periodhecke/heckesum.hpp"

#include "periodhecke/errors.hpp"
#include "periodhecke/exactnum.hpp"
#include "periodhecke/polyring.hpp"

#include <algorithm>
#include <string>

namespace periodhecke {

namespace {

void require_hecke_index(long m) {
  if (m < 1) throw PreconditionError("Hecke index m must be positive, got " + std::to_string(m));
}

// Integer coefficients of (aX + b)^e, ascending, padded to bound + 1.
std::vector<BigInt> integer_linear_power(long a, long b, int e, int bound) {
  std::vector<BigInt> out(static_cast<std::size_t>(bound) + 1, BigInt(0));
  for (int k = 0; k <= e; ++k) {
    out[static_cast<std::size_t>(k)] =
        binomial(e, k) * pow(BigInt(a), static_cast<unsigned long>(k)) * pow(BigInt(b), static_cast<unsigned long>(e - k));
  }
  return out;
}

}  // namespace

std::vector<IntMat2> enumerate_h_neg(long level, long m) {
  if (level < 1) throw PreconditionError("level must be positive, got " + std::to_string(level));
  require_hecke_index(m);
  std::vector<IntMat2> out;
  for (long s = 1; s < m; ++s) {
    const long t = m - s;  // ad = s, bc = -t
    for (long a_abs : divisors(s)) {
      for (long sa : {1L, -1L}) {
        const long a = sa * a_abs;
        if (gcd(a_abs, level) != 1) continue;
        const long d = s / a;
        for (long b_abs : divisors(t)) {
          for (long sb : {1L, -1L}) {
            const long b = sb * b_abs;
            const long c = -t / b;
            if (c % level != 0) continue;
            out.push_back({a, b, c, d});
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void require_interior(const PeriodContext& ctx) {
  if (ctx.n() <= 0 || ctx.n() >= ctx.w()) throw PreconditionError("S^m requires 0 < n < w");
}

}  // namespace

BoundedPolynomial hecke_orbit_sum(const PeriodContext& ctx, long m) {
  require_hecke_index(m);
  require_interior(ctx);
  const int w = ctx.w();
  const int n = ctx.n();
  const int nt = ctx.ntilde();
  const long level = ctx.level();

  // Orbit sum: every summand has integer coefficients, so accumulate in BigInt
  // and halve once at the end.
  std::vector<BigInt> orbit(static_cast<std::size_t>(w) + 1, BigInt(0));
  for (const IntMat2& g : enumerate_h_neg(level, m)) {
    const auto left = integer_linear_power(g.a, g.b, n, w);
    const auto right = integer_linear_power(g.c, g.d, nt, w);
    const bool positive = (g.a > 0) == (g.b > 0);
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= nt; ++j) {
        const auto k = static_cast<std::size_t>(i + j);
        if (positive) {
          orbit[k] += left[static_cast<std::size_t>(i)] * right[static_cast<std::size_t>(j)];
        } else {
          orbit[k] -= left[static_cast<std::size_t>(i)] * right[static_cast<std::size_t>(j)];
        }
      }
    }
  }
  BoundedPolynomial out(w);
  for (int k = 0; k <= w; ++k) out[k] = make_rational(orbit[static_cast<std::size_t>(k)], 2);
  return out;
}

BoundedPolynomial hecke_diagonal_sum(const PeriodContext& ctx, long m) {
  require_hecke_index(m);
  require_interior(ctx);
  const int w = ctx.w();
  const int n = ctx.n();
  const int nt = ctx.ntilde();
  const long level = ctx.level();
  BoundedPolynomial out(w);
  const BoundedPolynomial b_high = bernoulli_poly0(nt + 1);
  const BoundedPolynomial b_low = bernoulli_poly0(n + 1).with_bound(w);
  const Rational level_power = pow(Rational(level), nt);
  for (long a : divisors(m)) {
    if (gcd(a, level) != 1) continue;
    const long d = m / a;
    BoundedPolynomial head = reciprocal_scale(b_high, make_rational(d, level), w);
    head *= pow(Rational(a), n) * level_power / (nt + 1);
    BoundedPolynomial tail = compose_linear(b_low, Rational(a), Rational(0));
    tail *= pow(Rational(d), nt) / (n + 1);
    out += head;
    out -= tail;
  }
  return out;
}

BoundedPolynomial s_poly_m(const PeriodContext& ctx, long m) { return hecke_orbit_sum(ctx, m) + hecke_diagonal_sum(ctx, m); }

BoundedPolynomial moebius_correction(const PeriodContext& ctx, long m) {
  require_hecke_index(m);
  const int w = ctx.w();
  const int n = ctx.n();
  const int nt = ctx.ntilde();
  const long level = ctx.level();
  BoundedPolynomial out(w);
  if (m % level != 0) return out;
  const BoundedPolynomial b = bernoulli_poly0(n + 1);
  const Rational level_sq = Rational(level) * level;
  for (long d : divisors(level)) {
    const int mu = moebius(level / d);
    if (mu == 0) continue;
    for (long c : divisors(m / level)) {
      const Rational scale = Rational(m) * d / (Rational(c) * level_sq);
      BoundedPolynomial term = reciprocal_scale(b, scale, w);
      term *= Rational(mu) * pow(Rational(c), nt) / pow(Rational(d), n);
      out += term;
    }
  }
  out *= -pow(Rational(level), w) / (n + 1);
  return out;
}

BoundedPolynomial r_minus_hecke(const PeriodContext& ctx, long m) {
  if (ctx.n() % 2 != 0) {
    throw UnsupportedError(ErrorCode::unsupported_parity,
                           "r_minus_hecke is only known for even n, got n=" + std::to_string(ctx.n()));
  }
  return s_poly_m(ctx, m) + moebius_correction(ctx, m);
}

BigInt eigenvalue_w6(long m) {
  require_hecke_index(m);
  if (m % 2 == 0) {
    throw UnsupportedError(ErrorCode::unsupported_parity,
                           "eigenvalue_w6 is only available for odd m, got " + std::to_string(m));
  }
  BigInt acc = BigInt(m) * sigma(1, m);
  BigInt conv = 0;
  for (long v = 1; 2 * v < m; ++v) {
    const long u = m - 2 * v;
    conv += BigInt(u - v) * sigma(1, u) * sigma(3, v);
  }
  return acc + 240 * conv;
}

}  // namespace periodhecke
