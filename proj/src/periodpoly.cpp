#include "periodhecke/periodpoly.hpp"

#include "periodhecke/errors.hpp"
#include "periodhecke/exactnum.hpp"
#include "periodhecke/polyring.hpp"

#include <string>

namespace periodhecke {

namespace {

std::string describe(const PeriodContext& ctx) {
  return "(N=" + std::to_string(ctx.level()) + ", w=" + std::to_string(ctx.w()) + ", n=" + std::to_string(ctx.n()) +
         ")";
}

void require_interior(const PeriodContext& ctx, const char* op) {
  if (ctx.n() <= 0 || ctx.n() >= ctx.w()) {
    throw PreconditionError(std::string(op) + " requires 0 < n < w, got " + describe(ctx));
  }
}

// The boundary term shared by the m = w and m = 0 period formulas (without
// the leading sign): binom(w+2, n+1) B_{n+1} B_{ñ+1} / ((w+1) N^e B_{w+2}) * euler.
Rational boundary_term(const PeriodContext& ctx, int level_exponent, int euler_exponent) {
  const int w = ctx.w();
  const int n = ctx.n();
  const Rational bb = bernoulli_number(n + 1) * bernoulli_number(ctx.ntilde() + 1);
  if (bb == 0) return 0;
  return Rational(binomial(w + 2, n + 1)) * bb /
         (Rational(w + 1) * pow(Rational(ctx.level()), level_exponent) * bernoulli_number(w + 2)) *
         euler_factor(ctx.level(), euler_exponent, w + 2);
}

// c_rat * r_m(R_n) for m + n > w.
Rational upper_period_numerator(const PeriodContext& ctx, int m) {
  const int n = ctx.n();
  const int nt = ctx.ntilde();
  Rational value = Rational(binomial(m + 1, nt)) * bernoulli_or_zero(m - nt + 1) / (m + 1);
  if (m == nt + 1) value -= Rational(1) / (Rational(ctx.level()) * n);
  if (m == ctx.w()) value -= boundary_term(ctx, n + 1, nt + 1);
  return value;
}

// c_rat * r_m(R_n) for m + n < w.
Rational lower_period_numerator(const PeriodContext& ctx, int m) {
  const int w = ctx.w();
  const int n = ctx.n();
  const int nt = ctx.ntilde();
  const int mt = w - m;
  Rational inner = Rational(binomial(mt + 1, n)) * bernoulli_or_zero(mt - n + 1) / (mt + 1);
  if (mt == n + 1) inner -= Rational(1) / (Rational(ctx.level()) * nt);
  if (m == 0) inner -= boundary_term(ctx, nt + 1, n + 1);
  return pow(Rational(-ctx.level()), nt - m) * inner;
}

}  // namespace

PeriodContext PeriodContext::make(long level, int w, int n) {
  if (level < 2) throw PreconditionError("level must be at least 2, got " + std::to_string(level));
  if (w <= 0 || w % 2 != 0) throw PreconditionError("w must be even and positive, got " + std::to_string(w));
  if (n < 0 || n > w) throw PreconditionError("n must satisfy 0 <= n <= w, got n=" + std::to_string(n));
  return PeriodContext(level, w, n);
}

Rational PeriodContext::c_rat() const {
  Rational b(binomial(w_, n_));
  return n_ % 2 == 0 ? b : Rational(-b);
}

Rational euler_factor(long level, int a, int b) {
  Rational acc = 1;
  for (long p : prime_divisors(level)) {
    const Rational prime(p);
    acc *= (1 - pow(prime, -a)) / (1 - pow(prime, -b));
  }
  return acc;
}

BoundedPolynomial s_poly(const PeriodContext& ctx) {
  require_interior(ctx, "s_poly");
  const int w = ctx.w();
  const int n = ctx.n();
  const int nt = ctx.ntilde();
  BoundedPolynomial head = reciprocal_scale(bernoulli_poly0(nt + 1), ctx.level(), w);
  head *= pow(Rational(ctx.level()), nt) / (nt + 1);
  BoundedPolynomial tail = bernoulli_poly0(n + 1).with_bound(w);
  tail *= Rational(1, n + 1);
  return head - tail;
}

BoundedPolynomial r_plus_correction(const PeriodContext& ctx) {
  require_interior(ctx, "r_plus_correction");
  const int w = ctx.w();
  const int n = ctx.n();
  const int nt = ctx.ntilde();
  const Rational level(ctx.level());
  const Rational scale = Rational(w + 2) * bernoulli_number(n + 1) * bernoulli_number(nt + 1) /
                         (Rational((n + 1) * (nt + 1)) * bernoulli_number(w + 2));
  BoundedPolynomial corr(w);
  corr[w] = scale * euler_factor(ctx.level(), n + 1, w + 2) / level;
  corr[0] = -scale * euler_factor(ctx.level(), nt + 1, w + 2) / pow(level, n + 1);
  return corr;
}

BoundedPolynomial r_plus_odd(const PeriodContext& ctx) {
  require_interior(ctx, "r_plus_odd");
  if (ctx.n() % 2 == 0) {
    throw UnsupportedError(ErrorCode::unsupported_parity, "r_plus_odd requires odd n, got " + describe(ctx));
  }
  return s_poly(ctx) - r_plus_correction(ctx);
}

Rational period_value(const PeriodContext& ctx, int m) {
  const int w = ctx.w();
  const int n = ctx.n();
  if (m < 0 || m > w) throw PreconditionError("period index m out of range [0, w]: " + std::to_string(m));
  const Rational level(ctx.level());

  if (n == 0 || n == w) {
    if (m % 2 == 0 || m == 0 || m == w) {
      throw UnsupportedError(ErrorCode::unsupported_parity,
                             "periods of R_0 and R_w are only known for odd 0 < m < w, got m=" + std::to_string(m));
    }
    const int mt = w - m;
    const Rational tail = Rational(w + 2) * bernoulli_number(m + 1) * bernoulli_number(mt + 1) /
                          (Rational((m + 1) * (mt + 1)) * bernoulli_number(w + 2));
    if (n == w) {
      Rational value = bernoulli_number(m + 1) / (m + 1);
      if (w == mt + 1) value -= Rational(1) / (level * w);
      value -= tail / pow(level, m + 1) * euler_factor(ctx.level(), mt + 1, w + 2);
      return value;
    }
    Rational inner = bernoulli_number(mt + 1) / (mt + 1);
    if (w == m + 1) inner -= Rational(1) / (level * w);
    inner -= tail / pow(level, mt + 1) * euler_factor(ctx.level(), m + 1, w + 2);
    return -pow(level, mt) * inner;
  }

  if ((m + n) % 2 == 0) {
    throw UnsupportedError(ErrorCode::unsupported_parity,
                           "r_m(R_n) needs m and n of opposite parity, got m=" + std::to_string(m) + ", " +
                               describe(ctx));
  }
  const Rational numerator = m + n > w ? upper_period_numerator(ctx, m) : lower_period_numerator(ctx, m);
  return numerator / ctx.c_rat();
}

BoundedPolynomial assemble_from_periods(const PeriodContext& ctx, PeriodSign sign) {
  require_interior(ctx, "assemble_from_periods");
  const int w = ctx.w();
  const bool minus = sign == PeriodSign::minus;
  if (minus != (ctx.n() % 2 == 0)) {
    throw UnsupportedError(ErrorCode::unsupported_parity,
                           std::string("assemble_from_periods: ") + (minus ? "minus needs even n" : "plus needs odd n") +
                               ", got " + describe(ctx));
  }
  // r(f)(X) = sum_j binom(w, j) (-1)^(w-j) X^j r_{w-j}(f); odd j feed r^-, even j feed r^+.
  BoundedPolynomial out(w);
  for (int j = minus ? 1 : 0; j <= w; j += 2) {
    Rational term = Rational(binomial(w, j)) * period_value(ctx, w - j);
    out[j] = minus ? Rational(-term) : term;
  }
  return out;
}

}  // namespace periodhecke
