#include "periodhecke/qoracle.hpp"

#include "periodhecke/errors.hpp"
#include "periodhecke/exactlinalg.hpp"
#include "periodhecke/exactnum.hpp"
#include "periodhecke/heckeop.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace periodhecke {

namespace {

using IntSeries = std::vector<BigInt>;

// prod_{n>=1} (1 - q^n) through q^len, by the pentagonal number theorem.
IntSeries euler_product(long len) {
  IntSeries p(static_cast<std::size_t>(len) + 1, BigInt(0));
  for (long k = 0;; ++k) {
    const long g1 = k * (3 * k - 1) / 2;
    const long g2 = k * (3 * k + 1) / 2;
    if (g1 > len) break;
    const int sign = k % 2 == 0 ? 1 : -1;
    p[static_cast<std::size_t>(g1)] += sign;
    if (k > 0 && g2 <= len) p[static_cast<std::size_t>(g2)] += sign;
  }
  return p;
}

IntSeries mul(const IntSeries& a, const IntSeries& b) {
  IntSeries out(a.size(), BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// 1 / a for a unit-constant integer series.
IntSeries inverse_series(const IntSeries& a) {
  IntSeries inv(a.size(), BigInt(0));
  inv[0] = 1;
  for (std::size_t n = 1; n < a.size(); ++n) {
    BigInt acc = 0;
    for (std::size_t i = 1; i <= n; ++i) acc += a[i] * inv[n - i];
    inv[n] = -acc;
  }
  return inv;
}

IntSeries int_pow(IntSeries base, unsigned long e) {
  IntSeries result(base.size(), BigInt(0));
  result[0] = 1;
  while (e > 0) {
    if (e & 1UL) result = mul(result, base);
    e >>= 1UL;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

void require_even_weight(int k, int min_k) {
  if (k % 2 != 0) throw UnsupportedError("odd weight " + std::to_string(k) + " is not supported");
  if (k < min_k) {
    throw UnsupportedError("weight " + std::to_string(k) + " is below the minimum " + std::to_string(min_k));
  }
}

// T_p for a single prime p on a level-2 form of weight k.
QSeries hecke_prime(const QSeries& f, long p) {
  const long out_prec = f.prec() / p;
  QSeries g(f.weight(), out_prec);
  const Rational pk1 = p == 2 ? Rational(0) : Rational(pow(BigInt(p), static_cast<unsigned long>(f.weight() - 1)));
  for (long n = 0; n <= out_prec; ++n) {
    Rational v = f[n * p];
    if (p != 2 && n % p == 0) v += pk1 * f[n / p];
    g[n] = v;
  }
  return g;
}

}  // namespace

QSeries eta_quotient(const std::vector<EtaFactor>& parts, long prec) {
  if (prec < 0) throw PreconditionError("precision must be nonnegative");
  long order24 = 0;
  long exp_sum = 0;
  for (const auto& part : parts) {
    if (part.scale < 1) throw PreconditionError("eta scale must be positive");
    order24 += part.scale * part.exponent;
    exp_sum += part.exponent;
  }
  if (order24 % 24 != 0 || order24 < 0) {
    throw UnsupportedError("eta quotient has leading exponent " + std::to_string(order24) +
                           "/24, which is not a nonnegative integer");
  }
  if (exp_sum % 2 != 0) throw UnsupportedError("eta quotient has half-integral weight");
  const long shift = order24 / 24;

  QSeries out(static_cast<int>(exp_sum / 2), prec);
  if (shift > prec) return out;
  const long len = prec - shift;
  IntSeries acc(static_cast<std::size_t>(len) + 1, BigInt(0));
  acc[0] = 1;
  for (const auto& part : parts) {
    if (part.exponent == 0) continue;
    IntSeries base(static_cast<std::size_t>(len) + 1, BigInt(0));
    const IntSeries e = euler_product(len / part.scale);
    for (std::size_t i = 0; i < e.size(); ++i) base[i * static_cast<std::size_t>(part.scale)] = e[i];
    if (part.exponent < 0) base = inverse_series(base);
    const auto r = static_cast<unsigned long>(part.exponent < 0 ? -part.exponent : part.exponent);
    acc = mul(acc, int_pow(base, r));
  }
  for (long n = 0; n <= len; ++n) out[n + shift] = Rational(acc[static_cast<std::size_t>(n)]);
  return out;
}

QSeries eisenstein_level1(int k, long prec) {
  require_even_weight(k, 2);
  QSeries e(k, prec);
  e[0] = 1;
  const Rational factor = Rational(-2 * k) / bernoulli_number(k);
  for (long n = 1; n <= prec; ++n) e[n] = factor * Rational(sigma(k - 1, n));
  return e;
}

QSeries eisenstein_gamma02(int k, Cusp cusp, long prec) {
  require_even_weight(k, 4);
  const QSeries e = eisenstein_level1(k, prec);
  const QSeries e2 = e.rescaled(2).truncated(prec);
  const Rational two_k(pow(BigInt(2), static_cast<unsigned long>(k)));
  const Rational denom = two_k - 1;
  if (cusp == Cusp::infinity) return (two_k * e2 - e) * (1 / denom);
  return (e - e2) * (two_k / denom);
}

QSeries weight2_form(long prec) {
  const QSeries e = eisenstein_level1(2, prec);
  return Rational(2) * e.rescaled(2).truncated(prec) - e;
}

QSeries hecke_on_qseries(const QSeries& f, long m) {
  if (m < 1) throw PreconditionError("Hecke index must be positive, got " + std::to_string(m));
  QSeries g = f;
  for (const long p : prime_divisors(m)) {
    int e = 0;
    for (long rest = m; rest % p == 0; rest /= p) ++e;
    if (p == 2) {
      for (int i = 0; i < e; ++i) g = hecke_prime(g, 2);
      continue;
    }
    // T_{p^{r+1}} = T_p T_{p^r} - p^{k-1} T_{p^{r-1}}
    const Rational pk1r(pow(BigInt(p), static_cast<unsigned long>(f.weight() - 1)));
    QSeries prev = g;
    QSeries cur = hecke_prime(g, p);
    for (int r = 1; r < e; ++r) {
      QSeries next = hecke_prime(cur, p) - pk1r * prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    g = std::move(cur);
  }
  return g;
}

QSeries hecke_on_qseries(const QSeries& f, long m, long out_prec) {
  if (m < 1) throw PreconditionError("Hecke index must be positive, got " + std::to_string(m));
  if (f.prec() < m * out_prec) throw PrecisionTooLowError(m * out_prec, f.prec());
  return hecke_on_qseries(f, m).truncated(out_prec);
}

std::vector<QSeries> cusp_basis_gamma02(int k, long prec) {
  if (k % 2 != 0) throw UnsupportedError("odd weight " + std::to_string(k) + " is not supported");
  std::vector<QSeries> basis;
  if (k < 8) return basis;
  const QSeries delta8 = eta_quotient({{1, 8}, {2, 8}}, prec);
  const QSeries m2 = weight2_form(prec);
  const QSeries e4 = eisenstein_level1(4, prec);
  for (int b = 0; 4 * b <= k - 8; ++b) {
    const int a = (k - 8 - 4 * b) / 2;
    basis.push_back(delta8 * pow(m2, static_cast<unsigned>(a)) * pow(e4, static_cast<unsigned>(b)));
  }
  return basis;
}

long oracle_precision(int k, long m) { return std::max<long>(k / 2 + 10, m * (k / 4 + 2)); }

namespace {

// Columns = series coefficients 1..rows of each form.
Matrix coefficient_columns(const std::vector<QSeries>& forms, long rows) {
  Matrix a(static_cast<std::size_t>(rows), forms.size());
  for (std::size_t j = 0; j < forms.size(); ++j)
    for (long n = 1; n <= rows; ++n) a(static_cast<std::size_t>(n - 1), j) = forms[j][n];
  return a;
}

}  // namespace

Matrix hecke_matrix_oracle(int k, long m, long prec) {
  require_even_weight(k, 8);
  if (m < 1) throw PreconditionError("Hecke index must be positive, got " + std::to_string(m));
  if (prec == 0) prec = oracle_precision(k, m);
  const long sturm = k / 4;
  const long rows = prec / m;
  if (rows < sturm + 1) throw PrecisionTooLowError(m * (sturm + 1), prec);

  const std::vector<QSeries> basis = cusp_basis_gamma02(k, prec);
  std::vector<QSeries> images;
  images.reserve(basis.size());
  for (const auto& f : basis) images.push_back(hecke_on_qseries(f, m, rows));

  const Matrix a = coefficient_columns(basis, rows);
  const Matrix b = coefficient_columns(images, rows);
  const std::size_t r = rank(a);
  if (r < basis.size()) throw BasisDeficientError(r, basis.size(), "q-expansion basis is not independent");
  SolveResult sol = solve_exact(a, b);
  if (sol.status != SolveStatus::unique) {
    throw Error(ErrorCode::inconsistent_system,
                "Hecke images are not in the span of the basis through q^" + std::to_string(rows));
  }
  return sol.solution;
}

Theorem14Report theorem14_check(int k, long prec) {
  require_even_weight(k, 8);
  if (prec == 0) prec = k / 2 + 10;
  if (prec < k / 4 + 1) throw PrecisionTooLowError(k / 4 + 1, prec);

  Theorem14Report report;
  report.k = k;
  report.dim = dim_cusp(2, k - 2);
  const std::vector<QSeries> basis = cusp_basis_gamma02(k, prec);
  const Matrix a = coefficient_columns(basis, prec);

  auto check_family = [&](bool first, std::size_t& rank_out, bool& cusp_out) {
    std::vector<QSeries> products;
    for (long j = 1; j <= report.dim; ++j) {
      const int low = static_cast<int>(2 * j + 2);
      const int high = k - low;
      products.push_back(first ? eisenstein_gamma02(low, Cusp::zero, prec) * eisenstein_gamma02(high, Cusp::infinity, prec)
                               : eisenstein_gamma02(high, Cusp::zero, prec) * eisenstein_gamma02(low, Cusp::infinity, prec));
    }
    cusp_out = true;
    for (const auto& p : products)
      if (p[0] != 0) cusp_out = false;
    const Matrix b = coefficient_columns(products, prec);
    if (cusp_out) cusp_out = solve_exact(a, b).status == SolveStatus::unique;
    rank_out = rank(b);
  };
  check_family(true, report.rank_first, report.cusp_first);
  check_family(false, report.rank_second, report.cusp_second);
  return report;
}

}  // namespace periodhecke
