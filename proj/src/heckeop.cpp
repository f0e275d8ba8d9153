#include "periodhecke/heckeop.hpp"

#include "periodhecke/errors.hpp"
#include "periodhecke/exactlinalg.hpp"
#include "periodhecke/heckesum.hpp"
#include "periodhecke/parallel.hpp"
#include "periodhecke/periodpoly.hpp"
#include "periodhecke/polyring.hpp"

#include <string>

namespace periodhecke {

namespace {

void check_weight(int w) {
  if (w <= 0 || w % 2 != 0) throw PreconditionError("w must be even and positive, got " + std::to_string(w));
}

}  // namespace

long dim_cusp(long level, int w) {
  check_weight(w);
  const long k = w + 2;
  switch (level) {
    case 2: return (w - 2) / 4;
    case 3: return k / 3 - 1;
    case 4: return k / 2 - 2;
    case 5: return 2 * (k / 4) - 1;
    default:
      throw UnsupportedError(ErrorCode::unsupported_level,
                             "level " + std::to_string(level) + " is not supported (expected 2..5)");
  }
}

Matrix basis_matrix(int w, BasisFamily family) {
  const long d = dim_cusp(2, w);
  Matrix b(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  for (long i = 1; i <= d; ++i) {
    BoundedPolynomial p(0);
    switch (family) {
      case BasisFamily::even_low: p = s_poly(PeriodContext::make(2, w, static_cast<int>(2 * i))); break;
      case BasisFamily::even_high: p = s_poly(PeriodContext::make(2, w, static_cast<int>(w - 2 * i))); break;
      case BasisFamily::odd_low: p = r_plus_odd(PeriodContext::make(2, w, static_cast<int>(2 * i - 1))); break;
      case BasisFamily::odd_high: p = r_plus_odd(PeriodContext::make(2, w, static_cast<int>(w - 2 * i + 1))); break;
    }
    for (long j = 1; j <= d; ++j) {
      long power = 0;
      switch (family) {
        case BasisFamily::even_low: power = w - 2 * j + 1; break;
        case BasisFamily::even_high: power = 2 * j - 1; break;
        case BasisFamily::odd_low: power = w - 2 * j; break;
        case BasisFamily::odd_high: power = 2 * j; break;
      }
      b(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = p.coefficient(static_cast<int>(power));
    }
  }
  return b;
}

HeckeComputation compute_hecke(long level, int w, long m, Pairing pairing) {
  if (m <= 0) throw PreconditionError("m must be positive, got " + std::to_string(m));
  const long dim = dim_cusp(level, w);
  if (dim == 0) {
    throw UnsupportedError(ErrorCode::dimension_zero, "dim S_" + std::to_string(w + 2) + "(Gamma_0(" +
                                                          std::to_string(level) + ")) = 0");
  }
  if (2 * dim >= w) {
    throw BasisDeficientError(0, static_cast<std::size_t>(dim),
                              "not enough even indices 0 < 2i < w for dimension " + std::to_string(dim));
  }

  HeckeComputation hc;
  hc.level = level;
  hc.w = w;
  hc.m = m;
  const auto d = static_cast<std::size_t>(dim);
  for (std::size_t i = 1; i <= d; ++i) hc.basis_indices.push_back(static_cast<int>(2 * i));

  // One task per basis index: S_{2i} and r^-(R^m_{2i}).
  struct Column {
    BoundedPolynomial s{0};
    BoundedPolynomial image{0};
  };
  const std::vector<Column> cols = parallel_map(d, [&](std::size_t i) {
    const PeriodContext ctx = PeriodContext::make(level, w, hc.basis_indices[i]);
    return Column{s_poly(ctx), r_minus_hecke(ctx, m)};
  });

  hc.s1 = Matrix(d, d);
  hc.s2 = Matrix(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      hc.s1(i, j) = coeff_inner_product(cols[i].s, cols[j].s);
      hc.s2(i, j) = pairing == Pairing::standard ? coeff_inner_product(cols[i].s, cols[j].image)
                                                 : coeff_inner_product(cols[j].s, cols[i].image);
    }
  }

  Matrix s1_inv;
  try {
    s1_inv = inverse(hc.s1);
  } catch (const SingularMatrixError& e) {
    throw BasisDeficientError(e.rank(), d,
                              "S1 is singular; R_{2i}, i = 1.." + std::to_string(dim) + " do not form a basis");
  }
  hc.t = s1_inv * hc.s2;
  hc.charpoly = periodhecke::charpoly(hc.t);
  return hc;
}

Matrix hecke_matrix(long level, int w, long m) { return compute_hecke(level, w, m).t; }

std::vector<Rational> hecke_charpoly(long level, int w, long m) { return compute_hecke(level, w, m).charpoly; }

}  // namespace periodhecke
