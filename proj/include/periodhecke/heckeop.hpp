#pragma once

// Hecke matrices from period polynomials: T_m = S1^-1 S2 with respect to the
// basis c_{w,2i} R_{N,w,2i}, i = 1..dim.

#include "periodhecke/matrix.hpp"
#include "periodhecke/rational.hpp"

#include <vector>

namespace periodhecke {

/// dim S_{w+2}(Gamma_0(N)) for N in {2, 3, 4, 5}; w even, w >= 2.
long dim_cusp(long level, int w);

enum class BasisFamily { even_low, even_high, odd_low, odd_high };

/// d_w x d_w coefficient matrix whose nonvanishing determinant shows that
/// the corresponding family of R_n is a basis of S_{w+2}(Gamma_0(2)):
///   even_low   X^{w-2j+1} in r^-(R_{2i})
///   even_high  X^{2j-1}   in r^-(R_{w-2i})
///   odd_low    X^{w-2j}   in r^+(R_{2i-1})
///   odd_high   X^{2j}     in r^+(R_{w-2i+1})
/// Empty when d_w = 0.
Matrix basis_matrix(int w, BasisFamily family);

/// Which pairing forms S2. `standard` is <S_{2i}, r^-(R^m_{2j})>; `transposed`
/// swaps the roles (S2 -> S2^T) and is only there for comparison.
enum class Pairing { standard, transposed };

struct HeckeComputation {
  long level = 0;
  int w = 0;
  long m = 0;
  std::vector<int> basis_indices;  // 2, 4, ..., 2 dim
  Matrix s1;
  Matrix s2;
  Matrix t;
  std::vector<Rational> charpoly;  // ascending, monic
};

/// Full pipeline. Errors: UnsupportedLevel for N outside 2..5, DimensionZero,
/// BasisDeficient when S1 is singular or the index range runs out (2 dim >= w).
HeckeComputation compute_hecke(long level, int w, long m, Pairing pairing = Pairing::standard);

Matrix hecke_matrix(long level, int w, long m);
std::vector<Rational> hecke_charpoly(long level, int w, long m);

}  // namespace periodhecke
