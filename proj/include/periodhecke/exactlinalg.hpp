#pragma once

// Exact dense linear algebra over the rationals, plus the Hankel determinant
// identities for Bernoulli numbers.

#include "periodhecke/matrix.hpp"
#include "periodhecke/rational.hpp"

#include <span>
#include <vector>

namespace periodhecke {

/// Fraction-free (Bareiss) elimination after clearing row denominators.
Rational determinant(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Exact inverse. Throws SingularMatrixError (carrying the rank) when singular.
Matrix inverse(const Matrix& m);

enum class SolveStatus { unique, inconsistent, underdetermined };

struct SolveResult {
  SolveStatus status = SolveStatus::inconsistent;
  Matrix solution;  ///< cols(A) x cols(B); only meaningful when status == unique.
};

/// Solves A X = B exactly; A may be tall (overdetermined). Reports whether the
/// system is consistent and whether the solution is unique.
SolveResult solve_exact(const Matrix& a, const Matrix& b);

/// det(xI - M), monic, coefficients ascending (index k holds the x^k coefficient).
/// Faddeev-LeVerrier over the rationals.
std::vector<Rational> charpoly(const Matrix& m);

/// prod_i (x - roots[i]) expanded, coefficients ascending.
std::vector<Rational> poly_from_roots(std::span<const Rational> roots);

/// Companion matrix of a monic polynomial given ascending coefficients
/// (the leading 1 included).
Matrix companion_matrix(std::span<const Rational> monic_ascending);

struct HankelIdentity {
  Rational determinant;  ///< det_{0<=i,j<n} [B_{2i+2j+2k} / (2i+2j+2k)!]
  Rational closed_form;  ///< the corresponding product formula
};

/// which in {1, 2, 3} selects the index offset k; n >= 1 is the matrix size.
HankelIdentity hankel_bernoulli(int which, int n);

/// The n x n Hankel matrix behind hankel_bernoulli.
Matrix bernoulli_hankel_matrix(int which, int n);

}  // namespace periodhecke
