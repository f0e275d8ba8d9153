#include "periodhecke/exactlinalg.hpp"

#include "periodhecke/errors.hpp"
#include "periodhecke/exactnum.hpp"

#include <string>
#include <utility>

namespace periodhecke {

namespace {

using IntRows = std::vector<std::vector<BigInt>>;

// Scales each row of m by the lcm of its denominators. Returns the integer
// rows and the product of the scale factors.
IntRows integer_rows(const Matrix& m, Rational& scale_product) {
  IntRows rows(m.rows(), std::vector<BigInt>(m.cols()));
  scale_product = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    scale_product *= l;
  }
  return rows;
}

// In-place Bareiss forward elimination on the leading `pivots` columns.
// Returns false on a zero pivot column (singular leading block); `swaps`
// counts row exchanges.
bool bareiss_forward(IntRows& rows, std::size_t pivots, int& swaps) {
  const std::size_t n = rows.size();
  const std::size_t width = n == 0 ? 0 : rows.front().size();
  BigInt prev = 1;
  swaps = 0;
  for (std::size_t k = 0; k < pivots; ++k) {
    std::size_t p = k;
    while (p < n && rows[p][k] == 0) ++p;
    if (p == n) return false;
    if (p != k) {
      std::swap(rows[p], rows[k]);
      ++swaps;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < width; ++j) {
        BigInt v = rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        rows[i][j] = std::move(v);
      }
      rows[i][k] = 0;
    }
    prev = rows[k][k];
  }
  return true;
}

// Reduced row echelon form over Q; returns pivot column indices.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    }
    const Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

void require_square(const Matrix& m, const char* op) {
  if (!m.is_square()) {
    throw PreconditionError(std::string(op) + " requires a square matrix, got " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()));
  }
}

}  // namespace

Rational determinant(const Matrix& m) {
  require_square(m, "determinant");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Rational scale;
  IntRows rows = integer_rows(m, scale);
  int swaps = 0;
  if (!bareiss_forward(rows, n, swaps)) return 0;
  Rational det(rows[n - 1][n - 1]);
  if (swaps % 2 != 0) det = -det;
  return det / scale;
}

std::size_t rank(const Matrix& m) {
  Matrix copy = m;
  return rref(copy).size();
}

Matrix inverse(const Matrix& m) {
  require_square(m, "inverse");
  const std::size_t n = m.rows();
  Rational unused;
  IntRows base = integer_rows(m, unused);
  // Row i was scaled by l_i, so A = D^-1 A_int and A^-1 = A_int^-1 D.
  std::vector<BigInt> row_scale(n);
  for (std::size_t i = 0; i < n; ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    row_scale[i] = l;
  }
  IntRows aug(n, std::vector<BigInt>(2 * n, BigInt(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = base[i][j];
    aug[i][n + i] = 1;
  }
  int swaps = 0;
  if (!bareiss_forward(aug, n, swaps)) throw SingularMatrixError(rank(m), n);

  Matrix x(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t ii = n; ii-- > 0;) {
      Rational acc(aug[ii][n + col]);
      for (std::size_t j = ii + 1; j < n; ++j) acc -= Rational(aug[ii][j]) * x(j, col);
      x(ii, col) = acc / Rational(aug[ii][ii]);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) x(i, j) *= Rational(row_scale[j]);
  return x;
}

SolveResult solve_exact(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw PreconditionError("solve_exact: row counts differ");
  const std::size_t n = a.cols();
  const std::size_t k = b.cols();
  Matrix aug(a.rows(), n + k);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < k; ++j) aug(i, n + j) = b(i, j);
  }
  const std::vector<std::size_t> pivots = rref(aug);
  SolveResult result;
  for (std::size_t p : pivots) {
    if (p >= n) {
      result.status = SolveStatus::inconsistent;
      return result;
    }
  }
  if (pivots.size() < n) {
    result.status = SolveStatus::underdetermined;
    return result;
  }
  result.status = SolveStatus::unique;
  result.solution = Matrix(n, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) result.solution(i, j) = aug(i, n + j);
  return result;
}

std::vector<Rational> charpoly(const Matrix& m) {
  require_square(m, "charpoly");
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  Matrix acc(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    acc = m * acc;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += c[n - k + 1];
    const Rational tr = (m * acc).trace();
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return c;
}

std::vector<Rational> poly_from_roots(std::span<const Rational> roots) {
  std::vector<Rational> p{Rational(1)};
  for (const Rational& r : roots) {
    std::vector<Rational> next(p.size() + 1, Rational(0));
    for (std::size_t k = 0; k < p.size(); ++k) {
      next[k + 1] += p[k];
      next[k] -= r * p[k];
    }
    p = std::move(next);
  }
  return p;
}

Matrix companion_matrix(std::span<const Rational> monic_ascending) {
  if (monic_ascending.empty() || monic_ascending.back() != 1) {
    throw PreconditionError("companion_matrix needs a monic polynomial");
  }
  const std::size_t n = monic_ascending.size() - 1;
  Matrix c(n, n);
  for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -monic_ascending[i];
  return c;
}

Matrix bernoulli_hankel_matrix(int which, int n) {
  if (which < 1 || which > 3) throw PreconditionError("hankel which must be 1, 2 or 3, got " + std::to_string(which));
  if (n < 1) throw PreconditionError("hankel size must be positive, got " + std::to_string(n));
  Matrix h(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int idx = 2 * i + 2 * j + 2 * which;
      BigInt fact;
      mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(idx));
      h(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = bernoulli_number(idx) / Rational(fact);
    }
  }
  return h;
}

HankelIdentity hankel_bernoulli(int which, int n) {
  HankelIdentity out;
  out.determinant = determinant(bernoulli_hankel_matrix(which, n));
  const Rational four(4);
  Rational closed;
  switch (which) {
    case 1: {
      closed = pow(four, -static_cast<long>(n) * n);
      for (int i = 1; i <= 2 * n - 1; ++i) closed *= pow(Rational(2 * i + 1), -(2 * n - i));
      break;
    }
    case 2: {
      closed = pow(four, -static_cast<long>(n) * n - n) * pow(Rational(9), -n);
      if (n % 2 != 0) closed = -closed;
      for (int i = 1; i <= 2 * n - 1; ++i) closed *= pow(Rational(2 * i + 3), -(2 * n - i));
      break;
    }
    default: {
      closed = pow(four, -static_cast<long>(n) * n - 2 * n) * Rational((n + 1) * (2 * n + 3));
      for (int i = 1; i <= 2 * n + 1; ++i) closed *= pow(Rational(2 * i + 1), -(2 * n + 2 - i));
      break;
    }
  }
  out.closed_form = closed;
  return out;
}

}  // namespace periodhecke
