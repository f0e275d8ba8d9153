#pragma once

// q-expansion side: eta quotients and Eisenstein series on Gamma_0(2), Hecke
// operators acting on coefficients, and Hecke matrices computed in a basis of
// cusp forms that never touches period polynomials.

#include "periodhecke/matrix.hpp"
#include "periodhecke/qseries.hpp"

#include <cstddef>
#include <vector>

namespace periodhecke {

struct EtaFactor {
  long scale = 1;    // delta in eta(delta z)
  long exponent = 0;
};

/// prod eta(delta z)^r through q^prec. Requires sum delta r divisible by 24
/// and nonnegative, and sum r even (so the weight is an integer).
QSeries eta_quotient(const std::vector<EtaFactor>& parts, long prec);

/// E_k = 1 - (2k / B_k) sum sigma_{k-1}(n) q^n; k even, k >= 2.
QSeries eisenstein_level1(int k, long prec);

enum class Cusp { infinity, zero };

/// Eisenstein series of weight k >= 4 on Gamma_0(2) normalized at the given cusp:
///   E^inf = (2^k E_k(2z) - E_k) / (2^k - 1),  E^0 = 2^k (E_k - E_k(2z)) / (2^k - 1).
QSeries eisenstein_gamma02(int k, Cusp cusp, long prec);

/// 2 E_2(2z) - E_2(z), the weight-2 form on Gamma_0(2).
QSeries weight2_form(long prec);

/// T_m on a level-2 form of weight f.weight(). The result is known through
/// q^{floor(prec / m)}.
QSeries hecke_on_qseries(const QSeries& f, long m);

/// As above, but insists on output precision `out_prec`; throws
/// PrecisionTooLow naming m * out_prec when the input is too short.
QSeries hecke_on_qseries(const QSeries& f, long m, long out_prec);

/// Delta_8 M2^a E_4^b with 2a + 4b = k - 8, ordered by increasing b.
/// Empty for k < 8.
std::vector<QSeries> cusp_basis_gamma02(int k, long prec);

/// max(k/2 + 10, m (k/4 + 2)): input precision for hecke_matrix_oracle.
long oracle_precision(int k, long m);

/// Matrix of T_m on S_k(Gamma_0(2)) in the cusp_basis_gamma02 basis, column
/// convention (T f_j = sum_i M_ij f_i). prec = 0 picks oracle_precision.
Matrix hecke_matrix_oracle(int k, long m, long prec = 0);

struct Theorem14Report {
  int k = 0;
  long dim = 0;
  std::size_t rank_first = 0;   // {E^0_{2j+2} E^inf_{k-2-2j}}
  std::size_t rank_second = 0;  // {E^0_{k-2-2j} E^inf_{2j+2}}
  bool cusp_first = false;      // every product has a_0 = 0 and lies in the cusp basis span
  bool cusp_second = false;
  bool passed() const {
    return cusp_first && cusp_second && rank_first == static_cast<std::size_t>(dim) &&
           rank_second == static_cast<std::size_t>(dim);
  }
};

/// Checks that both Eisenstein product families are bases of S_k(Gamma_0(2)).
/// prec = 0 picks k/2 + 10.
Theorem14Report theorem14_check(int k, long prec = 0);

}  // namespace periodhecke
