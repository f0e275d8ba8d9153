#pragma once

// Exact number-theoretic primitives: Bernoulli numbers and the B^0
// polynomials, binomial coefficients, divisor sums, the Moebius function.

#include "periodhecke/polynomial.hpp"
#include "periodhecke/rational.hpp"

#include <vector>

namespace periodhecke {

/// B_k with the convention B_1 = -1/2, so that B_m(x) = sum_i binom(m,i) B_i x^(m-i).
/// Memoized; the cache is safe to use from several threads.
Rational bernoulli_number(int k);

/// bernoulli_number(k) for k >= 0 and 0 for k < 0.
Rational bernoulli_or_zero(int k);

/// The Bernoulli polynomial with its B_1 term removed:
///   B^0_k(x) = sum over even i in [0, k] of binom(k, i) B_i x^(k-i).
/// Degree exactly k, returned with bound k. Independent of the B_1 convention.
BoundedPolynomial bernoulli_poly0(int k);

/// binom(n, k); zero when k < 0 or k > n. Requires n >= 0.
BigInt binomial(long n, long k);

/// sum_{d | n} d^k. Requires n >= 1 and k >= 0.
BigInt sigma(int k, long n);

/// mu(n) by trial division. Requires n >= 1.
int moebius(long n);

/// Positive divisors of n in ascending order. Requires n >= 1.
std::vector<long> divisors(long n);

/// Distinct primes dividing n in ascending order. Requires n >= 1.
std::vector<long> prime_divisors(long n);

long gcd(long a, long b);

}  // namespace periodhecke
