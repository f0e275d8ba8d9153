#include "periodhecke/exactnum.hpp"

#include "periodhecke/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>

namespace periodhecke {

namespace {

class BernoulliCache {
 public:
  Rational get(int k) {
    {
      std::shared_lock lock(mutex_);
      if (static_cast<std::size_t>(k) < values_.size()) return values_[static_cast<std::size_t>(k)];
    }
    std::unique_lock lock(mutex_);
    extend_to(k);
    return values_[static_cast<std::size_t>(k)];
  }

 private:
  // B_m = -1/(m+1) * sum_{i<m} binom(m+1, i) B_i.
  void extend_to(int k) {
    while (static_cast<int>(values_.size()) <= k) {
      const int m = static_cast<int>(values_.size());
      if (m == 0) {
        values_.emplace_back(1);
        continue;
      }
      if (m >= 3 && m % 2 == 1) {
        values_.emplace_back(0);
        continue;
      }
      Rational acc = 0;
      for (int i = 0; i < m; ++i) {
        if (values_[static_cast<std::size_t>(i)] == 0) continue;
        acc += Rational(binomial(m + 1, i)) * values_[static_cast<std::size_t>(i)];
      }
      Rational bm = -acc / (m + 1);
      values_.push_back(bm);
    }
  }

  std::shared_mutex mutex_;
  std::vector<Rational> values_;
};

BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

void require_positive(long n, const char* what) {
  if (n < 1) throw PreconditionError(std::string(what) + " requires a positive argument, got " + std::to_string(n));
}

}  // namespace

Rational bernoulli_number(int k) {
  if (k < 0) throw PreconditionError("bernoulli_number requires k >= 0, got " + std::to_string(k));
  return bernoulli_cache().get(k);
}

Rational bernoulli_or_zero(int k) { return k < 0 ? Rational(0) : bernoulli_number(k); }

BoundedPolynomial bernoulli_poly0(int k) {
  if (k < 0) throw PreconditionError("bernoulli_poly0 requires k >= 0, got " + std::to_string(k));
  BoundedPolynomial p(k);
  for (int i = 0; i <= k; i += 2) p[k - i] = Rational(binomial(k, i)) * bernoulli_number(i);
  return p;
}

BigInt binomial(long n, long k) {
  if (n < 0) throw PreconditionError("binomial requires n >= 0, got " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt sigma(int k, long n) {
  require_positive(n, "sigma");
  if (k < 0) throw PreconditionError("sigma requires k >= 0, got " + std::to_string(k));
  BigInt acc = 0;
  for (long d : divisors(n)) acc += pow(BigInt(d), static_cast<unsigned long>(k));
  return acc;
}

int moebius(long n) {
  require_positive(n, "moebius");
  int result = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

std::vector<long> divisors(long n) {
  require_positive(n, "divisors");
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<long> prime_divisors(long n) {
  require_positive(n, "prime_divisors");
  std::vector<long> primes;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    primes.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

long gcd(long a, long b) { return std::gcd(a, b); }

}  // namespace periodhecke
