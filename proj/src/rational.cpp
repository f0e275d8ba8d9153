#include "periodhecke/rational.hpp"

#include "periodhecke/errors.hpp"

namespace periodhecke {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string to_string(const BigInt& value) { return value.get_str(10); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InvalidArgumentError("empty rational literal");
  if (s.front() == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) throw InvalidArgumentError("malformed rational literal '" + std::string(text) + "'");
  if (r.get_den() == 0) throw InvalidArgumentError("rational literal with zero denominator");
  r.canonicalize();
  return r;
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent >= 0) {
    Rational out(pow(BigInt(base.get_num()), static_cast<unsigned long>(exponent)),
                 pow(BigInt(base.get_den()), static_cast<unsigned long>(exponent)));
    out.canonicalize();
    return out;
  }
  if (base == 0) throw PreconditionError("zero raised to a negative power");
  const auto e = static_cast<unsigned long>(-exponent);
  Rational out(pow(BigInt(base.get_den()), e), pow(BigInt(base.get_num()), e));
  out.canonicalize();
  return out;
}

}  // namespace periodhecke
