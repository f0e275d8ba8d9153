#pragma once

// Exact integers and rationals. Every numeric quantity in the library is one
// of these two types; nothing is ever rounded.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace periodhecke {

using BigInt = mpz_class;
/// Always canonical: positive denominator, gcd(|num|, den) = 1.
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws PreconditionError if den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Reduced "p/q" form; integers print without a denominator ("-208").
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

/// Accepts "p", "-p", "p/q" (any sign placement GMP accepts). Result is reduced.
Rational parse_rational(std::string_view text);

/// base^exponent for any integer exponent; base must be nonzero when exponent < 0.
Rational pow(const Rational& base, long exponent);
BigInt pow(const BigInt& base, unsigned long exponent);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace periodhecke
