#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dioph {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws ParseError.
Rational parse_rational(std::string_view text);

/// "p/q" (or "p" when q = 1).
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// "p/q (d.ddddddddddd)" with 12 significant digits.
std::string format_exact(const Rational& value);

/// Decimal rendering with 12 significant digits.
std::string format_decimal(double value);

Rational make_rational(std::int64_t num, std::int64_t den = 1);

Integer floor_of(const Rational& value);
Integer ceil_of(const Rational& value);

Integer binomial(unsigned long top, unsigned long bottom);

/// Exponent of the prime p in a nonzero integer.
unsigned long p_adic_order(const Integer& value, const Integer& prime);

/// Exponent of p in a nonzero rational (numerator minus denominator order).
long p_adic_order(const Rational& value, const Integer& prime);

/// Distinct prime factors by trial division, ascending. |value| must be > 0.
std::vector<Integer> prime_factors(Integer value);

bool is_prime(const Integer& value);

}  // namespace dioph
