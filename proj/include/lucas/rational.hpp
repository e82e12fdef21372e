#pragma once

/**
 * @file rational.hpp
 * @brief Exact integer and rational scalars (GMP) plus the few helpers the
 * rest of the library needs: parsing, exact powers, dyadic/decimal rounding
 * and decimal rendering.
 */

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace lucas {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "p/q", "-1.25", "1e-30", "2.5E+3" into an exact rational.
/// Throws InvalidArgument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when q = 1).
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

bool is_integer(const Rational& x);
int sign(const Rational& x);
Rational abs(const Rational& x);

/// Exact x^n for any integer n (x != 0 when n < 0).
Rational pow(const Rational& x, std::int64_t n);
Integer pow(const Integer& x, std::uint64_t n);

Integer floor(const Rational& x);
Integer ceil(const Rational& x);

/// 2^e and 10^e as exact rationals (e may be negative).
Rational pow2(std::int64_t e);
Rational pow10(std::int64_t e);

/// Outward rounding onto the grid 2^-bits: result <= x (down) or >= x (up).
Rational round_down_dyadic(const Rational& x, std::int64_t bits);
Rational round_up_dyadic(const Rational& x, std::int64_t bits);

/// Outward rounding onto the grid 10^-digits.
Rational round_down_decimal(const Rational& x, std::int64_t digits);
Rational round_up_decimal(const Rational& x, std::int64_t digits);

/// Decimal expansion of x truncated toward zero after `digits` fractional digits.
std::string to_decimal(const Rational& x, std::int64_t digits);

/// Largest D >= 0 with 10^-D >= eps, i.e. floor(-log10 eps) clamped at 0.
std::int64_t decimal_digits_for(const Rational& eps);

/// Smallest b >= 0 with 2^-b <= x (x > 0).
std::int64_t bits_below(const Rational& x);

}  // namespace lucas
