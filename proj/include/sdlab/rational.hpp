#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sdlab {

/// Exact rational; GMP keeps it in lowest terms with a positive denominator.
using Rational = mpq_class;
using BigInt = mpz_class;

Rational make_rational(long num, long den = 1);

/// floor(num / den) for den > 0, rounding toward minus infinity.
long floor_div(long num, long den);
/// num mod den in [0, den) for den > 0.
long mod(long num, long den);

BigInt floor(const Rational& x);

/// Always "num/den", including integers ("3/1").
std::string to_fraction_string(const Rational& x);
/// "num/den", or "num" for integers.
std::string to_display_string(const Rational& x);
/// Accepts "n", "n/d" with d != 0; the result is canonicalized.
Rational parse_rational(std::string_view text);

double to_double(const Rational& x);

} // namespace sdlab
