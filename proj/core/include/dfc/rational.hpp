#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dfc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", an integer, or a decimal literal such as "-1.25" or "1e-104".
/// The conversion is exact. Throws InputError on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

/// Lowest-terms rendering: "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Round-to-nearest decimal rendering with `digits` significant digits.
/// Fixed notation for moderate exponents, scientific otherwise (printf %g style).
std::string to_decimal(const Rational& q, int digits);

Rational abs(const Rational& q);
Integer floor(const Rational& q);
Integer ceil(const Rational& q);
Rational pow(const Rational& base, unsigned long exponent);
Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

/// 10^e as an exact rational (e may be negative).
Rational pow10(long e);

/// Exact value of a finite double.
Rational from_double(double x);

/// Nearest double (may underflow/overflow for extreme magnitudes).
double to_double(const Rational& q);

/// Natural logarithm of |q| for q != 0, valid far outside the double range.
double log_abs(const Rational& q);

/// Floor of log2|q| for q != 0 (exact).
long floor_log2(const Rational& q);

/// Smallest dyadic number m/2^k >= q with at most `bits` significant bits (q >= 0).
Rational upper_dyadic(const Rational& q, long bits = 64);

/// Largest dyadic number <= q with at most `bits` significant bits (q >= 0).
Rational lower_dyadic(const Rational& q, long bits = 64);

/// Truncates q to a dyadic with `prec` significant bits; returns the truncation
/// together with an exact dyadic bound on |q - result|.
struct DyadicRounding {
    Rational value;
    Rational error;
};
DyadicRounding round_dyadic(const Rational& q, long prec);

/// Rational r with r >= sqrt(q) (q >= 0), relative accuracy about 2^-bits.
Rational sqrt_upper(const Rational& q, long bits = 64);

/// Rational r with 0 <= r <= sqrt(q) (q >= 0), relative accuracy about 2^-bits.
Rational sqrt_lower(const Rational& q, long bits = 64);

} // namespace dfc
