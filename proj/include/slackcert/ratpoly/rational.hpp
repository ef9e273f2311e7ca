#ifndef SLACKCERT_RATPOLY_RATIONAL_HPP
#define SLACKCERT_RATPOLY_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace slackcert {

// GMP keeps mpq_class canonical (lowest terms, positive denominator, 0/1).
using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "p/q", or a plain decimal such as "-0.0311" into an exact rational.
Rational parse_rational(std::string_view text);

/// Canonical "num/den" text; integers still carry "/1".
std::string to_text(const Rational& q);

Integer floor_div(const Rational& q);
Integer ceil_div(const Rational& q);

/// Number of significant bits in |q|'s integer part, roughly log2|q| (may be negative).
long log2_floor(const Rational& q);

/// Largest multiple of 2^-bits (relative to q's magnitude) that is <= q.
Rational round_down(const Rational& q, long bits);
/// Smallest such multiple >= q.
Rational round_up(const Rational& q, long bits);

/// Decimal expansion truncated (toward zero) after `digits` digits.
std::string to_decimal(const Rational& q, int digits);

Rational pow_int(const Rational& base, unsigned exponent);

/// 2^e as an exact rational for any sign of e.
Rational pow2(long e);

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace slackcert

#endif
