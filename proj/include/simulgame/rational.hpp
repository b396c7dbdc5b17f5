#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace simulgame {

/// Exact rational number. Always kept in lowest terms.
using Rational = mpq_class;

/// num/den in lowest terms. The two-argument mpq_class constructor does not reduce.
inline Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// "p/q" in lowest terms; integers print without a denominator ("0", "-3").
std::string to_string(const Rational& q);

/// Parses "p" or "p/q" (optional leading '-'). Throws BadLiteral on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Decimal rendering rounded half-even to `digits` places.
std::string to_decimal(const Rational& q, int digits);

/// Nearest double, for tolerance checks in tests and reports only.
double to_double(const Rational& q);

}  // namespace simulgame
