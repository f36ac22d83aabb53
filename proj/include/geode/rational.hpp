#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace geode {

// Exact arbitrary-precision arithmetic, backed by GMP.
using Integer = mpz_class;
using Rational = mpq_class;

/// Renders a rational as "p" (denominator 1) or "p/q", always in lowest terms.
std::string rational_to_string(const Rational& value);

/// Parses "p" or "p/q" in base 10. Throws parse_error on malformed input or q = 0.
Rational rational_from_string(const std::string& text);

bool is_integer(const Rational& value);

bool is_nonnegative(const Rational& value);

/// Exact square root with nonnegative result, or nullopt if the value is not
/// the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& value);

Rational rational_pow(const Rational& base, unsigned exponent);

}  // namespace geode
