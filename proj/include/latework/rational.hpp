#pragma once

// Exact rational arithmetic used for eps, c, LP values and ratio checks.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace latework {

using Rational = mpq_class;
using Time = std::int64_t;

/// Parses "p/q", "p" or a plain decimal such as "0.25". Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "num/den" rendering; integers are rendered without a denominator.
std::string to_string(const Rational& q);

/// Locale-independent fixed-point rendering with `digits` fractional digits.
std::string to_decimal(const Rational& q, int digits = 6);

Rational from_time(Time t);

Time floor_to_time(const Rational& q);
Time ceil_to_time(const Rational& q);

}  // namespace latework
