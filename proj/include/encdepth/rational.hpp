#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace encdepth {

/// Exact rational scalar. GMP keeps the canonical form (positive denominator,
/// numerator and denominator coprime) across all arithmetic; nothing is ever
/// rounded.
using Rational = mpq_class;

/// Orientation-style sign: -1, 0 or +1.
using Sign = int;

inline Sign sign_of(const Rational& x) { return static_cast<Sign>(sgn(x)); }

/// Parses an exact coordinate literal: integers ("42", "-7"), decimals
/// ("0.25", "-3.", ".5" — converted exactly, e.g. 0.25 -> 1/4) and fractions
/// ("3/4", "-9/15" — reduced). Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

/// "p/q" when the denominator is not 1, a plain integer otherwise.
/// parse_rational round-trips the result.
std::string to_string(const Rational& x);

}  // namespace encdepth
