#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace arrowknot {

/// Exact rational number, always kept in lowest terms with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Formats as `p/q` (the denominator is always written, `1/1` for one).
std::string to_fraction_string(const Rational& q);

/// Parses `p/q` or a bare integer `p`. Throws std::invalid_argument on bad input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace arrowknot
