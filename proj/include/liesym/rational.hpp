#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace liesym {

/// Exact rational scalar. Values are kept canonical (reduced, positive
/// denominator, zero is 0/1).
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// Parses "p" or "p/q" with optional sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& q);

}  // namespace liesym
