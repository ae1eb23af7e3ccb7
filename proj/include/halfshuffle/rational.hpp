#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace halfshuffle {

/// Exact coefficient type used throughout the library.
using Rational = mpq_class;

/// Parses "p/q" or an integer. Throws std::invalid_argument on malformed text
/// or a zero denominator. The result is canonicalized.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

} // namespace halfshuffle
