#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace birkhoff {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p" or "p/q". Throws std::invalid_argument on malformed text, a zero
/// denominator, or a fraction that is not in lowest terms with q > 0.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q" (always lowest terms).
std::string to_string(const Rational& value);

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace birkhoff
