#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace kummer {

/// Exact rational number, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "p/q", "p" or "-p/q" (surrounding whitespace allowed). Throws
/// std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline int sign(const Rational& r) { return sgn(r); }

}  // namespace kummer
