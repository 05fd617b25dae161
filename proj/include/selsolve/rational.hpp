#pragma once

#include <gmpxx.h>

#include <string>

namespace selsolve {

/// Exact arbitrary-precision rational. Always kept in canonical form by GMP.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_one(const Rational& r) { return r == 1; }

/// "num" or "num/den".
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses "num" or "num/den"; throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(const std::string& text);

}  // namespace selsolve
