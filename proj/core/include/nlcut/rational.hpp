#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace nlcut {

/// Exact rational number in lowest terms with a positive denominator.
using Rational = mpq_class;

/// Parses an integer ("3"), a decimal ("-0.25") or a fraction ("p/q").
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view token);

/// Canonical text form: "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Exact vector indexed by vertex id.
using RVector = std::vector<Rational>;

inline double to_double(const Rational& q) { return q.get_d(); }

inline Rational abs_value(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline int sign_of(const Rational& q) { return sgn(q); }

}  // namespace nlcut
