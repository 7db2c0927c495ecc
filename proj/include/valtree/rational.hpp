#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace valtree {

using Integer = mpz_class;
using Rational = mpq_class;

/// A rational value or +∞ (std::nullopt).
using RationalInf = std::optional<Rational>;

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const RationalInf& q);

/// Accepts "p", "-p", "p/q"; a zero denominator throws ParseError.
Rational parse_rational(std::string_view text);

Rational make_rational(long num, long den = 1);

inline int sign(const Rational& q) { return sgn(q); }

/// Three-way comparison where nullopt is +∞.
std::strong_ordering compare(const RationalInf& a, const RationalInf& b);

RationalInf add(const RationalInf& a, const RationalInf& b);

/// Largest integer ≤ q.
Integer floor(const Rational& q);

}  // namespace valtree
