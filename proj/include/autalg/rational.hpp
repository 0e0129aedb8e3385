#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace autalg {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }

/// "a" or "a/b".
std::string to_string(const Rational& q);

/// Parses "a" or "a/b" (optional leading sign). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Exact d-th root of q in Q, if one exists.
std::optional<Rational> exact_root(const Rational& q, unsigned d);

/// Exact d-th root of an integer, if one exists.
std::optional<Integer> exact_root(const Integer& n, unsigned d);

}  // namespace autalg
