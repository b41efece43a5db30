#pragma once

#include <gmpxx.h>

#include <string>

namespace laceq {

/// Exact integer scalar used for series coefficients and linear algebra.
using Integer = mpz_class;

inline std::string to_decimal(const Integer& v) { return v.get_str(); }

/// Parses a base-10 integer; throws std::invalid_argument on malformed input.
inline Integer integer_from_decimal(const std::string& text) { return Integer(text, 10); }

/// gmpxx has no long long overloads; route through long (same width here).
inline Integer to_integer(long long v) {
    static_assert(sizeof(long) == sizeof(long long));
    return Integer(static_cast<long>(v));
}

}  // namespace laceq
