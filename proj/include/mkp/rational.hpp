#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace mkp {

/// Exact rational number (GMP).
using Rational = mpq_class;

/// Parses "3", "-3/10", "0.25" or "1e-1" style literals into an exact value.
/// Throws ArgumentError on malformed text.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when integral).
std::string to_string(const Rational& q);

/// Decimal rendering rounded half away from zero to `digits` places.
std::string to_decimal(const Rational& q, int digits = 6);

bool is_integral(const Rational& q);

/// ceil(q) as a 64-bit integer; throws OverflowError when out of range.
std::int64_t ceil_to_int64(const Rational& q);

inline Rational from_int64(std::int64_t v) {
  if constexpr (sizeof(long) == sizeof(std::int64_t)) {
    return Rational(static_cast<long>(v));
  } else {
    return Rational(mpz_class(std::to_string(v)));
  }
}

}  // namespace mkp
