#ifndef HKFORGE_NUMERIC_HPP
#define HKFORGE_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "hkforge/errors.hpp"

namespace hkforge {

/// Arbitrary-precision integer used for lattice-point counts.
using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational used for volumes, limits and tolerances.
using Rat = boost::multiprecision::cpp_rational;

/// a + b with overflow detection.
std::int64_t checked_add(std::int64_t a, std::int64_t b);

/// a * b with overflow detection.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// p^e with overflow detection (p >= 1, e >= 0).
std::int64_t checked_pow(std::int64_t p, int e);

bool is_prime(std::int64_t n);

/// Parses "3/2", "-7", "0". Throws ParseError on anything else.
Rat parse_rational(const std::string& s);

/// "n/d" with d > 0 in lowest terms, or "n" when d = 1.
std::string rational_to_string(const Rat& r);

/// Decimal rendering of an exact rational with `sig` significant digits,
/// round-half-up, pure integer arithmetic (no double rounding anywhere).
/// Uses fixed notation for moderate magnitudes, scientific otherwise.
std::string rational_to_decimal(const Rat& r, int sig = 12);

Rat rat_abs(const Rat& r);

} // namespace hkforge

#endif
