// Exact rational scalar used throughout the library.
//
// Every computation in this project is exact: values are arbitrary-precision
// rationals kept in lowest terms with a positive denominator, and no routine
// ever rounds. boost::multiprecision::cpp_rational already maintains the
// canonical form, so we expose it directly plus the strict string format
// "p" / "p/q" used by the file formats (decimal literals are rejected).

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace lefhopf {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numer(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denom(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denom(r) == 1; }

inline int sign_of(const Rational& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

/// Renders r as "p" when integral, else "p/q" (q > 0, lowest terms).
std::string rational_to_string(const Rational& r);

/// Strict parser for "p" or "p/q" with optional leading sign. Anything else
/// (decimals, whitespace, empty strings, zero denominators) yields nullopt.
std::optional<Rational> parse_rational(std::string_view text);

}  // namespace lefhopf
