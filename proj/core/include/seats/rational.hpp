#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace seats {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Largest integer <= r. cpp_int division truncates toward zero, so negative
/// non-integers need the usual -1 adjustment.
inline BigInt floor_rat(const Rational& r) {
    BigInt q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

inline BigInt ceil_rat(const Rational& r) {
    BigInt q = numerator(r) / denominator(r);
    if (numerator(r) > 0 && q * denominator(r) != numerator(r)) ++q;
    return q;
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// Fractional part r - floor(r), in [0, 1).
inline Rational frac_part(const Rational& r) { return r - Rational(floor_rat(r)); }

inline long long to_ll(const BigInt& v) { return v.convert_to<long long>(); }

/// Parses "123", "-4.75", "6.02e3", or "7/9" into an exact rational.
/// Returns nullopt on malformed input.
std::optional<Rational> parse_rational(std::string_view text);

/// Decimal rendering with the given number of fractional digits (round half away
/// from zero, matching how the reference tables round).
std::string format_fixed(double value, int digits);

/// "n/d" for non-integers, plain integer otherwise.
std::string to_string(const Rational& r);

} // namespace seats
