#pragma once

#include "seats/rational.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace seats {

/// The five classical divisor methods plus the nonzero-allocation variants of
/// Jefferson and Webster (divisor function forced to 0 at zero seats).
enum class Method {
    Adams,
    Jefferson,
    Webster,
    HuntingtonHill,
    Dean,
    ModifiedJefferson,
    ModifiedWebster,
};

inline constexpr Method kAllMethods[] = {
    Method::Adams,          Method::Jefferson,         Method::Webster,
    Method::HuntingtonHill, Method::Dean,              Method::ModifiedJefferson,
    Method::ModifiedWebster,
};

/// Methods whose divisor function vanishes at 0 seats, guaranteeing every
/// state at least one seat. These are the methods the probability formulas
/// cover.
inline constexpr Method kGuaranteeMethods[] = {
    Method::Adams, Method::HuntingtonHill, Method::Dean,
    Method::ModifiedJefferson, Method::ModifiedWebster,
};

bool guarantees_nonzero(Method m);

/// True for the five methods with delta(0) = 0.
bool supported_for_probability(Method m);

/// Kebab-case identifier used by the CLI and serialized reports.
std::string_view method_name(Method m);

/// Human-readable name ("Modified Jefferson", "Huntington-Hill", ...).
std::string_view method_display_name(Method m);

/// Accepts the kebab-case names plus a few common aliases
/// ("huntington-hill", "modified-webster"). Case-insensitive.
std::optional<Method> method_from_name(std::string_view name);

/// delta(s) as a double. Exact for every method except Huntington-Hill,
/// whose value is sqrt(s(s+1)).
double divisor_value(Method m, long long s);

/// True when delta(s) is rational (everything but Huntington-Hill).
bool divisor_is_rational(Method m);

/// Exact delta(s); throws UnsupportedMethod for Huntington-Hill.
Rational divisor_rational(Method m, long long s);

/// Sign of a*delta(sa) - b*delta(sb) for a, b >= 0, computed exactly.
/// Huntington-Hill is resolved by comparing squares, which is valid because
/// both products are nonnegative. This is the single comparison primitive
/// behind priority ordering, the criteria test, and the D(k) classifier.
int compare_scaled(Method m, const Rational& a, long long sa,
                   const Rational& b, long long sb);

/// Sign of p1/delta(r1) - p2/delta(r2) with delta(r) = 0 treated as infinite
/// priority. Equivalent to compare_scaled(m, p1, r2, p2, r1).
inline int compare_priority(Method m, const Rational& p1, long long r1,
                            const Rational& p2, long long r2) {
    return compare_scaled(m, p1, r2, p2, r1);
}

} // namespace seats
