#include "seats/method.hpp"

#include "seats/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace seats {

bool guarantees_nonzero(Method m) {
    switch (m) {
    case Method::Adams:
    case Method::HuntingtonHill:
    case Method::Dean:
    case Method::ModifiedJefferson:
    case Method::ModifiedWebster:
        return true;
    case Method::Jefferson:
    case Method::Webster:
        return false;
    }
    return false;
}

bool supported_for_probability(Method m) { return guarantees_nonzero(m); }

std::string_view method_name(Method m) {
    switch (m) {
    case Method::Adams: return "adams";
    case Method::Jefferson: return "jefferson";
    case Method::Webster: return "webster";
    case Method::HuntingtonHill: return "hh";
    case Method::Dean: return "dean";
    case Method::ModifiedJefferson: return "mod-jefferson";
    case Method::ModifiedWebster: return "mod-webster";
    }
    return "?";
}

std::string_view method_display_name(Method m) {
    switch (m) {
    case Method::Adams: return "Adams";
    case Method::Jefferson: return "Jefferson";
    case Method::Webster: return "Webster";
    case Method::HuntingtonHill: return "Huntington-Hill";
    case Method::Dean: return "Dean";
    case Method::ModifiedJefferson: return "Modified Jefferson";
    case Method::ModifiedWebster: return "Modified Webster";
    }
    return "?";
}

std::optional<Method> method_from_name(std::string_view name) {
    std::string s(name);
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    std::replace(s.begin(), s.end(), '_', '-');
    if (s == "adams") return Method::Adams;
    if (s == "jefferson") return Method::Jefferson;
    if (s == "webster") return Method::Webster;
    if (s == "hh" || s == "huntington-hill" || s == "hill") return Method::HuntingtonHill;
    if (s == "dean") return Method::Dean;
    if (s == "mod-jefferson" || s == "modified-jefferson") return Method::ModifiedJefferson;
    if (s == "mod-webster" || s == "modified-webster") return Method::ModifiedWebster;
    return std::nullopt;
}

double divisor_value(Method m, long long s) {
    switch (m) {
    case Method::Adams:
        return static_cast<double>(s);
    case Method::Jefferson:
        return static_cast<double>(s + 1);
    case Method::Webster:
        return static_cast<double>(s) + 0.5;
    case Method::HuntingtonHill:
        return std::sqrt(static_cast<double>(s) * static_cast<double>(s + 1));
    case Method::Dean:
        if (s == 0) return 0.0;
        return 2.0 * static_cast<double>(s) * static_cast<double>(s + 1) /
               static_cast<double>(2 * s + 1);
    case Method::ModifiedJefferson:
        return s == 0 ? 0.0 : static_cast<double>(s + 1);
    case Method::ModifiedWebster:
        return s == 0 ? 0.0 : static_cast<double>(s) + 0.5;
    }
    return 0.0;
}

bool divisor_is_rational(Method m) { return m != Method::HuntingtonHill; }

Rational divisor_rational(Method m, long long s) {
    switch (m) {
    case Method::Adams:
        return Rational(s);
    case Method::Jefferson:
        return Rational(s + 1);
    case Method::Webster:
        return Rational(2 * s + 1, 2);
    case Method::Dean:
        if (s == 0) return Rational(0);
        return Rational(BigInt(2) * s * (s + 1), BigInt(2 * s + 1));
    case Method::ModifiedJefferson:
        return s == 0 ? Rational(0) : Rational(s + 1);
    case Method::ModifiedWebster:
        return s == 0 ? Rational(0) : Rational(2 * s + 1, 2);
    case Method::HuntingtonHill:
        throw UnsupportedMethod("Huntington-Hill divisor sqrt(s(s+1)) is irrational");
    }
    return Rational(0);
}

namespace {

int sign_of(const Rational& v) {
    if (numerator(v) > 0) return 1;
    if (numerator(v) < 0) return -1;
    return 0;
}

} // namespace

int compare_scaled(Method m, const Rational& a, long long sa,
                   const Rational& b, long long sb) {
    if (m == Method::HuntingtonHill) {
        // a*sqrt(sa(sa+1)) vs b*sqrt(sb(sb+1)); both sides >= 0, compare squares.
        Rational lhs = a * a * Rational(BigInt(sa) * (sa + 1));
        Rational rhs = b * b * Rational(BigInt(sb) * (sb + 1));
        return sign_of(lhs - rhs);
    }
    Rational lhs = a * divisor_rational(m, sa);
    Rational rhs = b * divisor_rational(m, sb);
    return sign_of(lhs - rhs);
}

} // namespace seats
