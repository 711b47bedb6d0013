#include "seats/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace seats {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

BigInt pow10(long long e) {
    BigInt r(1);
    for (long long i = 0; i < e; ++i) r *= 10;
    return r;
}

// decimal digits to cpp_int; strips leading zeros, which cpp_int would read
// as an octal prefix
BigInt parse_digits(std::string_view s) {
    if (auto first = s.find_first_not_of('0'); first != std::string_view::npos)
        s.remove_prefix(first);
    else
        return BigInt(0);
    return BigInt{std::string(s)};
}

} // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;

    bool negative = false;
    if (text.front() == '+' || text.front() == '-') {
        negative = text.front() == '-';
        text.remove_prefix(1);
        if (text.empty()) return std::nullopt;
    }

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) return std::nullopt;
        BigInt n = parse_digits(num);
        BigInt d = parse_digits(den);
        if (d == 0) return std::nullopt;
        Rational r(n, d);
        return negative ? -r : r;
    }

    long long exp10 = 0;
    if (auto epos = text.find_first_of("eE"); epos != std::string_view::npos) {
        auto etail = text.substr(epos + 1);
        bool eneg = false;
        if (!etail.empty() && (etail.front() == '+' || etail.front() == '-')) {
            eneg = etail.front() == '-';
            etail.remove_prefix(1);
        }
        if (!all_digits(etail) || etail.size() > 6) return std::nullopt;
        exp10 = std::strtoll(std::string(etail).c_str(), nullptr, 10);
        if (eneg) exp10 = -exp10;
        text = text.substr(0, epos);
    }

    std::string_view int_part = text;
    std::string_view frac_part;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        int_part = text.substr(0, dot);
        frac_part = text.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) return std::nullopt;
    if (!int_part.empty() && !all_digits(int_part)) return std::nullopt;
    if (!frac_part.empty() && !all_digits(frac_part)) return std::nullopt;

    std::string digits;
    digits.append(int_part);
    digits.append(frac_part);
    BigInt mantissa = parse_digits(digits);
    long long scale = static_cast<long long>(frac_part.size()) - exp10;

    Rational r = scale >= 0 ? Rational(mantissa, pow10(scale))
                            : Rational(mantissa * pow10(-scale));
    return negative ? -r : r;
}

std::string format_fixed(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, value);
    return buf;
}

std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

} // namespace seats
