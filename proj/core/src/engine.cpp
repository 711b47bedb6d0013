#include "seats/engine.hpp"

#include "seats/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace seats {

namespace {

// The engine compares priorities p/delta(r) exactly. Doing that on
// cpp_rational would re-normalize at every step, so populations are rescaled
// once to integers (divisor methods are scale invariant) and comparisons
// reduce to integer cross-multiplication.
std::vector<BigInt> scale_to_integers(const std::vector<Rational>& pops) {
    BigInt l(1);
    for (const auto& r : pops) l = lcm(l, denominator(r));
    std::vector<BigInt> out;
    out.reserve(pops.size());
    for (const auto& r : pops) out.push_back(numerator(r) * (l / denominator(r)));
    return out;
}

// delta(s) as a small rational num/den; num == 0 encodes infinite priority.
struct DeltaQ {
    long long num, den;
};

DeltaQ delta_q(Method m, int s) {
    switch (m) {
    case Method::Adams: return {s, 1};
    case Method::Jefferson: return {s + 1, 1};
    case Method::Webster: return {2 * s + 1, 2};
    case Method::Dean: return {2ll * s * (s + 1), 2ll * s + 1};
    case Method::ModifiedJefferson: return {s == 0 ? 0 : s + 1, 1};
    case Method::ModifiedWebster: return {s == 0 ? 0 : 2 * s + 1, 2};
    case Method::HuntingtonHill: return {s, 1}; // handled separately
    }
    return {0, 1};
}

// sign of p1/delta(r1) - p2/delta(r2)
int cmp_priority_int(Method m, const BigInt& p1, int r1, const BigInt& p2, int r2) {
    if (m == Method::HuntingtonHill) {
        if (r1 == 0 || r2 == 0) {
            if (r1 == 0 && r2 == 0) return 0;
            return r1 == 0 ? 1 : -1;
        }
        BigInt lhs = p1 * p1 * (BigInt(r2) * (r2 + 1));
        BigInt rhs = p2 * p2 * (BigInt(r1) * (r1 + 1));
        return lhs.compare(rhs);
    }
    DeltaQ d1 = delta_q(m, r1), d2 = delta_q(m, r2);
    if (d1.num == 0 || d2.num == 0) {
        if (d1.num == 0 && d2.num == 0) return 0;
        return d1.num == 0 ? 1 : -1;
    }
    BigInt lhs = p1 * d1.den * d2.num;
    BigInt rhs = p2 * d2.den * d1.num;
    return lhs.compare(rhs);
}

} // namespace

Apportionment apportion(Method m, const std::vector<Rational>& pops, int M) {
    const int n = static_cast<int>(pops.size());
    if (n < 1) throw std::invalid_argument("empty population list");

    Apportionment result;
    result.method = m;
    result.seats = M;
    result.allocation.assign(n, 0);

    int remaining = M;
    if (guarantees_nonzero(m)) {
        if (M < n) throw std::invalid_argument("seat count below state count");
        for (int i = 0; i < n; ++i) {
            result.allocation[i] = 1;
            result.order.push_back({i, 1});
        }
        remaining -= n;
    }

    const std::vector<BigInt> scaled = scale_to_integers(pops);
    for (int round = 0; round < remaining; ++round) {
        int best = 0;
        for (int i = 1; i < n; ++i) {
            int c = cmp_priority_int(m, scaled[i], result.allocation[i],
                                     scaled[best], result.allocation[best]);
            if (c == 0) throw TieDetected(best, i, M - remaining + round + 1);
            if (c > 0) best = i;
        }
        result.allocation[best] += 1;
        result.order.push_back({best, result.allocation[best]});
    }
    return result;
}

Apportionment apportion(Method m, const PopulationInstance& inst) {
    return apportion(m, inst.populations, inst.seats);
}

Apportionment modified_apportion(Method m, const PopulationInstance& inst) {
    if (!guarantees_nonzero(m))
        throw UnsupportedMethod("modified method requires a nonzero-allocation method");

    const auto order = inst.ascending_order();
    const int smallest = order.front();
    const int n = inst.size();

    std::vector<Rational> rest;
    std::vector<int> rest_index;
    rest.reserve(n - 1);
    for (int i = 0; i < n; ++i) {
        if (i == smallest) continue;
        rest.push_back(inst.populations[i]);
        rest_index.push_back(i);
    }

    Apportionment sub = apportion(m, rest, inst.seats - 1);

    Apportionment result;
    result.method = m;
    result.seats = inst.seats;
    result.allocation.assign(n, 0);
    result.allocation[smallest] = 1;
    result.order.push_back({smallest, 1});
    for (size_t j = 0; j < rest.size(); ++j)
        result.allocation[rest_index[j]] = sub.allocation[j];
    for (const auto& a : sub.order)
        result.order.push_back({rest_index[a.state], a.seat_index});
    return result;
}

} // namespace seats
