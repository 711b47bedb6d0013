#include "seats/fast_engine.hpp"

#include <algorithm>
#include <cmath>

namespace seats::fast {

namespace {

bool near(double a, double b) {
    return std::abs(a - b) <= kTieTolerance * std::max(std::abs(a), std::abs(b));
}

// floor with an escalation flag when q sits within tolerance of an integer
long long safe_floor(double q, bool* suspect) {
    double r = std::nearbyint(q);
    if (std::abs(q - r) <= kTieTolerance * std::max(1.0, q)) *suspect = true;
    return static_cast<long long>(std::floor(q));
}

struct QuotaEnvelope {
    long long floor_[8];
    long long ceil_[8];
};

void quota_envelope(const double* pops, int n, int M, QuotaEnvelope* env,
                    bool* suspect) {
    double total = 0;
    for (int i = 0; i < n; ++i) total += pops[i];
    for (int i = 0; i < n; ++i) {
        double q = static_cast<double>(M) * pops[i] / total;
        long long f = safe_floor(q, suspect);
        env->floor_[i] = f;
        env->ceil_[i] = (q == static_cast<double>(f)) ? f : f + 1;
    }
}

// -1 lower, +1 upper, 0 none
int violation_sign(const int* alloc, const QuotaEnvelope& env, int n) {
    for (int i = 0; i < n; ++i) {
        if (alloc[i] < env.floor_[i]) return -1;
        if (alloc[i] > env.ceil_[i]) return +1;
    }
    return 0;
}

} // namespace

bool apportion(Method m, const double* pops, int n, int M, int* allocation,
               bool* suspect) {
    const bool guaranteed = guarantees_nonzero(m);
    int assigned = 0;
    for (int i = 0; i < n; ++i) allocation[i] = guaranteed ? 1 : 0;
    if (guaranteed) assigned = n;

    for (; assigned < M; ++assigned) {
        int best = 0;
        double best_p = pops[0] / divisor_value(m, allocation[0]);
        for (int i = 1; i < n; ++i) {
            double p = pops[i] / divisor_value(m, allocation[i]);
            if (near(p, best_p)) {
                *suspect = true;
                return false;
            }
            if (p > best_p) {
                best = i;
                best_p = p;
            }
        }
        allocation[best] += 1;
    }
    return true;
}

Outcome classify_caused(Method m, const double* pops, int n, int M) {
    Outcome out;
    if (n > 8 || M < n) return out;

    int alloc[8];
    if (!apportion(m, pops, n, M, alloc, &out.suspect)) return out;

    QuotaEnvelope env;
    quota_envelope(pops, n, M, &env, &out.suspect);
    if (out.suspect) return out;
    // only lower violations can be caused by the guarantee
    if (violation_sign(alloc, env, n) != -1) return out;

    if (!guarantees_nonzero(m)) return out; // violation, but intrinsic

    // modified method: smallest state pinned to one seat, M-1 seats for the rest
    int sub[8];
    if (!apportion(m, pops + 1, n - 1, M - 1, sub, &out.suspect)) return out;
    if (alloc[0] != 1) return out; // modified method cannot match
    for (int i = 1; i < n; ++i)
        if (sub[i - 1] != alloc[i]) return out;

    // condition (3): drop the smallest state, same M
    int rest[8];
    if (!apportion(m, pops + 1, n - 1, M, rest, &out.suspect)) return out;
    QuotaEnvelope env2;
    quota_envelope(pops + 1, n - 1, M, &env2, &out.suspect);
    if (out.suspect) return out;
    out.caused = violation_sign(rest, env2, n - 1) == 0;
    return out;
}

} // namespace seats::fast
