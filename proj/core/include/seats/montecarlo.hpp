#pragma once

#include "seats/method.hpp"

#include <cstdint>
#include <random>
#include <string_view>

namespace seats {

/// Master seed used when the caller does not supply one (CLI flag or the
/// SEATS_SEED environment variable override it).
inline constexpr std::uint64_t kDefaultSeed = 42;

struct SamplerSpec {
    enum class Kind { WedgeUniform, ExpIID, Dirichlet111 };

    Kind kind = Kind::WedgeUniform;
    double h = 1e6;      // wedge upper bound, mirrors the reference protocol
    double lambda = 1.0; // exponential rate
    std::uint64_t seed = kDefaultSeed;

    static SamplerSpec wedge(double h = 1e6, std::uint64_t seed = kDefaultSeed) {
        return {Kind::WedgeUniform, h, 1.0, seed};
    }
    static SamplerSpec exp_iid(double lambda = 1.0, std::uint64_t seed = kDefaultSeed) {
        return {Kind::ExpIID, 0, lambda, seed};
    }
    static SamplerSpec dirichlet111(std::uint64_t seed = kDefaultSeed) {
        return {Kind::Dirichlet111, 0, 1.0, seed};
    }
};

std::string_view sampler_name(const SamplerSpec& s);

struct Triple {
    double p1, p2, p3; // strictly ascending, positive
};

/// Deterministic population sampler. The stream is a pure function of the
/// spec and seed: mt19937_64 with 53-bit uniform doubles and inverse-CDF
/// exponentials, so replays are bit-identical. Exact duplicates (probability
/// zero) are silently redrawn.
class Sampler {
public:
    explicit Sampler(const SamplerSpec& spec);
    Sampler(const SamplerSpec& spec, std::uint64_t seed_override);

    Triple next();
    std::uint64_t duplicates_rejected() const { return duplicates_; }

private:
    double uniform01();
    double exponential(double lambda);

    SamplerSpec spec_;
    std::mt19937_64 engine_;
    std::uint64_t duplicates_ = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Seed of chunk c: master XOR splitmix64(c). Fixed so the parallel layout
/// never changes results.
inline std::uint64_t chunk_seed(std::uint64_t master, std::uint64_t chunk) {
    return master ^ splitmix64(chunk);
}

/// Samples per chunk; part of the sampling protocol, not a tuning knob.
inline constexpr long long kChunkSamples = 8192;

struct EstimateOptions {
    int threads = 0;     // 0 = hardware concurrency; result is thread-count invariant
    bool wilson = false; // Wilson score interval instead of the Wald interval
};

struct EstimateResult {
    Method method{};
    int seats = 0;
    double p_hat = 0;
    double ci_low = 0, ci_high = 0; // 95% level
    long long n = 0;
    long long hits = 0;
    long long rejected_ties = 0; // exact priority ties; sample redrawn
    long long escalations = 0;   // near-ties resolved in exact arithmetic
    std::uint64_t seed = 0;
};

/// Fraction of samples classified CausedByNonzero, with a 95% confidence
/// interval. Chunked deterministically: identical (spec, n) give bit-identical
/// results for any thread count. Throws InsufficientSamples for n < 1.
EstimateResult estimate_violation_prob(Method m, int M, const SamplerSpec& sampler,
                                       long long n, const EstimateOptions& opts = {});

/// One-sample Kolmogorov-Smirnov statistic of sampled tau values against
/// Uniform(-1/3, 1/3). Returns the unscaled statistic D_n; the usual test
/// compares D_n * sqrt(n) with the critical value (1.63 at the 1% level).
double tau_uniformity_ks(const SamplerSpec& sampler, long long n);

/// 1% critical value for D_n * sqrt(n).
inline constexpr double kKs1PercentCritical = 1.63;

} // namespace seats
