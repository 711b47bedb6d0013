#include "seats/montecarlo.hpp"

#include "seats/errors.hpp"
#include "seats/fast_engine.hpp"
#include "seats/instance.hpp"
#include "seats/tau.hpp"
#include "seats/violation.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>
#include <vector>

namespace seats {

std::string_view sampler_name(const SamplerSpec& s) {
    switch (s.kind) {
    case SamplerSpec::Kind::WedgeUniform: return "wedge";
    case SamplerSpec::Kind::ExpIID: return "exp-iid";
    case SamplerSpec::Kind::Dirichlet111: return "dirichlet111";
    }
    return "?";
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

Sampler::Sampler(const SamplerSpec& spec) : Sampler(spec, spec.seed) {}

Sampler::Sampler(const SamplerSpec& spec, std::uint64_t seed_override)
    : spec_(spec), engine_(seed_override) {
    if (spec_.kind == SamplerSpec::Kind::WedgeUniform && spec_.h <= 1)
        throw std::invalid_argument("wedge sampler needs h > 1");
    if (spec_.kind == SamplerSpec::Kind::ExpIID && spec_.lambda <= 0)
        throw std::invalid_argument("exponential sampler needs lambda > 0");
}

double Sampler::uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Sampler::exponential(double lambda) {
    return -std::log1p(-uniform01()) / lambda;
}

Triple Sampler::next() {
    for (;;) {
        double a, b, c;
        switch (spec_.kind) {
        case SamplerSpec::Kind::WedgeUniform: {
            a = 1.0;
            b = 1.0 + (spec_.h - 1.0) * uniform01();
            c = 1.0 + (spec_.h - 1.0) * uniform01();
            if (b > c) std::swap(b, c);
            break;
        }
        case SamplerSpec::Kind::ExpIID: {
            a = exponential(spec_.lambda);
            b = exponential(spec_.lambda);
            c = exponential(spec_.lambda);
            if (a > b) std::swap(a, b);
            if (b > c) std::swap(b, c);
            if (a > b) std::swap(a, b);
            break;
        }
        case SamplerSpec::Kind::Dirichlet111: {
            double e1 = exponential(1.0), e2 = exponential(1.0), e3 = exponential(1.0);
            double s = e1 + e2 + e3;
            a = e1 / s; b = e2 / s; c = e3 / s;
            if (a > b) std::swap(a, b);
            if (b > c) std::swap(b, c);
            if (a > b) std::swap(a, b);
            break;
        }
        }
        if (a > 0 && a < b && b < c) return {a, b, c};
        ++duplicates_; // zero or tied draw; redraw
    }
}

namespace {

struct ChunkTally {
    long long hits = 0;
    long long ties = 0;
    long long escalations = 0;
};

bool classify_caused_exact(Method m, const Triple& t, int M) {
    PopulationInstance inst = PopulationInstance::from_doubles({t.p1, t.p2, t.p3}, M);
    return classify_violation(m, inst).cause == ViolationCause::CausedByNonzero;
}

ChunkTally run_chunk(Method m, int M, const SamplerSpec& spec, std::uint64_t chunk,
                     long long count) {
    Sampler sampler(spec, chunk_seed(spec.seed, chunk));
    ChunkTally tally;
    for (long long i = 0; i < count;) {
        Triple t = sampler.next();
        double pops[3] = {t.p1, t.p2, t.p3};
        fast::Outcome out = fast::classify_caused(m, pops, 3, M);
        bool caused;
        if (out.suspect) {
            ++tally.escalations;
            try {
                caused = classify_caused_exact(m, t, M);
            } catch (const TieDetected&) {
                ++tally.ties; // genuine tie: redraw, do not count the sample
                continue;
            }
        } else {
            caused = out.caused;
        }
        tally.hits += caused ? 1 : 0;
        ++i;
    }
    return tally;
}

} // namespace

EstimateResult estimate_violation_prob(Method m, int M, const SamplerSpec& sampler,
                                       long long n, const EstimateOptions& opts) {
    if (n < 1) throw InsufficientSamples("need at least one sample");

    const long long chunks = (n + kChunkSamples - 1) / kChunkSamples;
    int threads = opts.threads > 0
                      ? opts.threads
                      : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    threads = static_cast<int>(std::min<long long>(threads, chunks));

    auto chunk_count = [&](long long c) {
        return std::min(kChunkSamples, n - c * kChunkSamples);
    };

    std::vector<std::future<ChunkTally>> futures;
    futures.reserve(threads);
    for (int w = 0; w < threads; ++w) {
        futures.push_back(std::async(std::launch::async, [&, w] {
            ChunkTally mine;
            for (long long c = w; c < chunks; c += threads) {
                ChunkTally t = run_chunk(m, M, sampler, static_cast<std::uint64_t>(c),
                                         chunk_count(c));
                mine.hits += t.hits;
                mine.ties += t.ties;
                mine.escalations += t.escalations;
            }
            return mine;
        }));
    }

    ChunkTally total;
    for (auto& f : futures) {
        ChunkTally t = f.get();
        total.hits += t.hits;
        total.ties += t.ties;
        total.escalations += t.escalations;
    }

    EstimateResult r;
    r.method = m;
    r.seats = M;
    r.n = n;
    r.hits = total.hits;
    r.rejected_ties = total.ties;
    r.escalations = total.escalations;
    r.seed = sampler.seed;
    r.p_hat = static_cast<double>(total.hits) / static_cast<double>(n);

    const double z = 1.96;
    if (opts.wilson) {
        double nf = static_cast<double>(n);
        double denom = 1.0 + z * z / nf;
        double center = (r.p_hat + z * z / (2 * nf)) / denom;
        double half = z *
                      std::sqrt(r.p_hat * (1 - r.p_hat) / nf + z * z / (4 * nf * nf)) /
                      denom;
        r.ci_low = center - half;
        r.ci_high = center + half;
    } else {
        double half = z * std::sqrt(r.p_hat * (1.0 - r.p_hat) / static_cast<double>(n));
        r.ci_low = r.p_hat - half;
        r.ci_high = r.p_hat + half;
    }
    return r;
}

double tau_uniformity_ks(const SamplerSpec& spec, long long n) {
    if (n < 1) throw InsufficientSamples("need at least one sample");
    Sampler sampler(spec);
    std::vector<double> taus;
    taus.reserve(static_cast<size_t>(n));
    for (long long i = 0; i < n; ++i) {
        Triple t = sampler.next();
        taus.push_back(tau_of(t.p1, t.p2, t.p3));
    }
    std::sort(taus.begin(), taus.end());

    auto cdf = [](double t) { return std::clamp((t + 1.0 / 3.0) * 1.5, 0.0, 1.0); };
    double dn = 0.0;
    double nf = static_cast<double>(n);
    for (long long i = 0; i < n; ++i) {
        double f = cdf(taus[static_cast<size_t>(i)]);
        dn = std::max(dn, std::max((i + 1) / nf - f, f - i / nf));
    }
    return dn;
}

} // namespace seats
