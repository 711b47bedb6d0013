#include "seats/instance.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace seats {

PopulationInstance::PopulationInstance(std::vector<Rational> pops, int M)
    : populations(std::move(pops)), seats(M) {
    if (populations.size() < 2)
        throw std::invalid_argument("need at least two states");
    if (seats < static_cast<int>(populations.size()))
        throw std::invalid_argument("seat count must be at least the number of states");
    std::set<Rational> seen;
    for (const auto& p : populations) {
        if (p <= 0) throw std::invalid_argument("populations must be positive");
        if (!seen.insert(p).second)
            throw std::invalid_argument("populations must be pairwise distinct");
    }
}

PopulationInstance PopulationInstance::from_strings(const std::vector<std::string>& pops,
                                                    int M) {
    std::vector<Rational> values;
    values.reserve(pops.size());
    for (const auto& s : pops) {
        auto r = parse_rational(s);
        if (!r) throw std::invalid_argument("cannot parse population '" + s + "'");
        values.push_back(*r);
    }
    return PopulationInstance(std::move(values), M);
}

PopulationInstance PopulationInstance::from_doubles(const std::vector<double>& pops,
                                                    int M) {
    std::vector<Rational> values;
    values.reserve(pops.size());
    for (double p : pops) values.emplace_back(p); // exact dyadic conversion
    return PopulationInstance(std::move(values), M);
}

Rational PopulationInstance::total() const {
    Rational sum(0);
    for (const auto& p : populations) sum += p;
    return sum;
}

std::vector<int> PopulationInstance::ascending_order() const {
    std::vector<int> idx(populations.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return populations[a] < populations[b]; });
    return idx;
}

QuotaVector standard_quotas(const std::vector<Rational>& pops, int M) {
    Rational total(0);
    for (const auto& p : pops) total += p;

    QuotaVector qv;
    qv.quotas.reserve(pops.size());
    Rational check(0);
    for (const auto& p : pops) {
        Rational q = Rational(M) * p / total;
        check += q;
        qv.floors.push_back(to_ll(floor_rat(q)));
        qv.ceilings.push_back(to_ll(ceil_rat(q)));
        qv.fractional.push_back(q - Rational(qv.floors.back()));
        qv.quotas.push_back(std::move(q));
    }
    if (check != M) throw std::logic_error("quota sum invariant broken");
    return qv;
}

QuotaVector standard_quotas(const PopulationInstance& inst) {
    return standard_quotas(inst.populations, inst.seats);
}

} // namespace seats
