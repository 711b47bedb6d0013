#pragma once

#include "seats/rational.hpp"

#include <string>
#include <vector>

namespace seats {

/// A three-or-more state population vector with a seat count. Populations are
/// exact rationals, pairwise distinct and strictly positive; they are kept in
/// the order given (operations that need the ascending order sort internally).
struct PopulationInstance {
    std::vector<Rational> populations;
    int seats = 0; // M

    PopulationInstance(std::vector<Rational> pops, int M);

    static PopulationInstance from_strings(const std::vector<std::string>& pops, int M);
    static PopulationInstance from_doubles(const std::vector<double>& pops, int M);

    int size() const { return static_cast<int>(populations.size()); }
    Rational total() const;

    /// Indices of the states sorted by ascending population.
    std::vector<int> ascending_order() const;
};

/// Standard quotas q_i = M p_i / P with their integer envelopes pre-split.
struct QuotaVector {
    std::vector<Rational> quotas;
    std::vector<long long> floors;
    std::vector<long long> ceilings;
    std::vector<Rational> fractional; // decimal parts d_i = q_i - floor(q_i)

    int size() const { return static_cast<int>(quotas.size()); }
};

/// Exact standard quotas; the sum equals M identically.
QuotaVector standard_quotas(const PopulationInstance& inst);

/// Quotas of an arbitrary population list (helper for subset apportionments).
QuotaVector standard_quotas(const std::vector<Rational>& pops, int M);

} // namespace seats
