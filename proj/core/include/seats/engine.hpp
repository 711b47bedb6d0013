#pragma once

#include "seats/instance.hpp"
#include "seats/method.hpp"

#include <vector>

namespace seats {

/// One entry of the priority sequence: `state` received its `seat_index`-th
/// seat (1-based). Guarantee seats from the delta(0) = 0 pre-assignment come
/// first, in state order.
struct SeatAssignment {
    int state;
    int seat_index;
    bool operator==(const SeatAssignment&) const = default;
};

struct Apportionment {
    Method method{};
    int seats = 0;
    std::vector<int> allocation;          // a_i, aligned with the input order
    std::vector<SeatAssignment> order;    // full assignment sequence

    bool operator==(const Apportionment& other) const {
        return method == other.method && seats == other.seats &&
               allocation == other.allocation;
    }
};

/// Sequential highest-priority apportionment. Methods with delta(0) = 0 seat
/// every state once before the priority rounds (step 1 of the procedure).
/// Throws TieDetected on an exact priority tie.
Apportionment apportion(Method m, const PopulationInstance& inst);

/// Same engine on a bare population list.
Apportionment apportion(Method m, const std::vector<Rational>& pops, int M);

/// The modified method: the smallest state is granted a single seat up front
/// and the remaining M-1 seats are apportioned among the other states.
/// Requires a method that guarantees nonzero allocations.
Apportionment modified_apportion(Method m, const PopulationInstance& inst);

} // namespace seats
