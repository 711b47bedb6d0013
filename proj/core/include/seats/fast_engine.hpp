#pragma once

#include "seats/method.hpp"

#include <vector>

namespace seats::fast {

/// Relative gap below which a double-precision priority comparison is treated
/// as a potential tie and the sample is re-classified in exact arithmetic.
inline constexpr double kTieTolerance = 1e-12;

struct Outcome {
    bool caused = false;   // classify_violation would report CausedByNonzero
    bool suspect = false;  // a comparison fell inside the tie tolerance;
                           //   the caller must escalate to the exact engine
};

/// Double-precision version of the caused-by-nonzero classification used for
/// Monte Carlo throughput. `pops` must be ascending and positive. Any
/// comparison within kTieTolerance marks the outcome suspect instead of
/// guessing.
Outcome classify_caused(Method m, const double* pops, int n, int M);

/// Double-precision apportionment (no order tracking). Returns false and sets
/// nothing if a near-tie occurred.
bool apportion(Method m, const double* pops, int n, int M, int* allocation,
               bool* suspect);

} // namespace seats::fast
