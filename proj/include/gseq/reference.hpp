#pragma once

// Straightforward serial implementations kept as independent cross-checks
// for the parallel kernels.

#include <cstdint>

#include "gseq/bigint.hpp"
#include "gseq/walks_mc.hpp"

namespace gseq::reference {

// Push DP over a sparse map of (height, sigma) states, no pruning bounds.
IntSeqTable graphical_bridge_counts(std::uint64_t n_max);

// Push DP over (height, sigma mod n), one step at a time.
BigInt count_bridges_sigma_mod(std::uint64_t n);

// Row-major DP over (x, y, area mod n).
BigInt count_paths_mod_area(std::uint64_t n);

// Enumerates every non-decreasing sequence and applies Erdos-Gallai to each.
BigInt count_graphical_sequences(std::uint64_t n);

// Enumerates size-k submultisets of {0..n-1} and counts those with sum = 0 mod n.
BigInt count_zero_sum_multisets(std::uint64_t n, std::uint64_t k);

// Runs the worker sub-streams one after another on the calling thread.
McEstimate estimate_rho(std::uint64_t samples, std::uint64_t horizon, std::uint64_t seed,
                        unsigned workers);

}  // namespace gseq::reference
