#pragma once

// OpenMP-parallel counting kernels. The serial versions in reference.hpp
// compute the same quantities by a different traversal and are kept for
// cross-checking and benchmarking.

#include <cstdint>

#include "gseq/bigint.hpp"

namespace gseq::kernels {

// Paths (0,0) -> (n,n) with area = 0 mod n; anti-diagonal sweep.
BigInt count_paths_mod_area(std::uint64_t n);

// Bridges of length 2n with sigma = 0 mod n; layer sweep over (height, sigma mod n).
BigInt count_bridges_sigma_mod(std::uint64_t n);

// Non-decreasing degree sequences of length n passing Erdos-Gallai.
// With prune set, prefixes that cannot be completed are cut early.
BigInt count_graphical_sequences(std::uint64_t n, bool prune);

}  // namespace gseq::kernels
