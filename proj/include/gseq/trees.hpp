#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gseq/bigint.hpp"

namespace gseq {

enum class Step : std::uint8_t { Up, Right };

using LatticePath = std::vector<Step>;

// Path written over {U, R}.
std::string to_string(std::span<const Step> path);
LatticePath parse_path(const std::string& text);

enum class CountMode { Exhaustive, Dp };

inline constexpr std::uint64_t kExhaustivePathCap = 14;
inline constexpr std::uint64_t kPathDpCap = 200;

// Cyclically distinct rooted plane trees with n edges (Walkup's divisor sum).
BigInt walkup_T(std::uint64_t n);

// Size-k submultisets of {0, ..., n-1} whose sum is divisible by n.
BigInt multiset_count_M(std::uint64_t n, std::uint64_t k);

// Sum of bar heights: for each Right step, the number of Up steps before it.
std::uint64_t path_area(std::span<const Step> path);

// Paths (0,0) -> (n,n) with area divisible by n.
BigInt count_paths_N(std::uint64_t n, CountMode mode = CountMode::Dp);

struct PathLastStepSplit {
  BigInt ending_up;
  BigInt ending_right;
};

// Exhaustive split of the paths counted by count_paths_N by their final step.
PathLastStepSplit count_paths_by_last_step(std::uint64_t n);

}  // namespace gseq
