#pragma once

#include <cstdint>
#include <vector>

#include "gseq/trees.hpp"
#include "gseq/walk.hpp"

namespace gseq {

struct PathWithShift {
  LatticePath path;
  std::int64_t ell = 0;  // number of +1 among the odd-indexed increments
};

// Odd-indexed increments followed by even-indexed increments, +1 -> Up and
// -1 -> Right. For a bridge of length 2n, path_area(path) = sigma(B) + ell * n.
PathWithShift bridge_to_path(const Bridge& bridge);

// Inverse of bridge_to_path. Throws unless the path has equally many Up and Right steps.
Bridge path_to_bridge(const LatticePath& path);

// A graphical bridge together with a rotation count below half the length
// of its first irreducible part.
struct ShiftedPair {
  Bridge bridge;
  std::size_t shift = 0;

  friend bool operator==(const ShiftedPair&, const ShiftedPair&) = default;
  friend auto operator<=>(const ShiftedPair&, const ShiftedPair&) = default;
};

// Cyclic rotation that moves the start point 2*shift steps along the bridge
// (the first 2*shift increments go to the end). The image has sigma = 0 mod n.
// Throws std::invalid_argument if the pair violates its invariants.
Bridge phi_shift(const ShiftedPair& pair);

// The unique pair mapping to `target` under phi_shift, found by scanning all
// cyclic rotations. Throws std::invalid_argument if sigma(target) != 0 mod n,
// and std::logic_error if zero or several preimages exist.
ShiftedPair phi_inverse(const Bridge& target);

// Every legal pair for bridges of length 2n (n <= kBridgeEnumerationCap).
std::vector<ShiftedPair> enumerate_shifted_pairs(std::uint64_t n);

// Rotation of the increments: element i of the result is element (i + offset) mod len.
Bridge rotate_left(const Bridge& bridge, std::size_t offset);

}  // namespace gseq
