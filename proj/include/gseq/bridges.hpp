#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gseq/bigint.hpp"
#include "gseq/trees.hpp"
#include "gseq/walk.hpp"

namespace gseq {

inline constexpr std::uint64_t kBridgeEnumerationCap = 10;
inline constexpr std::uint64_t kGraphicalDpCap = 60;
inline constexpr std::uint64_t kSigmaModDpCap = 200;

// Half the sum of the positions at even times 2, 4, ..., 2m.
// Throws std::invalid_argument for odd length.
std::int64_t diamond_area(const Walk& walk);

// sigma of the prefix of length 2k, for k = 1..m.
std::vector<std::int64_t> prefix_diamond_areas(const Walk& walk);

// Pairwise average of increments. Throws std::invalid_argument for odd length.
LazyWalk lazify(const Walk& walk);

// Sum of the positions of a lazy walk after each step.
std::int64_t lazy_area(const LazyWalk& walk);

// sigma(B) = 0 and every prefix sigma_{2k} >= 0. False for non-bridges.
bool is_graphical(const Bridge& bridge);

// Graphical with no interior renewal: no 1 <= k < n with X_{2k} = 0 and
// sigma_{2k} = 0. Exactly the bridges whose decomposition has one part.
bool is_irreducible(const Bridge& bridge);

// B_n, the number of graphical bridges of length 2n.
BigInt count_graphical_B(std::uint64_t n);

// B_0 .. B_{n_max} from one DP pass.
IntSeqTable graphical_bridge_counts(std::uint64_t n_max);

// Every bridge of length 2n in lexicographic order with +1 before -1.
void for_each_bridge(std::uint64_t n, const std::function<void(const Bridge&)>& visit);

// All graphical bridges of length 2n, same order. n <= kBridgeEnumerationCap.
std::vector<Bridge> enumerate_graphical_bridges(std::uint64_t n);

// N'_n: bridges of length 2n with sigma divisible by n.
BigInt count_bridges_sigma_mod(std::uint64_t n, CountMode mode = CountMode::Dp);

// Split at every even time with position 0 and prefix sigma 0.
// Throws std::invalid_argument if the bridge is not graphical.
std::vector<Bridge> irreducible_decomposition(const Bridge& bridge);

// Length 2j of the first irreducible part. Throws for non-graphical input.
std::size_t first_irreducible_length(const Bridge& bridge);

// Prefix counts of graphical bridges over pair-index layers.
//
// Cell (k, h, s) counts increment sequences of length 2k ending at height h
// with sigma_{2j} >= 0 for all j <= k and sigma_{2k} = s. Layers only hold
// states from which some bridge of length <= 2n can still close, so
// |h| <= 2 min(k, n-k) and s <= min(k(k+1)/2, (n-k)(n-k-1)/2).
class BridgeAreaTable {
 public:
  explicit BridgeAreaTable(std::uint64_t n);

  std::uint64_t pairs() const { return n_; }
  std::int64_t height_bound(std::uint64_t k) const { return layers_.at(k).h_max; }
  std::int64_t area_bound(std::uint64_t k) const { return layers_.at(k).s_max; }

  // Zero outside the stored rectangle.
  const BigInt& count(std::uint64_t k, std::int64_t h, std::int64_t s) const;

 private:
  struct Layer {
    std::int64_t h_max = 0;
    std::int64_t s_max = 0;
    std::vector<BigInt> cells;

    std::size_t index(std::int64_t h, std::int64_t s) const {
      return static_cast<std::size_t>((h + h_max) / 2 * (s_max + 1) + s);
    }
  };

  std::uint64_t n_;
  std::vector<Layer> layers_;

  friend void fill_bridge_area_table(BridgeAreaTable& table);
};

}  // namespace gseq
