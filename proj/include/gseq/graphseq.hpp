#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "gseq/bigint.hpp"

namespace gseq {

inline constexpr std::uint64_t kGraphOracleCap = 6;
inline constexpr std::uint64_t kSequenceCountCap = 14;

// Degrees d_1 <= ... <= d_n with each entry in [0, n-1].
class DegreeSequence {
 public:
  // Sorts the input. Throws std::invalid_argument for entries outside [0, n-1].
  explicit DegreeSequence(std::vector<int> degrees);

  std::size_t size() const { return degrees_.size(); }
  std::span<const int> degrees() const { return degrees_; }

  friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> degrees_;
};

// Erdos-Gallai: even sum and, in descending order,
// sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(d_i, k) for every k.
bool is_graphical_sequence(const DegreeSequence& d);

// G_n. n <= kSequenceCountCap.
BigInt count_graphical_sequences(std::uint64_t n, bool prune = true);

// Sorted degree sequences of all simple graphs on n labelled vertices.
std::set<DegreeSequence> graph_degree_oracle(std::uint64_t n);

struct RatioRow {
  std::uint64_t n;
  BigInt count;
  double ratio;  // n^{3/4} G_n / 4^n
};

std::vector<RatioRow> ratio_table(std::uint64_t n_max);

}  // namespace gseq
