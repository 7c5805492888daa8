#include "gseq/reference.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gseq/graphseq.hpp"

namespace gseq::reference {

IntSeqTable graphical_bridge_counts(std::uint64_t n_max) {
  IntSeqTable out;
  std::map<std::pair<std::int64_t, std::int64_t>, BigInt> states{{{0, 0}, 1}};
  out.values.push_back(1);
  for (std::uint64_t k = 1; k <= n_max; ++k) {
    std::map<std::pair<std::int64_t, std::int64_t>, BigInt> next;
    for (const auto& [key, count] : states) {
      const auto [h, s] = key;
      for (int a : {1, -1}) {
        for (int b : {1, -1}) {
          const std::int64_t nh = h + a + b;
          const std::int64_t ns = s + nh / 2;
          if (ns >= 0) next[{nh, ns}] += count;
        }
      }
    }
    states = std::move(next);
    auto it = states.find({0, 0});
    out.values.push_back(it == states.end() ? BigInt(0) : it->second);
  }
  return out;
}

BigInt count_bridges_sigma_mod(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("count_bridges_sigma_mod: n must be positive");
  const auto ni = static_cast<std::int64_t>(n);
  // state: (height, twice sigma mod 2n) updated at every step; sigma only
  // accumulates at even times
  std::map<std::pair<std::int64_t, std::int64_t>, BigInt> states{{{0, 0}, 1}};
  for (std::uint64_t i = 1; i <= 2 * n; ++i) {
    std::map<std::pair<std::int64_t, std::int64_t>, BigInt> next;
    for (const auto& [key, count] : states) {
      for (int d : {1, -1}) {
        const std::int64_t h = key.first + d;
        std::int64_t s = key.second;
        if (i % 2 == 0) s = ((s + h) % (2 * ni) + 2 * ni) % (2 * ni);
        next[{h, s}] += count;
      }
    }
    states = std::move(next);
  }
  BigInt total = 0;
  for (const auto& [key, count] : states) {
    if (key.first == 0 && key.second % 2 == 0 && (key.second / 2) % ni == 0) total += count;
  }
  return total;
}

BigInt count_paths_mod_area(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("count_paths_mod_area: n must be positive");
  const std::size_t nn = n;
  // grid[x][y][r]
  std::vector<std::vector<std::vector<BigInt>>> grid(
      nn + 1, std::vector<std::vector<BigInt>>(nn + 1, std::vector<BigInt>(nn, BigInt(0))));
  grid[0][0][0] = 1;
  for (std::size_t x = 0; x <= nn; ++x) {
    for (std::size_t y = 0; y <= nn; ++y) {
      for (std::size_t r = 0; r < nn; ++r) {
        const BigInt& c = grid[x][y][r];
        if (c == 0) continue;
        if (y < nn) grid[x][y + 1][r] += c;
        if (x < nn) grid[x + 1][y][(r + y) % nn] += c;
      }
    }
  }
  return grid[nn][nn][0];
}

BigInt count_graphical_sequences(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("count_graphical_sequences: n must be positive");
  std::vector<int> seq(n, 0);
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, std::size_t i, int lo) -> void {
    if (i == n) {
      if (is_graphical_sequence(DegreeSequence(seq))) ++count;
      return;
    }
    for (int v = lo; v < static_cast<int>(n); ++v) {
      seq[i] = v;
      self(self, i + 1, v);
    }
  };
  rec(rec, 0, 0);
  return count;
}

BigInt count_zero_sum_multisets(std::uint64_t n, std::uint64_t k) {
  if (n == 0) throw std::invalid_argument("count_zero_sum_multisets: n must be positive");
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, std::uint64_t placed, std::uint64_t lo, std::uint64_t sum) -> void {
    if (placed == k) {
      if (sum % n == 0) ++count;
      return;
    }
    for (std::uint64_t v = lo; v < n; ++v) self(self, placed + 1, v, sum + v);
  };
  rec(rec, 0, 0, 0);
  return count;
}

McEstimate estimate_rho(std::uint64_t samples, std::uint64_t horizon, std::uint64_t seed,
                        unsigned workers) {
  if (workers == 0) workers = 1;
  TauTally total;
  for (unsigned w = 0; w < workers; ++w) total += run_tau_worker(samples, horizon, seed, w, workers);
  return summarize(total, samples, horizon, seed, workers);
}

}  // namespace gseq::reference
