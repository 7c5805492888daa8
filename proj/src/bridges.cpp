#include "gseq/bridges.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "gseq/kernels.hpp"

namespace gseq {

namespace {

void require_even(const Walk& walk, const char* who) {
  if (walk.size() % 2 != 0) throw std::invalid_argument(std::string(who) + ": walk length must be even");
}

}  // namespace

std::vector<std::int64_t> prefix_diamond_areas(const Walk& walk) {
  require_even(walk, "prefix_diamond_areas");
  std::vector<std::int64_t> out;
  out.reserve(walk.size() / 2);
  std::int64_t x = 0;
  std::int64_t twice_sigma = 0;
  for (std::size_t i = 0; i < walk.size(); i += 2) {
    x += walk[i] + walk[i + 1];
    twice_sigma += x;
    out.push_back(twice_sigma / 2);
  }
  return out;
}

std::int64_t diamond_area(const Walk& walk) {
  require_even(walk, "diamond_area");
  const auto prefix = prefix_diamond_areas(walk);
  return prefix.empty() ? 0 : prefix.back();
}

LazyWalk lazify(const Walk& walk) {
  require_even(walk, "lazify");
  LazyWalk lazy;
  lazy.increments.reserve(walk.size() / 2);
  for (std::size_t i = 0; i < walk.size(); i += 2) {
    lazy.increments.push_back(static_cast<std::int8_t>((walk[i] + walk[i + 1]) / 2));
  }
  return lazy;
}

std::int64_t lazy_area(const LazyWalk& walk) {
  std::int64_t y = 0;
  std::int64_t area = 0;
  for (std::int8_t d : walk.increments) {
    y += d;
    area += y;
  }
  return area;
}

bool is_graphical(const Bridge& bridge) {
  if (!bridge.is_bridge()) return false;
  const auto prefix = prefix_diamond_areas(bridge);
  for (std::int64_t s : prefix) {
    if (s < 0) return false;
  }
  return prefix.empty() || prefix.back() == 0;
}

bool is_irreducible(const Bridge& bridge) {
  if (!is_graphical(bridge)) return false;
  // sigma_{2n-2} = sigma_{2n} = 0 for every bridge, so "interior sigma > 0"
  // is read at diagnostic times: no interior k with X_{2k} = 0 and sigma_{2k} = 0.
  std::int64_t x = 0;
  std::int64_t twice_sigma = 0;
  for (std::size_t i = 0; i + 2 < bridge.size(); i += 2) {
    x += bridge[i] + bridge[i + 1];
    twice_sigma += x;
    if (x == 0 && twice_sigma == 0) return false;
  }
  return true;
}

IntSeqTable graphical_bridge_counts(std::uint64_t n_max) {
  if (n_max > kGraphicalDpCap) {
    throw std::invalid_argument("graphical_bridge_counts: n_max must be <= " + std::to_string(kGraphicalDpCap));
  }
  const BridgeAreaTable table(n_max);
  IntSeqTable out;
  out.values.reserve(n_max + 1);
  for (std::uint64_t k = 0; k <= n_max; ++k) out.values.push_back(table.count(k, 0, 0));
  return out;
}

BigInt count_graphical_B(std::uint64_t n) { return graphical_bridge_counts(n).at(n); }

void for_each_bridge(std::uint64_t n, const std::function<void(const Bridge&)>& visit) {
  const std::size_t len = 2 * n;
  std::vector<std::int8_t> inc(len);
  // ups = number of +1 placed so far; the rest must balance
  auto rec = [&](auto&& self, std::size_t i, std::size_t ups) -> void {
    if (i == len) {
      visit(Walk(inc));
      return;
    }
    const std::size_t downs = i - ups;
    if (ups < n) {
      inc[i] = 1;
      self(self, i + 1, ups + 1);
    }
    if (downs < n) {
      inc[i] = -1;
      self(self, i + 1, ups);
    }
  };
  rec(rec, 0, 0);
}

std::vector<Bridge> enumerate_graphical_bridges(std::uint64_t n) {
  if (n > kBridgeEnumerationCap) {
    throw std::invalid_argument("enumerate_graphical_bridges: n must be <= " +
                                std::to_string(kBridgeEnumerationCap));
  }
  std::vector<Bridge> out;
  const std::size_t len = 2 * n;
  std::vector<std::int8_t> inc(len);
  const auto ni = static_cast<std::int64_t>(n);
  // Prune on the prefix constraint and on closability: at pair k with r pairs
  // left, |x| <= 2r and sigma <= r(r-1)/2.
  auto rec = [&](auto&& self, std::size_t i, std::int64_t x, std::int64_t twice_sigma) -> void {
    if (i == len) {
      if (x == 0 && twice_sigma == 0) out.emplace_back(inc);
      return;
    }
    for (std::int8_t d : {std::int8_t{1}, std::int8_t{-1}}) {
      inc[i] = d;
      const std::int64_t nx = x + d;
      std::int64_t ns = twice_sigma;
      if (i % 2 == 1) {
        ns += nx;
        const std::int64_t r = ni - static_cast<std::int64_t>((i + 1) / 2);
        if (ns < 0 || std::abs(nx) > 2 * r || ns > r * (r - 1)) continue;
      }
      self(self, i + 1, nx, ns);
    }
  };
  rec(rec, 0, 0, 0);
  return out;
}

BigInt count_bridges_sigma_mod(std::uint64_t n, CountMode mode) {
  if (n == 0) throw std::invalid_argument("count_bridges_sigma_mod: n must be positive");
  if (mode == CountMode::Exhaustive) {
    if (n > kBridgeEnumerationCap) {
      throw std::invalid_argument("count_bridges_sigma_mod: exhaustive mode supports n <= " +
                                  std::to_string(kBridgeEnumerationCap));
    }
    std::uint64_t count = 0;
    const auto ni = static_cast<std::int64_t>(n);
    for_each_bridge(n, [&](const Bridge& b) {
      if (((diamond_area(b) % ni) + ni) % ni == 0) ++count;
    });
    return count;
  }
  if (n > kSigmaModDpCap) {
    throw std::invalid_argument("count_bridges_sigma_mod: DP mode supports n <= " + std::to_string(kSigmaModDpCap));
  }
  return kernels::count_bridges_sigma_mod(n);
}

std::vector<Bridge> irreducible_decomposition(const Bridge& bridge) {
  if (!is_graphical(bridge)) throw std::invalid_argument("irreducible_decomposition: bridge is not graphical");
  std::vector<Bridge> parts;
  std::size_t start = 0;
  std::int64_t x = 0;
  std::int64_t twice_sigma = 0;
  for (std::size_t i = 0; i < bridge.size(); i += 2) {
    x += bridge[i] + bridge[i + 1];
    twice_sigma += x;
    if (x == 0 && twice_sigma == 0) {
      parts.push_back(bridge.slice(start, i + 2 - start));
      start = i + 2;
    }
  }
  return parts;
}

std::size_t first_irreducible_length(const Bridge& bridge) {
  if (!is_graphical(bridge)) throw std::invalid_argument("first_irreducible_length: bridge is not graphical");
  if (bridge.empty()) throw std::invalid_argument("first_irreducible_length: empty bridge has no parts");
  std::int64_t x = 0;
  std::int64_t twice_sigma = 0;
  for (std::size_t i = 0; i < bridge.size(); i += 2) {
    x += bridge[i] + bridge[i + 1];
    twice_sigma += x;
    if (x == 0 && twice_sigma == 0) return i + 2;
  }
  return bridge.size();
}

}  // namespace gseq
