#include "gseq/trees.hpp"

#include <numeric>
#include <stdexcept>

#include "gseq/numtheory.hpp"
#include "gseq/kernels.hpp"

namespace gseq {

std::string to_string(std::span<const Step> path) {
  std::string out;
  out.reserve(path.size());
  for (Step s : path) out.push_back(s == Step::Up ? 'U' : 'R');
  return out;
}

LatticePath parse_path(const std::string& text) {
  LatticePath path;
  path.reserve(text.size());
  for (char c : text) {
    if (c == 'U') {
      path.push_back(Step::Up);
    } else if (c == 'R') {
      path.push_back(Step::Right);
    } else {
      throw std::invalid_argument(std::string("parse_path: unexpected character '") + c + "'");
    }
  }
  return path;
}

BigInt walkup_T(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("walkup_T: n must be positive");
  BigInt sum = 0;
  for (std::uint64_t d : divisors(n)) sum += binomial(2 * d - 1, d) * euler_phi(n / d);
  if (sum % n != 0) throw std::logic_error("walkup_T: divisor sum not divisible by n");
  return sum / n;
}

BigInt multiset_count_M(std::uint64_t n, std::uint64_t k) {
  if (n == 0) throw std::invalid_argument("multiset_count_M: n must be positive");
  // gcd(0, n) = n, so k = 0 reduces to sum_{d|n} phi(d) / n = 1
  const std::uint64_t g = std::gcd(k, n);
  BigInt sum = 0;
  for (std::uint64_t d : divisors(g)) sum += binomial((n + k) / d - 1, k / d) * euler_phi(d);
  if (sum % n != 0) throw std::logic_error("multiset_count_M: divisor sum not divisible by n");
  return sum / n;
}

std::uint64_t path_area(std::span<const Step> path) {
  std::uint64_t ups = 0;
  std::uint64_t area = 0;
  for (Step s : path) {
    if (s == Step::Up) {
      ++ups;
    } else {
      area += ups;
    }
  }
  return area;
}

namespace {

struct PathCounter {
  std::uint64_t n;
  std::uint64_t ending_up = 0;
  std::uint64_t ending_right = 0;

  // x Right steps and y Up steps taken so far; area reduced mod n.
  void walk(std::uint64_t x, std::uint64_t y, std::uint64_t area, bool last_up) {
    if (x == n && y == n) {
      if (area == 0) (last_up ? ending_up : ending_right) += 1;
      return;
    }
    if (y < n) walk(x, y + 1, area, true);
    if (x < n) {
      std::uint64_t next = area + y;
      if (next >= n) next %= n;
      walk(x + 1, y, next, false);
    }
  }
};

PathCounter exhaustive_paths(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("count_paths_N: n must be positive");
  if (n > kExhaustivePathCap) {
    throw std::invalid_argument("count_paths_N: exhaustive mode supports n <= " +
                                std::to_string(kExhaustivePathCap));
  }
  PathCounter counter{n};
  counter.walk(0, 0, 0, false);
  return counter;
}

}  // namespace

BigInt count_paths_N(std::uint64_t n, CountMode mode) {
  if (n == 0) throw std::invalid_argument("count_paths_N: n must be positive");
  if (mode == CountMode::Exhaustive) {
    const PathCounter c = exhaustive_paths(n);
    return BigInt(c.ending_up) + c.ending_right;
  }
  if (n > kPathDpCap) {
    throw std::invalid_argument("count_paths_N: DP mode supports n <= " + std::to_string(kPathDpCap));
  }
  return kernels::count_paths_mod_area(n);
}

PathLastStepSplit count_paths_by_last_step(std::uint64_t n) {
  const PathCounter c = exhaustive_paths(n);
  return {BigInt(c.ending_up), BigInt(c.ending_right)};
}

}  // namespace gseq
