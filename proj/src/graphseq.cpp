#include "gseq/graphseq.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "gseq/kernels.hpp"

namespace gseq {

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  const int n = static_cast<int>(degrees_.size());
  for (int d : degrees_) {
    if (d < 0 || d > n - 1) {
      throw std::invalid_argument("DegreeSequence: degree " + std::to_string(d) + " outside [0, " +
                                  std::to_string(n - 1) + "]");
    }
  }
  std::sort(degrees_.begin(), degrees_.end());
}

namespace {

// d sorted descending.
bool erdos_gallai_descending(std::span<const int> d) {
  long long total = 0;
  for (int v : d) total += v;
  if (total % 2 != 0) return false;
  const long long n = static_cast<long long>(d.size());
  long long lhs = 0;
  for (long long k = 1; k <= n; ++k) {
    lhs += d[k - 1];
    long long rhs = k * (k - 1);
    for (long long i = k; i < n; ++i) rhs += std::min<long long>(d[i], k);
    if (lhs > rhs) return false;
  }
  return true;
}

// Depth-first over non-increasing sequences: position i chooses a value <= the
// previous one. After fixing the largest j entries, the k-th inequality for
// k <= j has a known left side, and the unknown tail contributes at most
// (n - j) * min(d_j, k) to the right side.
struct SequenceSearch {
  int n;
  bool prune;
  std::vector<int> seq;
  std::uint64_t count = 0;

  bool hopeless(int j) const {
    long long lhs = 0;
    for (int k = 1; k <= j; ++k) {
      lhs += seq[k - 1];
      long long rhs = static_cast<long long>(k) * (k - 1);
      for (int i = k; i < j; ++i) rhs += std::min(seq[i], k);
      rhs += static_cast<long long>(n - j) * std::min(seq[j - 1], k);
      if (lhs > rhs) return true;
    }
    return false;
  }

  void run(int i, int hi, long long sum) {
    if (i == n) {
      if (sum % 2 == 0 && erdos_gallai_descending(seq)) ++count;
      return;
    }
    for (int v = hi; v >= 0; --v) {
      seq[i] = v;
      if (prune && hopeless(i + 1)) continue;
      run(i + 1, v, sum + v);
    }
  }
};

}  // namespace

bool is_graphical_sequence(const DegreeSequence& d) {
  std::vector<int> desc(d.degrees().begin(), d.degrees().end());
  std::reverse(desc.begin(), desc.end());
  return erdos_gallai_descending(desc);
}

namespace kernels {

BigInt count_graphical_sequences(std::uint64_t n, bool prune) {
  if (n == 0) throw std::invalid_argument("count_graphical_sequences: n must be positive");
  const int ni = static_cast<int>(n);
  std::vector<std::uint64_t> by_top(n, 0);
  // split on the largest degree
#pragma omp parallel for schedule(dynamic, 1)
  for (int top = 0; top < ni; ++top) {
    SequenceSearch search{ni, prune, std::vector<int>(n, 0)};
    search.seq[0] = top;
    if (!(prune && search.hopeless(1))) search.run(1, top, top);
    by_top[static_cast<std::size_t>(top)] = search.count;
  }
  BigInt total = 0;
  for (std::uint64_t c : by_top) total += c;
  return total;
}

}  // namespace kernels

BigInt count_graphical_sequences(std::uint64_t n, bool prune) {
  if (n > kSequenceCountCap) {
    throw std::invalid_argument("count_graphical_sequences: n must be <= " + std::to_string(kSequenceCountCap));
  }
  return kernels::count_graphical_sequences(n, prune);
}

std::set<DegreeSequence> graph_degree_oracle(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("graph_degree_oracle: n must be positive");
  if (n > kGraphOracleCap) {
    throw std::invalid_argument("graph_degree_oracle: n must be <= " + std::to_string(kGraphOracleCap));
  }
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < static_cast<int>(n); ++a) {
    for (int b = a + 1; b < static_cast<int>(n); ++b) edges.emplace_back(a, b);
  }
  std::set<DegreeSequence> out;
  const std::uint64_t graphs = std::uint64_t{1} << edges.size();
  for (std::uint64_t mask = 0; mask < graphs; ++mask) {
    std::vector<int> deg(n, 0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if ((mask >> e) & 1u) {
        ++deg[edges[e].first];
        ++deg[edges[e].second];
      }
    }
    out.emplace(std::move(deg));
  }
  return out;
}

std::vector<RatioRow> ratio_table(std::uint64_t n_max) {
  std::vector<RatioRow> rows;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    BigInt g = count_graphical_sequences(n);
    const double ratio = std::pow(static_cast<double>(n), 0.75) * g.convert_to<double>() /
                         std::pow(4.0, static_cast<double>(n));
    rows.push_back({n, std::move(g), ratio});
  }
  return rows;
}

}  // namespace gseq
