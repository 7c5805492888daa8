#include "gseq/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "gseq/bijections.hpp"
#include "gseq/bridges.hpp"
#include "gseq/constants.hpp"
#include "gseq/graphseq.hpp"
#include "gseq/numtheory.hpp"
#include "gseq/reference.hpp"
#include "gseq/series.hpp"
#include "gseq/trees.hpp"

namespace gseq {

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "logtransform") return Suite::LogTransform;
  if (name == "bijections") return Suite::Bijections;
  if (name == "lemmas") return Suite::Lemmas;
  if (name == "oracles") return Suite::Oracles;
  if (name == "all") return Suite::All;
  return std::nullopt;
}

const char* to_string(Suite suite) {
  switch (suite) {
    case Suite::LogTransform: return "logtransform";
    case Suite::Bijections: return "bijections";
    case Suite::Lemmas: return "lemmas";
    case Suite::Oracles: return "oracles";
    case Suite::All: return "all";
  }
  return "?";
}

namespace {

// A check returns an empty string on success, otherwise the first mismatch.
using Check = std::function<std::string()>;

void run(std::vector<CheckResult>& out, std::string name, std::string range, const Check& check) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string failure;
  try {
    failure = check();
  } catch (const std::exception& e) {
    failure = std::string("exception: ") + e.what();
  }
  const auto t1 = std::chrono::steady_clock::now();
  CheckResult r;
  r.name = std::move(name);
  r.passed = failure.empty();
  r.detail = failure.empty() ? range : range + "; " + failure;
  r.seconds = std::chrono::duration<double>(t1 - t0).count();
  out.push_back(std::move(r));
}

std::string upto(std::uint64_t n) { return "n <= " + std::to_string(n); }

std::vector<BigInt> doubled_T(std::uint64_t n_max) {
  std::vector<BigInt> out(n_max + 1, BigInt(0));
  for (std::uint64_t n = 1; n <= n_max; ++n) out[n] = 2 * walkup_T(n);
  return out;
}

void log_transform_suite(std::vector<CheckResult>& out, std::uint64_t n_max) {
  const std::uint64_t n = std::min<std::uint64_t>(n_max, kGraphicalDpCap);
  run(out, "log transform of B_n equals 2 T_n", upto(n), [n] {
    const IntSeqTable b = graphical_bridge_counts(n);
    const std::vector<BigInt> two_t = doubled_T(n);
    for (std::uint64_t m = 1; m <= n; ++m) {
      BigInt rhs = 0;
      for (std::uint64_t i = 1; i <= m; ++i) rhs += two_t[i] * b.values[m - i];
      if (BigInt(m) * b.values[m] != rhs) return "identity fails at n = " + std::to_string(m);
    }
    const std::vector<BigInt> star = log_transform<BigInt>(b.values);
    for (std::uint64_t m = 1; m <= n; ++m) {
      if (star[m] != two_t[m]) return "log_transform differs at n = " + std::to_string(m);
    }
    return std::string();
  });

  const std::uint64_t n40 = std::min<std::uint64_t>(n_max, 40);
  run(out, "E[1/I_n] n B_n equals 2 T_n", upto(n40), [n40] {
    const IntSeqTable b = graphical_bridge_counts(n40);
    for (std::uint64_t m = 1; m <= n40; ++m) {
      if (mean_inverse_parts(b, m) * BigInt(m) * b.values[m] != Rational(2 * walkup_T(m))) {
        return "mismatch at n = " + std::to_string(m);
      }
      BigInt total = 0;
      for (const BigInt& c : parts_counts(b, m)) total += c;
      if (total != b.values[m]) return "part counts do not sum to B_n at n = " + std::to_string(m);
    }
    return std::string();
  });

  run(out, "part counts approach 1 + NegBin(2, 1 - rho)", "TV(n=40) < TV(n=10)", [] {
    const double rho = rho_exact().value.convert_to<double>();
    const IntSeqTable b = graphical_bridge_counts(40);
    const double tv10 = negative_binomial_tv_distance(parts_distribution(b, 10), rho);
    const double tv40 = negative_binomial_tv_distance(parts_distribution(b, 40), rho);
    if (!(tv40 < tv10)) {
      std::ostringstream os;
      os << "TV(10) = " << tv10 << ", TV(40) = " << tv40;
      return os.str();
    }
    return std::string();
  });

  run(out, "rho = 1 - exp(-2 xi) matches the 1/sqrt(1-rho) form of C", "C sqrt(1-rho) vs prefactor", [] {
    const BoundedReal x = xi();
    const BoundedReal c = constant_C(x);
    const BoundedReal r = rho_exact(x);
    const BoundedReal p = gamma_prefactor();
    const HighFloat lhs = c.value * sqrt(1 - r.value);
    // sqrt(1 - r) <= 1 and its derivative in r is below 1 in magnitude near rho
    const HighFloat tol = c.error + c.value * r.error + p.error;
    if (abs(lhs - p.value) > tol) return std::string("identity outside combined error");
    if (abs(1 / sqrt(1 - r.value) - exp(x.value)) > 2 * x.error + r.error * 4) {
      return std::string("1/sqrt(1-rho) differs from exp(xi)");
    }
    return std::string();
  });
}

void lemmas_suite(std::vector<CheckResult>& out, std::uint64_t n_max) {
  const std::uint64_t ne = std::min<std::uint64_t>(n_max, 12);
  run(out, "exhaustive lattice paths N_n = 2 T_n, split evenly by last step", upto(ne), [ne] {
    for (std::uint64_t n = 1; n <= ne; ++n) {
      const BigInt t = walkup_T(n);
      const PathLastStepSplit split = count_paths_by_last_step(n);
      if (split.ending_up != t || split.ending_right != t) return "split fails at n = " + std::to_string(n);
    }
    return std::string();
  });
  const std::uint64_t nd = std::min<std::uint64_t>(n_max, kPathDpCap);
  run(out, "DP lattice paths N_n = 2 T_n", upto(nd), [nd] {
    for (std::uint64_t n = 1; n <= nd; ++n) {
      if (count_paths_N(n) != 2 * walkup_T(n)) return "mismatch at n = " + std::to_string(n);
    }
    return std::string();
  });
  run(out, "sum_k M_{n,k} = N_n and M_{n,n} = T_n", upto(ne), [ne] {
    for (std::uint64_t n = 1; n <= ne; ++n) {
      BigInt sum = 0;
      for (std::uint64_t k = 0; k <= n; ++k) sum += multiset_count_M(n, k);
      if (sum != count_paths_N(n)) return "sum fails at n = " + std::to_string(n);
      if (multiset_count_M(n, n) != walkup_T(n)) return "M_{n,n} fails at n = " + std::to_string(n);
    }
    return std::string();
  });
  const std::uint64_t nb = std::min<std::uint64_t>(n_max, kBridgeEnumerationCap);
  run(out, "bridges with sigma = 0 mod n: N'_n = N_n", upto(nb) + " exhaustive, " + upto(nd) + " DP", [nb, nd] {
    for (std::uint64_t n = 1; n <= nb; ++n) {
      if (count_bridges_sigma_mod(n, CountMode::Exhaustive) != count_paths_N(n, CountMode::Dp)) {
        return "exhaustive mismatch at n = " + std::to_string(n);
      }
    }
    for (std::uint64_t n = 1; n <= nd; ++n) {
      if (count_bridges_sigma_mod(n) != 2 * walkup_T(n)) return "DP mismatch at n = " + std::to_string(n);
    }
    return std::string();
  });
}

void bijections_suite(std::vector<CheckResult>& out, std::uint64_t n_max) {
  const std::uint64_t nb = std::min<std::uint64_t>(n_max, 8);
  run(out, "bridge_to_path is a bijection with area(L) = sigma(B) + ell n", upto(nb), [nb] {
    for (std::uint64_t n = 1; n <= nb; ++n) {
      std::set<LatticePath> seen;
      std::string failure;
      for_each_bridge(n, [&](const Bridge& b) {
        if (!failure.empty()) return;
        const PathWithShift p = bridge_to_path(b);
        const auto lhs = static_cast<std::int64_t>(path_area(p.path));
        if (lhs != diamond_area(b) + p.ell * static_cast<std::int64_t>(n)) failure = "area identity fails for " + b.to_string();
        if (path_to_bridge(p.path) != b) failure = "round trip fails for " + b.to_string();
        seen.insert(p.path);
      });
      if (!failure.empty()) return failure;
      if (BigInt(seen.size()) != binomial(2 * n, n)) return "not onto at n = " + std::to_string(n);
    }
    return std::string();
  });
  run(out, "cyclic shift pairs biject onto sigma = 0 mod n bridges", upto(nb), [nb] {
    for (std::uint64_t n = 1; n <= nb; ++n) {
      const std::vector<ShiftedPair> pairs = enumerate_shifted_pairs(n);
      if (BigInt(pairs.size()) != 2 * walkup_T(n)) return "pair count != 2 T_n at n = " + std::to_string(n);
      std::set<Bridge> image;
      for (const ShiftedPair& p : pairs) image.insert(phi_shift(p));
      if (image.size() != pairs.size()) return "not injective at n = " + std::to_string(n);
      std::size_t targets = 0;
      std::string failure;
      const auto ni = static_cast<std::int64_t>(n);
      for_each_bridge(n, [&](const Bridge& w) {
        if (!failure.empty() || diamond_area(w) % ni != 0) return;
        ++targets;
        if (!image.contains(w)) failure = "missed " + w.to_string();
        const ShiftedPair back = phi_inverse(w);
        if (phi_shift(back) != w) failure = "inverse fails for " + w.to_string();
      });
      if (!failure.empty()) return failure;
      if (targets != image.size()) return "image size mismatch at n = " + std::to_string(n);
    }
    return std::string();
  });
}

void oracles_suite(std::vector<CheckResult>& out, std::uint64_t n_max) {
  const std::uint64_t nb = std::min<std::uint64_t>(n_max, kBridgeEnumerationCap);
  run(out, "B_n: DP, serial reference and enumeration agree", upto(nb), [nb] {
    const IntSeqTable dp = graphical_bridge_counts(nb);
    const IntSeqTable ref = reference::graphical_bridge_counts(nb);
    for (std::uint64_t n = 0; n <= nb; ++n) {
      if (dp.values[n] != ref.values[n]) return "reference mismatch at n = " + std::to_string(n);
      if (dp.values[n] != enumerate_graphical_bridges(n).size()) return "enumeration mismatch at n = " + std::to_string(n);
    }
    return std::string();
  });
  run(out, "irreducible counts by series inversion match enumeration", upto(nb), [nb] {
    const IntSeqTable irr = irreducible_counts(graphical_bridge_counts(nb));
    for (std::uint64_t n = 1; n <= nb; ++n) {
      std::uint64_t count = 0;
      for (const Bridge& b : enumerate_graphical_bridges(n)) count += is_irreducible(b);
      if (irr.values[n] != count) return "mismatch at n = " + std::to_string(n);
    }
    return std::string();
  });
  const std::uint64_t nm = std::min<std::uint64_t>(n_max, 8);
  run(out, "M_{n,k} matches submultiset enumeration", upto(nm) + ", k <= 8", [nm] {
    for (std::uint64_t n = 1; n <= nm; ++n) {
      for (std::uint64_t k = 0; k <= 8; ++k) {
        if (multiset_count_M(n, k) != reference::count_zero_sum_multisets(n, k)) {
          return "mismatch at (" + std::to_string(n) + ", " + std::to_string(k) + ")";
        }
      }
    }
    return std::string();
  });
  const std::uint64_t ng = std::min<std::uint64_t>(n_max, kGraphOracleCap);
  run(out, "G_n matches degree sequences of all graphs", upto(ng), [ng] {
    for (std::uint64_t n = 1; n <= ng; ++n) {
      if (count_graphical_sequences(n) != graph_degree_oracle(n).size()) return "mismatch at n = " + std::to_string(n);
    }
    return std::string();
  });
  const std::uint64_t np = std::min<std::uint64_t>(n_max, 9);
  run(out, "pruned G_n enumeration matches unpruned", upto(np), [np] {
    for (std::uint64_t n = 1; n <= np; ++n) {
      const BigInt pruned = count_graphical_sequences(n, true);
      if (pruned != count_graphical_sequences(n, false) || pruned != reference::count_graphical_sequences(n)) {
        return "mismatch at n = " + std::to_string(n);
      }
    }
    return std::string();
  });
}

}  // namespace

std::vector<CheckResult> run_suite(Suite suite, std::uint64_t n_max) {
  std::vector<CheckResult> out;
  const bool all = suite == Suite::All;
  if (all || suite == Suite::LogTransform) log_transform_suite(out, n_max);
  if (all || suite == Suite::Lemmas) lemmas_suite(out, n_max);
  if (all || suite == Suite::Bijections) bijections_suite(out, n_max);
  if (all || suite == Suite::Oracles) oracles_suite(out, n_max);
  return out;
}

}  // namespace gseq
