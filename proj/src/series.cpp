#include "gseq/series.hpp"

#include <cmath>
#include <string>

#include "gseq/bridges.hpp"
#include "gseq/trees.hpp"

namespace gseq {

std::vector<Rational> exp_transform(std::span<const Rational> star, std::size_t length) {
  std::vector<Rational> a(length, Rational(0));
  if (length == 0) return a;
  a[0] = 1;
  for (std::size_t n = 1; n < length; ++n) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= n && i < star.size(); ++i) acc += star[i] * a[n - i];
    a[n] = acc / n;
  }
  return a;
}

IntSeqTable irreducible_counts(const IntSeqTable& b) {
  if (b.start != 0 || b.values.empty() || b.values[0] != 1) {
    throw std::invalid_argument("irreducible_counts: table must start at index 0 with B_0 = 1");
  }
  // B = 1 + B1 * B, so B1_n = B_n - sum_{i=1}^{n-1} B1_i B_{n-i}
  IntSeqTable out;
  out.values.assign(b.values.size(), BigInt(0));
  for (std::size_t n = 1; n < b.values.size(); ++n) {
    BigInt acc = b.values[n];
    for (std::size_t i = 1; i < n; ++i) acc -= out.values[i] * b.values[n - i];
    out.values[n] = std::move(acc);
  }
  return out;
}

std::vector<BigInt> parts_counts(const IntSeqTable& b, std::uint64_t n) {
  if (!b.contains(n)) throw std::out_of_range("parts_counts: B table does not reach n = " + std::to_string(n));
  const IntSeqTable irr = irreducible_counts(b);
  std::vector<BigInt> out(n + 1, BigInt(0));
  // power holds [x^j] B1(x)^m for j = 0..n
  std::vector<BigInt> power(n + 1, BigInt(0));
  power[0] = 1;
  if (n == 0) {
    out[0] = 1;
    return out;
  }
  for (std::uint64_t m = 1; m <= n; ++m) {
    std::vector<BigInt> next(n + 1, BigInt(0));
    for (std::uint64_t j = m; j <= n; ++j) {
      BigInt acc = 0;
      for (std::uint64_t i = 1; i <= j; ++i) {
        if (power[j - i] != 0 && irr.values[i] != 0) acc += irr.values[i] * power[j - i];
      }
      next[j] = std::move(acc);
    }
    power = std::move(next);
    out[m] = power[n];
  }
  return out;
}

std::map<std::uint64_t, Rational> parts_distribution(const IntSeqTable& b, std::uint64_t n) {
  const std::vector<BigInt> counts = parts_counts(b, n);
  const BigInt& total = b.at(n);
  std::map<std::uint64_t, Rational> out;
  for (std::uint64_t m = 0; m < counts.size(); ++m) {
    if (counts[m] != 0) out.emplace(m, Rational(counts[m], total));
  }
  return out;
}

std::map<std::uint64_t, Rational> parts_distribution(std::uint64_t n) {
  return parts_distribution(graphical_bridge_counts(n), n);
}

Rational mean_inverse_parts(const IntSeqTable& b, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("mean_inverse_parts: n must be positive");
  Rational acc = 0;
  for (const auto& [m, p] : parts_distribution(b, n)) acc += p / m;
  return acc;
}

Rational mean_inverse_parts(std::uint64_t n) { return mean_inverse_parts(graphical_bridge_counts(n), n); }

std::vector<ConvergenceRow> convergence_table(std::uint64_t n_max, double limit) {
  const IntSeqTable b = graphical_bridge_counts(n_max);
  const std::vector<BigInt> star = log_transform<BigInt>(b.values);
  std::vector<ConvergenceRow> rows;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    Rational ratio(star[n], BigInt(n) * b.values[n]);
    const double value = ratio.convert_to<double>();
    rows.push_back({n, std::move(ratio), value, std::abs(value - limit)});
  }
  return rows;
}

double shifted_negative_binomial_pmf(std::uint64_t m, double rho) {
  if (m == 0) return 0.0;
  return static_cast<double>(m) * (1.0 - rho) * (1.0 - rho) * std::pow(rho, static_cast<double>(m - 1));
}

double negative_binomial_tv_distance(const std::map<std::uint64_t, Rational>& dist, double rho) {
  std::uint64_t top = 0;
  for (const auto& [m, p] : dist) top = std::max(top, m);
  double diff = 0.0;
  double covered = 0.0;
  for (std::uint64_t m = 0; m <= top; ++m) {
    const auto it = dist.find(m);
    const double p = it == dist.end() ? 0.0 : it->second.convert_to<double>();
    const double q = shifted_negative_binomial_pmf(m, rho);
    diff += std::abs(p - q);
    covered += q;
  }
  return 0.5 * (diff + std::max(0.0, 1.0 - covered));
}

double regular_variation_ratio(std::uint64_t n, double x, double gamma) {
  const auto m = static_cast<std::uint64_t>(std::floor(x * static_cast<double>(n)));
  if (m == 0 || n == 0) throw std::invalid_argument("regular_variation_ratio: floor(x n) must be positive");
  auto scaled = [](std::uint64_t k) {
    return HighFloat(2 * walkup_T(k)) / boost::multiprecision::pow(HighFloat(4), static_cast<int>(k));
  };
  const HighFloat ratio = scaled(m) / (scaled(n) * boost::multiprecision::pow(HighFloat(x), HighFloat(gamma)));
  return ratio.convert_to<double>();
}

}  // namespace gseq
