#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "gseq/bigint.hpp"

namespace gseq {

// Log transform a* of a sequence with a_0 = 1, from n a_n = sum_{i=1}^n a*_i a_{n-i}.
// The result is index-aligned with the input; entry 0 is 0.
// Over integers the recurrence needs no division, so a* stays integral.
template <class T>
std::vector<T> log_transform(std::span<const T> a) {
  if (a.empty() || a[0] != 1) throw std::invalid_argument("log_transform: a_0 must be 1");
  std::vector<T> star(a.size(), T(0));
  for (std::size_t n = 1; n < a.size(); ++n) {
    T acc = T(n) * a[n];
    for (std::size_t i = 1; i < n; ++i) acc -= star[i] * a[n - i];
    star[n] = std::move(acc);
  }
  return star;
}

// Inverse of log_transform: rebuilds a from a* with a_0 = 1. Needs division by n,
// so only meaningful over rationals or when the quotients are exact.
std::vector<Rational> exp_transform(std::span<const Rational> star, std::size_t length);

// Coefficients of B1(x) = 1 - 1/B(x) (irreducible graphical bridges).
// Requires B_0 = 1; entry 0 of the result is 0.
IntSeqTable irreducible_counts(const IntSeqTable& b);

// B^{(m)}_n = [x^n] B1(x)^m for m = 0..n (bridges with exactly m irreducible parts).
std::vector<BigInt> parts_counts(const IntSeqTable& b, std::uint64_t n);

// P(I_n = m) = B^{(m)}_n / B_n over m with nonzero mass.
std::map<std::uint64_t, Rational> parts_distribution(const IntSeqTable& b, std::uint64_t n);
std::map<std::uint64_t, Rational> parts_distribution(std::uint64_t n);

// E[1/I_n] = sum_m B^{(m)}_n / (m B_n).
Rational mean_inverse_parts(const IntSeqTable& b, std::uint64_t n);
Rational mean_inverse_parts(std::uint64_t n);

struct ConvergenceRow {
  std::uint64_t n;
  Rational ratio;  // B*_n / (n B_n)
  double value;
  double distance;  // |value - limit|
};

// B*_n / (n B_n) for n = 1..n_max against `limit` (exp(-2 xi)).
std::vector<ConvergenceRow> convergence_table(std::uint64_t n_max, double limit);

// Mass function of 1 + X, X negative binomial counting failures before the
// second success with success probability 1 - rho: P(1 + X = m) = m (1-rho)^2 rho^{m-1}.
double shifted_negative_binomial_pmf(std::uint64_t m, double rho);

// Total variation distance between a distribution on {1..} and the shifted
// negative binomial, including the latter's mass beyond the support.
double negative_binomial_tv_distance(const std::map<std::uint64_t, Rational>& dist, double rho);

// s_{floor(x n)} / (x^gamma s_n) for the scaled sequence s_n = 2 T_n / 4^n.
double regular_variation_ratio(std::uint64_t n, double x, double gamma);

}  // namespace gseq
