#pragma once

#include <cstdint>
#include <string>

#include "gseq/bigint.hpp"

namespace gseq {

// value +- error contains the true quantity.
struct BoundedReal {
  HighFloat value = 0;
  HighFloat error = 0;

  bool contains(const HighFloat& x) const { return abs(x - value) <= error; }
};

// `digits` significant digits of the value; the bound in short scientific form.
std::string format_value(const BoundedReal& x, int digits);
std::string format_bound(const BoundedReal& x);

inline constexpr std::uint64_t kExactXiTerms = 64;
inline constexpr std::uint64_t kDefaultXiTerms = 10000;

// T_k / (k 4^k) as an exact rational.
Rational xi_term_exact(std::uint64_t k);

// T_k / (k 4^k) in 50-digit floating point.
HighFloat xi_term(std::uint64_t k);

// Tail bound sum_{k>N} T_k/(k 4^k) <= 2 / (3 sqrt(pi)) N^{-3/2}.
HighFloat xi_tail_bound(std::uint64_t terms);

// xi = sum_{k>=1} T_k / (k 4^k), summed to `terms` with the tail bound.
// The first kExactXiTerms terms are summed exactly and rounded once.
BoundedReal xi(std::uint64_t terms = kDefaultXiTerms);

BoundedReal gamma_three_quarters();

// Gamma(3/4) / (2^{5/2} pi).
BoundedReal gamma_prefactor();

// C = Gamma(3/4) / (2^{5/2} pi) exp(xi).
BoundedReal constant_C(const BoundedReal& xi_value);
BoundedReal constant_C();

// rho = 1 - exp(-2 xi).
BoundedReal rho_exact(const BoundedReal& xi_value);
BoundedReal rho_exact();

}  // namespace gseq
