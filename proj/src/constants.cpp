#include "gseq/constants.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "gseq/numtheory.hpp"
#include "gseq/trees.hpp"

namespace gseq {

namespace {

// Relative rounding allowance per floating-point term at 50 digits.
const HighFloat kTermRounding("1e-40");

HighFloat pi() { return boost::math::constants::pi<HighFloat>(); }

}  // namespace

std::string format_value(const BoundedReal& x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << x.value;
  return os.str();
}

std::string format_bound(const BoundedReal& x) {
  std::ostringstream os;
  os.precision(2);
  os << std::scientific << x.error.convert_to<double>();
  return os.str();
}

Rational xi_term_exact(std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("xi_term_exact: k must be positive");
  return Rational(walkup_T(k), BigInt(k) * (BigInt(1) << static_cast<unsigned>(2 * k)));
}

HighFloat xi_term(std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("xi_term: k must be positive");
  // T_k / (k 4^k) = (1 / k^2) sum_{d|k} r_d 4^{d-k} phi(k/d) with r_d = C(2d-1, d) / 4^d
  HighFloat r = HighFloat(1) / 4;
  std::uint64_t at = 1;
  HighFloat sum = 0;
  for (std::uint64_t d : divisors(k)) {
    for (; at < d; ++at) r = r * (2 * at + 1) / (2 * (at + 1));
    sum += r * ldexp(HighFloat(1), -2 * static_cast<int>(k - d)) * euler_phi(k / d);
  }
  return sum / (HighFloat(k) * k);
}

HighFloat xi_tail_bound(std::uint64_t terms) {
  if (terms == 0) throw std::invalid_argument("xi_tail_bound: terms must be positive");
  return HighFloat(2) / (3 * sqrt(pi())) / pow(HighFloat(terms), HighFloat(1.5));
}

BoundedReal xi(std::uint64_t terms) {
  if (terms == 0) throw std::invalid_argument("xi: terms must be positive");
  const std::uint64_t exact_terms = std::min(terms, kExactXiTerms);
  Rational exact = 0;
  for (std::uint64_t k = 1; k <= exact_terms; ++k) exact += xi_term_exact(k);
  HighFloat value(exact);
  HighFloat rounding = abs(value) * kTermRounding;

  if (terms > exact_terms) {
    // r_d = C(2d-1, d) / 4^d for all d, by r_{d+1} = r_d (2d+1) / (2(d+1))
    std::vector<HighFloat> r(terms + 1);
    r[1] = HighFloat(1) / 4;
    for (std::uint64_t d = 1; d < terms; ++d) r[d + 1] = r[d] * (2 * d + 1) / (2 * (d + 1));
    std::vector<std::uint64_t> phi(terms + 1);
    for (std::uint64_t m = 0; m <= terms; ++m) phi[m] = m;
    for (std::uint64_t p = 2; p <= terms; ++p) {
      if (phi[p] != p) continue;
      for (std::uint64_t m = p; m <= terms; m += p) phi[m] -= phi[m] / p;
    }
    std::vector<HighFloat> sums(terms + 1, HighFloat(0));
    for (std::uint64_t d = 1; d <= terms; ++d) {
      for (std::uint64_t k = std::max(d, (exact_terms / d + 1) * d); k <= terms; k += d) {
        sums[k] += r[d] * ldexp(HighFloat(1), -2 * static_cast<int>(k - d)) * phi[k / d];
      }
    }
    for (std::uint64_t k = exact_terms + 1; k <= terms; ++k) {
      const HighFloat term = sums[k] / (HighFloat(k) * k);
      value += term;
      rounding += term * kTermRounding * k;
    }
  }
  return {value, xi_tail_bound(terms) + rounding};
}

BoundedReal gamma_three_quarters() {
  const HighFloat g = boost::math::tgamma(HighFloat(3) / 4);
  return {g, g * kTermRounding};
}

BoundedReal gamma_prefactor() {
  const BoundedReal g = gamma_three_quarters();
  const HighFloat denom = pow(HighFloat(2), HighFloat(2.5)) * pi();
  const HighFloat v = g.value / denom;
  return {v, g.error / denom + abs(v) * kTermRounding};
}

BoundedReal constant_C(const BoundedReal& xi_value) {
  const BoundedReal p = gamma_prefactor();
  const HighFloat e = exp(xi_value.value);
  const HighFloat e_hi = exp(xi_value.value + xi_value.error);
  const HighFloat v = p.value * e;
  // |exp(x) - exp(x')| <= exp(x + err) - exp(x) for |x - x'| <= err
  const HighFloat err = p.value * (e_hi - e) + p.error * e_hi + abs(v) * kTermRounding;
  return {v, err};
}

BoundedReal constant_C() { return constant_C(xi()); }

BoundedReal rho_exact(const BoundedReal& xi_value) {
  const HighFloat e = exp(-2 * xi_value.value);
  const HighFloat e_lo = exp(-2 * (xi_value.value - xi_value.error));
  return {1 - e, (e_lo - e) + kTermRounding};
}

BoundedReal rho_exact() { return rho_exact(xi()); }

}  // namespace gseq
