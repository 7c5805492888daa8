#include <doctest.h>

#include <numeric>
#include <vector>

#include "gseq/numtheory.hpp"

using gseq::BigInt;

namespace {

std::uint64_t phi_by_gcd_scan(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
  return c;
}

std::vector<std::uint64_t> divisors_by_scan(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

std::vector<std::vector<BigInt>> pascal(std::size_t rows) {
  std::vector<std::vector<BigInt>> t(rows + 1);
  for (std::size_t n = 0; n <= rows; ++n) {
    t[n].assign(n + 1, BigInt(1));
    for (std::size_t k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
  }
  return t;
}

}  // namespace

TEST_CASE("euler_phi") {
  CHECK(gseq::euler_phi(1) == 1);
  CHECK(gseq::euler_phi(4) == phi_by_gcd_scan(4));
  CHECK(gseq::euler_phi(4) == 2);
  CHECK(gseq::euler_phi(12) == 4);
  for (std::uint64_t n = 1; n <= 300; ++n) CHECK(gseq::euler_phi(n) == phi_by_gcd_scan(n));
  CHECK_THROWS_AS(gseq::euler_phi(0), std::invalid_argument);
}

TEST_CASE("divisors") {
  CHECK(gseq::divisors(1) == std::vector<std::uint64_t>{1});
  CHECK(gseq::divisors(6) == std::vector<std::uint64_t>{1, 2, 3, 6});
  CHECK(gseq::divisors(9) == std::vector<std::uint64_t>{1, 3, 9});
  for (std::uint64_t n = 1; n <= 500; ++n) CHECK(gseq::divisors(n) == divisors_by_scan(n));
  CHECK_THROWS_AS(gseq::divisors(0), std::invalid_argument);
}

TEST_CASE("divisors closed under d -> n/d") {
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    const auto ds = gseq::divisors(n);
    for (std::uint64_t d : ds) CHECK(std::binary_search(ds.begin(), ds.end(), n / d));
  }
}

TEST_CASE("totient divisor sum recovers n") {
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    std::uint64_t s = 0;
    for (std::uint64_t d : gseq::divisors(n)) s += gseq::euler_phi(d);
    CHECK(s == n);
  }
}

TEST_CASE("binomial") {
  const auto t = pascal(100);
  CHECK(gseq::binomial(1, 1) == 1);
  CHECK(gseq::binomial(7, 4) == t[7][4]);
  CHECK(gseq::binomial(7, 4) == 35);
  CHECK(gseq::binomial(19, 10) == 92378);
  CHECK(gseq::binomial(3, 5) == 0);
  CHECK(gseq::binomial(0, 0) == 1);
  for (std::size_t n = 0; n <= 100; ++n) {
    for (std::size_t k = 0; k <= n; ++k) REQUIRE(gseq::binomial(n, k) == t[n][k]);
  }
  // beyond 64 bits
  CHECK(gseq::binomial(400, 200) == gseq::binomial(399, 199) + gseq::binomial(399, 200));
}
