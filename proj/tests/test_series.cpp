#include <doctest.h>

#include <cmath>
#include <map>
#include <vector>

#include "gseq/bridges.hpp"
#include "gseq/constants.hpp"
#include "gseq/series.hpp"
#include "gseq/trees.hpp"

using gseq::BigInt;
using gseq::IntSeqTable;
using gseq::Rational;

namespace {

const IntSeqTable& b_table() {
  static const IntSeqTable t = gseq::graphical_bridge_counts(60);
  return t;
}

// Irreducible bridge counts by filtering the enumeration.
std::uint64_t irreducible_by_enumeration(std::uint64_t n) {
  std::uint64_t c = 0;
  for (const auto& b : gseq::enumerate_graphical_bridges(n)) c += gseq::is_irreducible(b);
  return c;
}

// Part-count histogram by enumeration.
std::map<std::uint64_t, std::uint64_t> parts_by_enumeration(std::uint64_t n) {
  std::map<std::uint64_t, std::uint64_t> h;
  for (const auto& b : gseq::enumerate_graphical_bridges(n)) ++h[gseq::irreducible_decomposition(b).size()];
  return h;
}

}  // namespace

TEST_CASE("log_transform of simple sequences") {
  const std::vector<Rational> ones(8, Rational(1));
  const auto star = gseq::log_transform<Rational>(ones);
  for (std::size_t n = 1; n < 8; ++n) CHECK(star[n] == 1);

  const Rational c(3, 7);
  std::vector<Rational> geo{1};
  for (int i = 1; i < 10; ++i) geo.push_back(geo.back() * c);
  const auto gstar = gseq::log_transform<Rational>(geo);
  Rational cn = 1;
  for (std::size_t n = 1; n < 10; ++n) {
    cn *= c;
    CHECK(gstar[n] == cn);
  }

  const std::vector<Rational> bad{2, 1};
  CHECK_THROWS_AS(gseq::log_transform<Rational>(bad), std::invalid_argument);
}

TEST_CASE("exp_transform inverts log_transform") {
  std::vector<Rational> a{1};
  for (int i = 1; i < 12; ++i) a.push_back(Rational(i * i + 1, i + 2));
  const auto star = gseq::log_transform<Rational>(a);
  CHECK(gseq::exp_transform(star, a.size()) == a);
}

TEST_CASE("log transform of B_n is 2 T_n") {
  const IntSeqTable& b = b_table();
  // n = 4 worked by hand: 4 * 17 = 2*8 + 4*4 + 8*2 + 20*1
  CHECK(4 * b.at(4) == 2 * b.at(3) + 4 * b.at(2) + 8 * b.at(1) + 20 * b.at(0));
  const auto star = gseq::log_transform<BigInt>(b.values);
  for (std::uint64_t n = 1; n <= 60; ++n) {
    CHECK(star[n] == 2 * gseq::walkup_T(n));
    BigInt rhs = 0;
    for (std::uint64_t i = 1; i <= n; ++i) rhs += 2 * gseq::walkup_T(i) * b.at(n - i);
    CHECK(BigInt(n) * b.at(n) == rhs);
  }
  // scaled by 4^n over rationals
  std::vector<Rational> scaled;
  for (std::uint64_t n = 0; n <= 12; ++n) scaled.emplace_back(b.at(n), BigInt(1) << (2 * n));
  const auto sstar = gseq::log_transform<Rational>(scaled);
  for (std::uint64_t n = 1; n <= 12; ++n) CHECK(sstar[n] == Rational(2 * gseq::walkup_T(n), BigInt(1) << (2 * n)));
}

TEST_CASE("irreducible_counts") {
  const IntSeqTable irr = gseq::irreducible_counts(b_table());
  CHECK(irr.at(1) == 2);
  CHECK(irr.at(2) == 0);
  CHECK(irr.at(5) == 2);
  for (std::uint64_t n = 1; n <= 10; ++n) CHECK(irr.at(n) == irreducible_by_enumeration(n));
  IntSeqTable bad;
  bad.values = {2, 1};
  CHECK_THROWS_AS(gseq::irreducible_counts(bad), std::invalid_argument);
}

TEST_CASE("parts_distribution") {
  const auto d1 = gseq::parts_distribution(1);
  CHECK(d1 == std::map<std::uint64_t, Rational>{{1, Rational(1)}});
  const auto d4 = gseq::parts_distribution(4);
  CHECK(d4 == std::map<std::uint64_t, Rational>{{1, Rational(1, 17)}, {4, Rational(16, 17)}});
  const auto d5 = gseq::parts_distribution(5);
  CHECK(d5.at(1) == Rational(2, 38));
  Rational total = 0;
  for (const auto& [m, p] : d5) total += p;
  CHECK(total == 1);

  for (std::uint64_t n = 1; n <= 9; ++n) {
    const auto d = gseq::parts_distribution(b_table(), n);
    for (const auto& [m, c] : parts_by_enumeration(n)) CHECK(d.at(m) == Rational(BigInt(c), b_table().at(n)));
  }
}

TEST_CASE("part counts sum to B_n") {
  for (std::uint64_t n = 1; n <= 40; ++n) {
    BigInt s = 0;
    for (const BigInt& c : gseq::parts_counts(b_table(), n)) s += c;
    CHECK(s == b_table().at(n));
  }
}

TEST_CASE("mean_inverse_parts") {
  CHECK(gseq::mean_inverse_parts(1) == 1);
  CHECK(gseq::mean_inverse_parts(4) == Rational(5, 17));
  CHECK(gseq::mean_inverse_parts(4) == Rational(20, 68));
  CHECK(gseq::mean_inverse_parts(9) == Rational(2 * 2704, 9 * 1834));
  for (std::uint64_t n = 1; n <= 40; ++n) {
    CHECK(gseq::mean_inverse_parts(b_table(), n) == Rational(2 * gseq::walkup_T(n), BigInt(n) * b_table().at(n)));
  }
}

TEST_CASE("convergence_table") {
  const double limit = std::exp(-2 * gseq::xi().value.convert_to<double>());
  const auto rows = gseq::convergence_table(40, limit);
  CHECK(rows[0].ratio == 1);
  CHECK(rows[8].ratio == Rational(5408, 9 * 1834));
  CHECK(rows[8].value == doctest::Approx(0.3276).epsilon(1e-3));
  CHECK(rows[39].distance < rows[9].distance);
  for (std::size_t i = 10; i < rows.size(); ++i) CHECK(rows[i].distance < rows[i - 1].distance);
}

TEST_CASE("negative binomial comparison") {
  const double rho = gseq::rho_exact().value.convert_to<double>();
  double mass = 0;
  for (std::uint64_t m = 1; m < 400; ++m) mass += gseq::shifted_negative_binomial_pmf(m, rho);
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(gseq::shifted_negative_binomial_pmf(0, rho) == 0.0);

  const double tv10 = gseq::negative_binomial_tv_distance(gseq::parts_distribution(b_table(), 10), rho);
  const double tv40 = gseq::negative_binomial_tv_distance(gseq::parts_distribution(b_table(), 40), rho);
  CHECK(tv40 < tv10);

  // identical distributions are at distance zero up to the truncated tail
  std::map<std::uint64_t, Rational> nb;
  for (std::uint64_t m = 1; m <= 200; ++m) nb[m] = Rational(gseq::shifted_negative_binomial_pmf(m, 0.5));
  CHECK(gseq::negative_binomial_tv_distance(nb, 0.5) < 1e-12);
}

TEST_CASE("regular variation of 2 T_n / 4^n with index -3/2") {
  // drifts toward 1 as n grows
  const double at50 = std::abs(gseq::regular_variation_ratio(50, 2.0, -1.5) - 1);
  const double at400 = std::abs(gseq::regular_variation_ratio(400, 2.0, -1.5) - 1);
  CHECK(at400 < at50);
  CHECK(at400 < 0.01);
  CHECK(gseq::regular_variation_ratio(100, 1.0, -1.5) == doctest::Approx(1.0));
}
