#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "gseq/bridges.hpp"
#include "gseq/reference.hpp"
#include "gseq/trees.hpp"

using gseq::BigInt;
using gseq::Bridge;
using gseq::CountMode;
using gseq::Walk;

namespace {

// Positions X_0..X_len from scratch.
std::vector<std::int64_t> positions(const Walk& w) {
  std::vector<std::int64_t> x{0};
  for (std::size_t i = 0; i < w.size(); ++i) x.push_back(x.back() + w[i]);
  return x;
}

// sigma(X^{(2k)}) straight from the definition, k = 1..m.
std::vector<std::int64_t> naive_prefix_sigma(const Walk& w) {
  const auto x = positions(w);
  std::vector<std::int64_t> out;
  for (std::size_t k = 1; 2 * k <= w.size(); ++k) {
    std::int64_t s = 0;
    for (std::size_t i = 1; i <= k; ++i) s += x[2 * i];
    out.push_back(s / 2);
  }
  return out;
}

bool naive_graphical(const Walk& w) {
  if (w.size() % 2 || positions(w).back() != 0) return false;
  const auto s = naive_prefix_sigma(w);
  if (s.empty()) return true;
  return s.back() == 0 && std::all_of(s.begin(), s.end(), [](std::int64_t v) { return v >= 0; });
}

std::vector<Walk> all_walks(std::size_t len) {
  std::vector<Walk> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
    std::vector<std::int8_t> inc(len);
    for (std::size_t i = 0; i < len; ++i) inc[i] = ((mask >> (len - 1 - i)) & 1u) ? -1 : 1;
    out.emplace_back(std::move(inc));
  }
  return out;
}

}  // namespace

TEST_CASE("walk parsing and serialization") {
  const Walk w = Walk::parse("UUDD");
  CHECK(w.to_string() == "UUDD");
  CHECK(w.is_bridge());
  CHECK(w.position(2) == 2);
  CHECK_FALSE(Walk::parse("UUD").is_bridge());
  CHECK_THROWS_AS(Walk::parse("UXD"), std::invalid_argument);
  CHECK_THROWS_AS(Walk(std::vector<std::int8_t>{1, 0}), std::invalid_argument);
}

TEST_CASE("diamond_area") {
  CHECK(gseq::diamond_area(Walk::parse("UD")) == 0);
  CHECK(gseq::diamond_area(Walk::parse("UUDD")) == 1);
  CHECK(gseq::diamond_area(Walk::parse("UUUDDD")) == 2);
  CHECK(gseq::diamond_area(Walk()) == 0);
  CHECK_THROWS_AS(gseq::diamond_area(Walk::parse("UUD")), std::invalid_argument);
  for (const Walk& w : all_walks(10)) CHECK(gseq::prefix_diamond_areas(w) == naive_prefix_sigma(w));
}

TEST_CASE("lazify") {
  using gseq::LazyWalk;
  CHECK(gseq::lazify(Walk::parse("UD")) == LazyWalk{{0}});
  CHECK(gseq::lazify(Walk::parse("UUDD")) == LazyWalk{{1, -1}});
  CHECK(gseq::lazify(Walk::parse("UDDD")) == LazyWalk{{0, -1}});
  CHECK_THROWS_AS(gseq::lazify(Walk::parse("U")), std::invalid_argument);
}

TEST_CASE("sigma equals the area of the lazy version for all walks up to length 16") {
  for (std::size_t len = 0; len <= 16; len += 2) {
    for (const Walk& w : all_walks(len)) REQUIRE(gseq::diamond_area(w) == gseq::lazy_area(gseq::lazify(w)));
  }
}

TEST_CASE("is_graphical") {
  CHECK(gseq::is_graphical(Walk::parse("UD")));
  CHECK(gseq::is_graphical(Walk::parse("DU")));
  CHECK_FALSE(gseq::is_graphical(Walk::parse("UUDD")));
  CHECK_FALSE(gseq::is_graphical(Walk::parse("UUDDDU")));
  CHECK_FALSE(gseq::is_graphical(Walk::parse("UU")));
  CHECK(gseq::is_graphical(Walk()));
  for (std::size_t len = 0; len <= 14; len += 2) {
    for (const Walk& w : all_walks(len)) REQUIRE(gseq::is_graphical(w) == naive_graphical(w));
  }
}

TEST_CASE("the 8 graphical bridges of length 6") {
  std::vector<Bridge> expected;
  for (const Walk& w : all_walks(6)) {
    if (naive_graphical(w)) expected.push_back(w);
  }
  CHECK(expected.size() == 8);
  CHECK(gseq::enumerate_graphical_bridges(3) == expected);
}

TEST_CASE("is_irreducible") {
  CHECK(gseq::is_irreducible(Walk::parse("UD")));
  CHECK(gseq::is_irreducible(Walk::parse("DU")));
  CHECK_FALSE(gseq::is_irreducible(Walk::parse("UDUD")));
  CHECK_FALSE(gseq::is_irreducible(Walk::parse("UUDD")));
  // no length-4 or length-6 graphical bridge is irreducible
  for (std::uint64_t n : {2u, 3u}) {
    for (const Bridge& b : gseq::enumerate_graphical_bridges(n)) CHECK_FALSE(gseq::is_irreducible(b));
  }
  CHECK(gseq::is_irreducible(Walk::parse("UUDDDDUU")));
}

TEST_CASE("count_graphical_B") {
  CHECK(gseq::count_graphical_B(0) == 1);
  CHECK(gseq::count_graphical_B(4) == 17);
  CHECK(gseq::count_graphical_B(5) == 38);
  CHECK_THROWS_AS(gseq::count_graphical_B(61), std::invalid_argument);
  const auto table = gseq::graphical_bridge_counts(10);
  for (std::uint64_t n = 0; n <= 10; ++n) {
    CHECK(table.at(n) == gseq::enumerate_graphical_bridges(n).size());
    CHECK(table.at(n) == gseq::count_graphical_B(n));
  }
}

TEST_CASE("enumerate_graphical_bridges") {
  const auto one = gseq::enumerate_graphical_bridges(1);
  REQUIRE(one.size() == 2);
  CHECK(one[0].to_string() == "UD");
  CHECK(one[1].to_string() == "DU");
  CHECK(gseq::enumerate_graphical_bridges(5).size() == 38);
  CHECK(gseq::enumerate_graphical_bridges(9).size() == 1834);
  CHECK(gseq::enumerate_graphical_bridges(0).size() == 1);
  CHECK_THROWS_AS(gseq::enumerate_graphical_bridges(11), std::invalid_argument);
  const auto seven = gseq::enumerate_graphical_bridges(7);
  // +1 sorts before -1, which is the reverse of the U/D character order
  CHECK(std::is_sorted(seven.begin(), seven.end(),
                       [](const Bridge& a, const Bridge& b) { return a.to_string() > b.to_string(); }));
  for (const Bridge& b : seven) CHECK(naive_graphical(b));
}

TEST_CASE("count_bridges_sigma_mod") {
  for (auto mode : {CountMode::Exhaustive, CountMode::Dp}) {
    CHECK(gseq::count_bridges_sigma_mod(1, mode) == 2);
    CHECK(gseq::count_bridges_sigma_mod(5, mode) == 52);
    CHECK(gseq::count_bridges_sigma_mod(8, mode) == 1620);
  }
  for (std::uint64_t n = 1; n <= 10; ++n) {
    CHECK(gseq::count_bridges_sigma_mod(n, CountMode::Exhaustive) == 2 * gseq::walkup_T(n));
    CHECK(gseq::count_bridges_sigma_mod(n, CountMode::Dp) == 2 * gseq::walkup_T(n));
  }
  CHECK_THROWS_AS(gseq::count_bridges_sigma_mod(11, CountMode::Exhaustive), std::invalid_argument);
  CHECK_THROWS_AS(gseq::count_bridges_sigma_mod(0), std::invalid_argument);
}

TEST_CASE("bridges with every prefix sigma zero number 2^n") {
  for (std::uint64_t n = 1; n <= 10; ++n) {
    std::uint64_t flat = 0;
    for (const Bridge& b : gseq::enumerate_graphical_bridges(n)) {
      const auto s = gseq::prefix_diamond_areas(b);
      flat += std::all_of(s.begin(), s.end(), [](std::int64_t v) { return v == 0; });
    }
    CHECK(flat == (std::uint64_t{1} << n));
  }
}

TEST_CASE("irreducible_decomposition") {
  const auto parts = gseq::irreducible_decomposition(Walk::parse("UDUD"));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].to_string() == "UD");
  CHECK(parts[1].to_string() == "UD");
  CHECK(gseq::irreducible_decomposition(Walk::parse("UD")).size() == 1);
  CHECK(gseq::irreducible_decomposition(Walk()).empty());
  CHECK_THROWS_AS(gseq::irreducible_decomposition(Walk::parse("UUDD")), std::invalid_argument);
  CHECK(gseq::first_irreducible_length(Walk::parse("UD")) == 2);
  CHECK(gseq::first_irreducible_length(Walk::parse("UDUD")) == 2);
  CHECK_THROWS_AS(gseq::first_irreducible_length(Walk::parse("UUDD")), std::invalid_argument);

  for (std::uint64_t n = 1; n <= 9; ++n) {
    for (const Bridge& b : gseq::enumerate_graphical_bridges(n)) {
      const auto ps = gseq::irreducible_decomposition(b);
      std::string joined;
      for (const Bridge& p : ps) {
        CHECK(gseq::is_irreducible(p));
        joined += p.to_string();
      }
      CHECK(joined == b.to_string());
      CHECK(gseq::is_irreducible(b) == (ps.size() == 1));
      CHECK(gseq::first_irreducible_length(b) == ps.front().size());
    }
  }
}

TEST_CASE("length-10 graphical bridges: 32 flat, 2 irreducible, the other 4 in two parts") {
  const auto all = gseq::enumerate_graphical_bridges(5);
  REQUIRE(all.size() == 38);
  std::size_t flat = 0, irreducible = 0, other = 0;
  for (const Bridge& b : all) {
    const auto s = gseq::prefix_diamond_areas(b);
    if (std::all_of(s.begin(), s.end(), [](std::int64_t v) { return v == 0; })) {
      ++flat;
    } else if (gseq::is_irreducible(b)) {
      ++irreducible;
    } else {
      ++other;
      CHECK(gseq::irreducible_decomposition(b).size() == 2);
    }
  }
  CHECK(flat == 32);
  CHECK(irreducible == 2);
  CHECK(other == 4);
}

TEST_CASE("BridgeAreaTable bounds") {
  const gseq::BridgeAreaTable t(6);
  CHECK(t.height_bound(0) == 0);
  CHECK(t.height_bound(3) == 6);
  CHECK(t.area_bound(5) == 0);
  CHECK(t.count(6, 0, 0) == 92);
  CHECK(t.count(6, 2, 0) == 0);
  CHECK(t.count(2, 1, 0) == 0);
  CHECK(t.count(7, 0, 0) == 0);
}
