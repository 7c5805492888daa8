#include <doctest.h>

#include "gseq/bridges.hpp"
#include "gseq/kernels.hpp"
#include "gseq/reference.hpp"

TEST_CASE("bridge area table matches the sparse reference DP") {
  const auto fast = gseq::graphical_bridge_counts(40);
  const auto slow = gseq::reference::graphical_bridge_counts(40);
  REQUIRE(fast.values.size() == slow.values.size());
  for (std::uint64_t n = fast.start; n < fast.end(); ++n) CHECK(fast.at(n) == slow.at(n));
}

TEST_CASE("sigma mod n kernel matches the reference") {
  for (std::uint64_t n = 1; n <= 40; ++n)
    CHECK(gseq::kernels::count_bridges_sigma_mod(n) == gseq::reference::count_bridges_sigma_mod(n));
}

TEST_CASE("path area kernel matches the reference") {
  for (std::uint64_t n = 1; n <= 40; ++n)
    CHECK(gseq::kernels::count_paths_mod_area(n) == gseq::reference::count_paths_mod_area(n));
}

TEST_CASE("degree sequence kernel matches the reference") {
  for (std::uint64_t n = 1; n <= 10; ++n) {
    const auto expected = gseq::reference::count_graphical_sequences(n);
    CHECK(gseq::kernels::count_graphical_sequences(n, true) == expected);
    CHECK(gseq::kernels::count_graphical_sequences(n, false) == expected);
  }
}
