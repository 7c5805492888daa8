#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gseq {

enum class Suite { LogTransform, Bijections, Lemmas, Oracles, All };

std::optional<Suite> parse_suite(std::string_view name);
const char* to_string(Suite suite);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs the identity batteries of a suite up to n_max. Each check clamps n_max
// to its own exhaustive or DP cap and says so in its detail string.
std::vector<CheckResult> run_suite(Suite suite, std::uint64_t n_max);

}  // namespace gseq
