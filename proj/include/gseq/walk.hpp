#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gseq {

// Walk with +1/-1 increments started at 0. Serialized over {U, D}.
class Walk {
 public:
  Walk() = default;
  explicit Walk(std::vector<std::int8_t> increments);

  static Walk parse(std::string_view text);

  std::string to_string() const;

  std::size_t size() const { return increments_.size(); }
  bool empty() const { return increments_.empty(); }
  int operator[](std::size_t i) const { return increments_[i]; }
  std::span<const std::int8_t> increments() const { return increments_; }

  // Position after the first k increments.
  std::int64_t position(std::size_t k) const;
  std::int64_t endpoint() const { return position(size()); }

  // Even length and endpoint zero.
  bool is_bridge() const { return size() % 2 == 0 && endpoint() == 0; }

  Walk slice(std::size_t first, std::size_t count) const;

  friend bool operator==(const Walk&, const Walk&) = default;
  friend auto operator<=>(const Walk&, const Walk&) = default;

 private:
  std::vector<std::int8_t> increments_;
};

using Bridge = Walk;

// Increments in {-1, 0, +1}.
struct LazyWalk {
  std::vector<std::int8_t> increments;

  friend bool operator==(const LazyWalk&, const LazyWalk&) = default;
};

}  // namespace gseq
