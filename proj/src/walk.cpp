#include "gseq/walk.hpp"

#include <stdexcept>

namespace gseq {

Walk::Walk(std::vector<std::int8_t> increments) : increments_(std::move(increments)) {
  for (std::int8_t d : increments_) {
    if (d != 1 && d != -1) throw std::invalid_argument("Walk: increments must be +1 or -1");
  }
}

Walk Walk::parse(std::string_view text) {
  std::vector<std::int8_t> inc;
  inc.reserve(text.size());
  for (char c : text) {
    if (c == 'U') {
      inc.push_back(1);
    } else if (c == 'D') {
      inc.push_back(-1);
    } else {
      throw std::invalid_argument(std::string("Walk::parse: unexpected character '") + c + "'");
    }
  }
  return Walk(std::move(inc));
}

std::string Walk::to_string() const {
  std::string out;
  out.reserve(increments_.size());
  for (std::int8_t d : increments_) out.push_back(d > 0 ? 'U' : 'D');
  return out;
}

std::int64_t Walk::position(std::size_t k) const {
  if (k > size()) throw std::out_of_range("Walk::position: index past end");
  std::int64_t x = 0;
  for (std::size_t i = 0; i < k; ++i) x += increments_[i];
  return x;
}

Walk Walk::slice(std::size_t first, std::size_t count) const {
  if (first + count > size()) throw std::out_of_range("Walk::slice: range past end");
  return Walk(std::vector<std::int8_t>(increments_.begin() + first, increments_.begin() + first + count));
}

}  // namespace gseq
