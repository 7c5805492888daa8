#include "gseq/bijections.hpp"

#include <stdexcept>
#include <string>

#include "gseq/bridges.hpp"

namespace gseq {

PathWithShift bridge_to_path(const Bridge& bridge) {
  if (!bridge.is_bridge()) throw std::invalid_argument("bridge_to_path: input is not a bridge");
  PathWithShift out;
  out.path.reserve(bridge.size());
  for (std::size_t parity : {0u, 1u}) {
    for (std::size_t i = parity; i < bridge.size(); i += 2) {
      const bool up = bridge[i] > 0;
      out.path.push_back(up ? Step::Up : Step::Right);
      if (parity == 0 && up) ++out.ell;
    }
  }
  return out;
}

Bridge path_to_bridge(const LatticePath& path) {
  std::size_t ups = 0;
  for (Step s : path) ups += s == Step::Up;
  if (path.size() % 2 != 0 || 2 * ups != path.size()) {
    throw std::invalid_argument("path_to_bridge: path must end at (n, n)");
  }
  const std::size_t n = path.size() / 2;
  std::vector<std::int8_t> inc(path.size());
  for (std::size_t j = 0; j < n; ++j) {
    inc[2 * j] = path[j] == Step::Up ? 1 : -1;
    inc[2 * j + 1] = path[n + j] == Step::Up ? 1 : -1;
  }
  return Bridge(std::move(inc));
}

Bridge rotate_left(const Bridge& bridge, std::size_t offset) {
  const std::size_t len = bridge.size();
  if (len == 0) return bridge;
  std::vector<std::int8_t> inc(len);
  for (std::size_t i = 0; i < len; ++i) inc[i] = static_cast<std::int8_t>(bridge[(i + offset) % len]);
  return Bridge(std::move(inc));
}

Bridge phi_shift(const ShiftedPair& pair) {
  if (!is_graphical(pair.bridge)) throw std::invalid_argument("phi_shift: bridge is not graphical");
  if (pair.bridge.empty()) throw std::invalid_argument("phi_shift: empty bridge");
  const std::size_t half_first = first_irreducible_length(pair.bridge) / 2;
  if (pair.shift >= half_first) {
    throw std::invalid_argument("phi_shift: shift " + std::to_string(pair.shift) +
                                " must be below " + std::to_string(half_first));
  }
  return rotate_left(pair.bridge, 2 * pair.shift);
}

ShiftedPair phi_inverse(const Bridge& target) {
  if (!target.is_bridge() || target.empty()) throw std::invalid_argument("phi_inverse: input must be a nonempty bridge");
  const auto n = static_cast<std::int64_t>(target.size() / 2);
  if (diamond_area(target) % n != 0) throw std::invalid_argument("phi_inverse: sigma is not divisible by n");
  std::vector<ShiftedPair> found;
  // phi rotates left by 2i, so a candidate source is the target rotated right
  for (std::size_t r = 0; r < target.size(); r += 2) {
    Bridge source = rotate_left(target, target.size() - r);
    if (!is_graphical(source)) continue;
    const std::size_t shift = r / 2;
    if (shift < first_irreducible_length(source) / 2) found.push_back({std::move(source), shift});
  }
  if (found.size() != 1) {
    throw std::logic_error("phi_inverse: " + std::to_string(found.size()) + " preimages for " + target.to_string());
  }
  return std::move(found.front());
}

std::vector<ShiftedPair> enumerate_shifted_pairs(std::uint64_t n) {
  std::vector<ShiftedPair> out;
  for (const Bridge& b : enumerate_graphical_bridges(n)) {
    if (b.empty()) continue;
    const std::size_t half_first = first_irreducible_length(b) / 2;
    for (std::size_t i = 0; i < half_first; ++i) out.push_back({b, i});
  }
  return out;
}

}  // namespace gseq
