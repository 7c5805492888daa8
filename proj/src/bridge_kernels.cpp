#include <algorithm>
#include <stdexcept>
#include <string>

#include "gseq/bridges.hpp"
#include "gseq/kernels.hpp"

namespace gseq {

namespace {

const BigInt kZero = 0;

std::int64_t to_i64(std::uint64_t v) { return static_cast<std::int64_t>(v); }

}  // namespace

BridgeAreaTable::BridgeAreaTable(std::uint64_t n) : n_(n), layers_(n + 1) {
  if (n > kGraphicalDpCap) {
    throw std::invalid_argument("BridgeAreaTable: n must be <= " + std::to_string(kGraphicalDpCap));
  }
  const std::int64_t ni = to_i64(n);
  for (std::int64_t k = 0; k <= ni; ++k) {
    const std::int64_t r = ni - k;
    Layer& layer = layers_[k];
    layer.h_max = 2 * std::min(k, r);
    layer.s_max = std::max<std::int64_t>(0, std::min(k * (k + 1) / 2, r * (r - 1) / 2));
    layer.cells.assign(static_cast<std::size_t>((layer.h_max + 1) * (layer.s_max + 1)), BigInt(0));
  }
  layers_[0].cells[0] = 1;

  for (std::int64_t k = 1; k <= ni; ++k) {
    const Layer& prev = layers_[k - 1];
    Layer& cur = layers_[k];
    const std::int64_t heights = cur.h_max + 1;
    // Each target cell pulls from at most three predecessors: the two-step
    // blocks (+1,+1), (+1,-1)|(-1,+1), (-1,-1) with weights 1, 2, 1.
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t hi = 0; hi < heights; ++hi) {
      const std::int64_t h = 2 * hi - cur.h_max;
      for (std::int64_t s = 0; s <= cur.s_max; ++s) {
        const std::int64_t ps = s - h / 2;
        if (ps < 0 || ps > prev.s_max) continue;
        BigInt acc = 0;
        if (h - 2 >= -prev.h_max && h - 2 <= prev.h_max) acc += prev.cells[prev.index(h - 2, ps)];
        if (h >= -prev.h_max && h <= prev.h_max) acc += 2 * prev.cells[prev.index(h, ps)];
        if (h + 2 >= -prev.h_max && h + 2 <= prev.h_max) acc += prev.cells[prev.index(h + 2, ps)];
        cur.cells[cur.index(h, s)] = std::move(acc);
      }
    }
  }
}

const BigInt& BridgeAreaTable::count(std::uint64_t k, std::int64_t h, std::int64_t s) const {
  if (k > n_) return kZero;
  const Layer& layer = layers_[k];
  if (h < -layer.h_max || h > layer.h_max || (h % 2) != 0 || s < 0 || s > layer.s_max) return kZero;
  return layer.cells[layer.index(h, s)];
}

namespace kernels {

BigInt count_bridges_sigma_mod(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("count_bridges_sigma_mod: n must be positive");
  const std::int64_t ni = to_i64(n);
  // layer k: heights |h| <= 2 min(k, n-k), sigma residues 0..n-1
  std::int64_t prev_h = 0;
  std::vector<BigInt> prev(static_cast<std::size_t>(ni), BigInt(0));
  prev[0] = 1;
  auto at = [ni](const std::vector<BigInt>& layer, std::int64_t h_max, std::int64_t h,
                 std::int64_t s) -> const BigInt& {
    if (h < -h_max || h > h_max) return kZero;
    return layer[static_cast<std::size_t>((h + h_max) / 2 * ni + s)];
  };
  for (std::int64_t k = 1; k <= ni; ++k) {
    const std::int64_t h_max = 2 * std::min(k, ni - k);
    std::vector<BigInt> cur(static_cast<std::size_t>((h_max + 1) * ni), BigInt(0));
    const std::int64_t cells = (h_max + 1) * ni;
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < cells; ++c) {
      const std::int64_t h = 2 * (c / ni) - h_max;
      const std::int64_t s = c % ni;
      const std::int64_t ps = (((s - h / 2) % ni) + ni) % ni;
      BigInt acc = at(prev, prev_h, h - 2, ps);
      acc += 2 * at(prev, prev_h, h, ps);
      acc += at(prev, prev_h, h + 2, ps);
      cur[static_cast<std::size_t>(c)] = std::move(acc);
    }
    prev = std::move(cur);
    prev_h = h_max;
  }
  return prev[0];
}

BigInt count_paths_mod_area(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("count_paths_mod_area: n must be positive");
  const std::size_t nn = n;
  // diagonal d holds cells (x, d - x); each cell is a residue vector of length n
  std::vector<std::vector<BigInt>> prev(nn + 1);
  prev[0].assign(nn, BigInt(0));
  prev[0][0] = 1;
  for (std::size_t d = 1; d <= 2 * nn; ++d) {
    std::vector<std::vector<BigInt>> cur(nn + 1);
    const std::size_t x_lo = d > nn ? d - nn : 0;
    const std::size_t x_hi = std::min(d, nn);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t x = x_lo; x <= x_hi; ++x) {
      const std::size_t y = d - x;
      std::vector<BigInt> cell(nn, BigInt(0));
      if (y >= 1 && !prev[x].empty()) {
        for (std::size_t r = 0; r < nn; ++r) cell[r] += prev[x][r];
      }
      if (x >= 1 && !prev[x - 1].empty()) {
        const std::size_t shift = y % nn;
        for (std::size_t r = 0; r < nn; ++r) cell[(r + shift) % nn] += prev[x - 1][r];
      }
      cur[x] = std::move(cell);
    }
    prev = std::move(cur);
  }
  return prev[nn][0];
}

}  // namespace kernels

}  // namespace gseq
