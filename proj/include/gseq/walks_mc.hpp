#pragma once

#include <cstdint>
#include <random>

#include "gseq/bridges.hpp"

namespace gseq {

enum class TauOutcome { AreaZero, AreaNegative, Capped };

const char* to_string(TauOutcome outcome);

// Lazy increments from a 64-bit engine, two bits per step:
// 00 -> -1, 11 -> +1, otherwise 0.
class LazyIncrementStream {
 public:
  explicit LazyIncrementStream(std::mt19937_64 engine) : engine_(std::move(engine)) {}

  int operator()() {
    if (left_ == 0) {
      bits_ = engine_();
      left_ = 32;
    }
    const unsigned pair = static_cast<unsigned>(bits_ & 3u);
    bits_ >>= 2;
    --left_;
    return static_cast<int>(pair == 3u) - static_cast<int>(pair == 0u);
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t bits_ = 0;
  int left_ = 0;
};

// Engine for sub-stream `worker` of `seed`.
std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t worker);

// Runs the lazy walk Y with area A_k = Y_1 + ... + Y_k until the first k >= 1
// with Y_k = 0 and A_k <= 0, or until `horizon` steps have been taken.
template <class NextIncrement>
TauOutcome simulate_tau(NextIncrement&& next, std::uint64_t horizon) {
  std::int64_t y = 0;
  std::int64_t area = 0;
  for (std::uint64_t k = 0; k < horizon; ++k) {
    y += next();
    area += y;
    if (y == 0 && area <= 0) return area == 0 ? TauOutcome::AreaZero : TauOutcome::AreaNegative;
  }
  return TauOutcome::Capped;
}

TauOutcome simulate_tau(std::uint64_t seed, std::uint64_t horizon);

struct TauTally {
  std::uint64_t area_zero = 0;
  std::uint64_t area_negative = 0;
  std::uint64_t capped = 0;

  TauTally& operator+=(const TauTally& o) {
    area_zero += o.area_zero;
    area_negative += o.area_negative;
    capped += o.capped;
    return *this;
  }
};

struct McEstimate {
  double estimate = 0.0;  // NaN when every run was capped
  std::uint64_t samples = 0;
  double std_error = 0.0;
  double capped_fraction = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t horizon = 0;
  unsigned workers = 1;
  TauTally tally;

  friend bool operator==(const McEstimate& a, const McEstimate& b);
};

// Worker w of `workers` simulates samples [w*S/W, (w+1)*S/W) on its own sub-stream.
TauTally run_tau_worker(std::uint64_t samples, std::uint64_t horizon, std::uint64_t seed,
                        unsigned worker, unsigned workers);

McEstimate summarize(const TauTally& tally, std::uint64_t samples, std::uint64_t horizon,
                     std::uint64_t seed, unsigned workers);

// Fraction of AreaZero among runs that stopped before the horizon.
// Deterministic for fixed (samples, horizon, seed, workers).
McEstimate estimate_rho(std::uint64_t samples, std::uint64_t horizon, std::uint64_t seed,
                        unsigned workers = 1);

// Exactly uniform graphical bridges of length 2n, drawn backwards through the
// prefix-count table.
class GraphicalBridgeSampler {
 public:
  explicit GraphicalBridgeSampler(std::uint64_t n);

  std::uint64_t pairs() const { return table_.pairs(); }
  const BigInt& population() const { return table_.count(table_.pairs(), 0, 0); }

  Bridge operator()(std::mt19937_64& engine) const;

 private:
  BridgeAreaTable table_;
};

Bridge sample_uniform_graphical_bridge(std::uint64_t n, std::uint64_t seed);

}  // namespace gseq
