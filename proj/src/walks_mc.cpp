#include "gseq/walks_mc.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/random/uniform_int_distribution.hpp>

namespace gseq {

const char* to_string(TauOutcome outcome) {
  switch (outcome) {
    case TauOutcome::AreaZero: return "AreaZero";
    case TauOutcome::AreaNegative: return "AreaNegative";
    case TauOutcome::Capped: return "Capped";
  }
  return "?";
}

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t worker) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(worker), static_cast<std::uint32_t>(worker >> 32)};
  return std::mt19937_64(seq);
}

TauOutcome simulate_tau(std::uint64_t seed, std::uint64_t horizon) {
  if (horizon == 0) throw std::invalid_argument("simulate_tau: horizon must be positive");
  LazyIncrementStream stream(make_engine(seed, 0));
  return simulate_tau(stream, horizon);
}

bool operator==(const McEstimate& a, const McEstimate& b) {
  const bool same_estimate = (std::isnan(a.estimate) && std::isnan(b.estimate)) || a.estimate == b.estimate;
  return same_estimate && a.samples == b.samples && a.std_error == b.std_error &&
         a.capped_fraction == b.capped_fraction && a.seed == b.seed && a.horizon == b.horizon &&
         a.workers == b.workers && a.tally.area_zero == b.tally.area_zero &&
         a.tally.area_negative == b.tally.area_negative && a.tally.capped == b.tally.capped;
}

TauTally run_tau_worker(std::uint64_t samples, std::uint64_t horizon, std::uint64_t seed,
                        unsigned worker, unsigned workers) {
  const std::uint64_t lo = samples * worker / workers;
  const std::uint64_t hi = samples * (worker + 1) / workers;
  LazyIncrementStream stream(make_engine(seed, worker));
  TauTally tally;
  for (std::uint64_t i = lo; i < hi; ++i) {
    switch (simulate_tau(stream, horizon)) {
      case TauOutcome::AreaZero: ++tally.area_zero; break;
      case TauOutcome::AreaNegative: ++tally.area_negative; break;
      case TauOutcome::Capped: ++tally.capped; break;
    }
  }
  return tally;
}

McEstimate summarize(const TauTally& tally, std::uint64_t samples, std::uint64_t horizon,
                     std::uint64_t seed, unsigned workers) {
  McEstimate est;
  est.samples = samples;
  est.seed = seed;
  est.horizon = horizon;
  est.workers = workers;
  est.tally = tally;
  const std::uint64_t stopped = tally.area_zero + tally.area_negative;
  est.capped_fraction = samples == 0 ? 0.0 : static_cast<double>(tally.capped) / static_cast<double>(samples);
  if (stopped == 0) {
    est.estimate = std::numeric_limits<double>::quiet_NaN();
    est.std_error = std::numeric_limits<double>::quiet_NaN();
    return est;
  }
  const double p = static_cast<double>(tally.area_zero) / static_cast<double>(stopped);
  est.estimate = p;
  est.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(stopped));
  return est;
}

McEstimate estimate_rho(std::uint64_t samples, std::uint64_t horizon, std::uint64_t seed, unsigned workers) {
  if (samples == 0) throw std::invalid_argument("estimate_rho: samples must be positive");
  if (horizon == 0) throw std::invalid_argument("estimate_rho: horizon must be positive");
  if (workers == 0) workers = 1;
  std::vector<TauTally> parts(workers);
#pragma omp parallel for schedule(dynamic, 1)
  for (unsigned w = 0; w < workers; ++w) parts[w] = run_tau_worker(samples, horizon, seed, w, workers);
  TauTally total;
  for (const TauTally& t : parts) total += t;
  return summarize(total, samples, horizon, seed, workers);
}

GraphicalBridgeSampler::GraphicalBridgeSampler(std::uint64_t n) : table_(n) {}

Bridge GraphicalBridgeSampler::operator()(std::mt19937_64& engine) const {
  const std::uint64_t n = table_.pairs();
  std::vector<std::int8_t> inc(2 * n);
  std::int64_t h = 0;
  std::int64_t s = 0;
  for (std::uint64_t k = n; k >= 1; --k) {
    // predecessor sigma is shared by every block ending at height h
    const std::int64_t ps = s - h / 2;
    struct Option {
      std::int8_t first, second;
      std::int64_t prev_h;
    };
    const Option options[] = {{1, 1, h - 2}, {1, -1, h}, {-1, 1, h}, {-1, -1, h + 2}};
    BigInt total = 0;
    for (const Option& o : options) total += table_.count(k - 1, o.prev_h, ps);
    if (total == 0) throw std::logic_error("GraphicalBridgeSampler: dead state");
    boost::random::uniform_int_distribution<BigInt> pick(0, total - 1);
    BigInt u = pick(engine);
    for (const Option& o : options) {
      const BigInt& w = table_.count(k - 1, o.prev_h, ps);
      if (u < w) {
        inc[2 * k - 2] = o.first;
        inc[2 * k - 1] = o.second;
        h = o.prev_h;
        s = ps;
        break;
      }
      u -= w;
    }
  }
  return Bridge(std::move(inc));
}

Bridge sample_uniform_graphical_bridge(std::uint64_t n, std::uint64_t seed) {
  const GraphicalBridgeSampler sampler(n);
  std::mt19937_64 engine = make_engine(seed, 0);
  return sampler(engine);
}

}  // namespace gseq
