// gseq: tables, identity checks, constants and Monte Carlo runs for
// graphical bridges, plane-tree counts and graphical degree sequences.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "gseq/bridges.hpp"
#include "gseq/constants.hpp"
#include "gseq/graphseq.hpp"
#include "gseq/series.hpp"
#include "gseq/trees.hpp"
#include "gseq/verify.hpp"
#include "gseq/walks_mc.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Row {
  std::string n;
  std::string k;  // only for the M table
  std::string value;
};

std::vector<Row> build_table(const std::string& which, std::uint64_t n_max) {
  auto cap = [&](std::uint64_t limit) {
    if (n_max > limit) {
      throw UsageError("tables " + which + ": n_max " + std::to_string(n_max) + " exceeds cap " + std::to_string(limit));
    }
  };
  std::vector<Row> rows;
  if (which == "T") {
    cap(2000);
    for (std::uint64_t n = 1; n <= n_max; ++n) rows.push_back({std::to_string(n), "", gseq::walkup_T(n).str()});
  } else if (which == "B") {
    cap(gseq::kGraphicalDpCap);
    const gseq::IntSeqTable b = gseq::graphical_bridge_counts(n_max);
    for (std::uint64_t n = 0; n <= n_max; ++n) rows.push_back({std::to_string(n), "", b.values[n].str()});
  } else if (which == "M") {
    cap(500);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      for (std::uint64_t k = 0; k <= n; ++k) {
        rows.push_back({std::to_string(n), std::to_string(k), gseq::multiset_count_M(n, k).str()});
      }
    }
  } else if (which == "N") {
    cap(gseq::kPathDpCap);
    for (std::uint64_t n = 1; n <= n_max; ++n) rows.push_back({std::to_string(n), "", gseq::count_paths_N(n).str()});
  } else if (which == "Nprime") {
    cap(gseq::kSigmaModDpCap);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      rows.push_back({std::to_string(n), "", gseq::count_bridges_sigma_mod(n).str()});
    }
  } else if (which == "G") {
    cap(gseq::kSequenceCountCap);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      rows.push_back({std::to_string(n), "", gseq::count_graphical_sequences(n).str()});
    }
  } else if (which == "irreducible") {
    cap(gseq::kGraphicalDpCap);
    const gseq::IntSeqTable irr = gseq::irreducible_counts(gseq::graphical_bridge_counts(n_max));
    for (std::uint64_t n = 1; n <= n_max; ++n) rows.push_back({std::to_string(n), "", irr.values[n].str()});
  } else {
    throw UsageError("tables: unknown sequence '" + which + "' (T, B, M, N, Nprime, G, irreducible)");
  }
  return rows;
}

void print_table(const std::string& which, const std::vector<Row>& rows, const std::string& format) {
  const bool two_index = which == "M";
  if (format == "json") {
    json out = json::array();
    for (const Row& r : rows) {
      json row;
      row["n"] = std::stoull(r.n);
      if (two_index) row["k"] = std::stoull(r.k);
      row["value"] = r.value;
      out.push_back(row);
    }
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << (two_index ? "n,k,value\n" : "n,value\n");
  for (const Row& r : rows) {
    std::cout << r.n << ",";
    if (two_index) std::cout << r.k << ",";
    std::cout << r.value << "\n";
  }
}

json to_json(const gseq::McEstimate& e) {
  json out;
  out["estimate"] = std::isnan(e.estimate) ? json(nullptr) : json(e.estimate);
  out["samples"] = e.samples;
  out["std_error"] = std::isnan(e.std_error) ? json(nullptr) : json(e.std_error);
  out["capped_fraction"] = e.capped_fraction;
  out["seed"] = e.seed;
  out["horizon"] = e.horizon;
  out["workers"] = e.workers;
  out["area_zero"] = e.tally.area_zero;
  out["area_negative"] = e.tally.area_negative;
  out["capped"] = e.tally.capped;
  return out;
}

json bounded(const gseq::BoundedReal& x, int digits) {
  return json{{"value", gseq::format_value(x, digits)}, {"bound", gseq::format_bound(x)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counts and checks for graphical bridges, plane trees and graphical sequences"};
  app.require_subcommand(1);

  std::string which = "B";
  std::uint64_t n_max = 9;
  std::string suite_name = "all";
  std::uint64_t samples = 100000;
  std::uint64_t horizon = 1000000;
  std::uint64_t seed = 42;
  unsigned workers = 1;
  int digits = 10;
  std::uint64_t terms = gseq::kDefaultXiTerms;
  std::string format;

  auto add_format = [&](CLI::App* sub, const std::string& def) {
    format = def;
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  };

  auto* tables = app.add_subcommand("tables", "Exact sequence tables as CSV (n,value)");
  tables->add_option("which,--which", which, "T, B, M, N, Nprime, G or irreducible");
  tables->add_option("n_max,--n-max", n_max, "Largest index");

  auto* verify = app.add_subcommand("verify", "Run identity batteries; exit 1 on any failure");
  verify->add_option("suite,--suite", suite_name, "logtransform, bijections, lemmas, oracles or all");
  verify->add_option("n_max,--n-max", n_max, "Largest n (clamped per check)");

  auto* constants = app.add_subcommand("constants", "xi, C, rho and Gamma(3/4) with error bounds (JSON)");
  constants->add_option("--digits", digits, "Significant digits")->check(CLI::Range(1, 12));
  constants->add_option("--terms", terms, "Series terms for xi")->check(CLI::PositiveNumber);

  auto* rho_mc = app.add_subcommand("rho-mc", "Monte Carlo estimate of rho from the lazy walk (JSON)");
  rho_mc->add_option("--samples", samples)->check(CLI::PositiveNumber);
  rho_mc->add_option("--horizon", horizon)->check(CLI::PositiveNumber);
  rho_mc->add_option("--seed", seed);
  rho_mc->add_option("--workers", workers)->envname("GSEQ_WORKERS")->check(CLI::PositiveNumber);

  auto* ratio = app.add_subcommand("ratio", "n, G_n, n^{3/4} G_n / 4^n as CSV");
  ratio->add_option("n_max,--n-max", n_max);

  auto* convergence = app.add_subcommand("convergence", "B*_n / (n B_n) against exp(-2 xi) as CSV");
  convergence->add_option("n_max,--n-max", n_max);

  std::uint64_t sample_n = 5;
  auto* sample = app.add_subcommand("sample", "Uniform graphical bridges as U/D strings");
  sample->add_option("n,--n", sample_n, "Half length");
  sample->add_option("--count", samples, "Number of bridges")->check(CLI::PositiveNumber);
  sample->add_option("--seed", seed);

  for (auto* sub : {tables, ratio, convergence}) add_format(sub, "csv");
  for (auto* sub : {verify, constants, rho_mc}) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json"}));
  }
  format.clear();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) == 0 ? kExitPass : kExitUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (format.empty()) format = (*tables || *ratio || *convergence) ? "csv" : "json";

  try {
    if (*tables) {
      print_table(which, build_table(which, n_max), format);
      return kExitPass;
    }

    if (*verify) {
      const auto suite = gseq::parse_suite(suite_name);
      if (!suite) throw UsageError("verify: unknown suite '" + suite_name + "'");
      const auto t0 = std::chrono::steady_clock::now();
      const auto results = gseq::run_suite(*suite, n_max);
      const auto t1 = std::chrono::steady_clock::now();
      bool ok = true;
      json report;
      report["command"] = "verify";
      report["parameters"] = {{"suite", suite_name}, {"n_max", n_max}};
      json checks = json::array();
      for (const auto& r : results) {
        ok = ok && r.passed;
        checks.push_back({{"name", r.name}, {"pass", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
      }
      report["checks"] = checks;
      report["pass"] = ok;
      report["wall_time"] = std::chrono::duration<double>(t1 - t0).count();
      std::cout << report.dump(2) << "\n";
      return ok ? kExitPass : kExitFail;
    }

    if (*constants) {
      const auto t0 = std::chrono::steady_clock::now();
      const gseq::BoundedReal x = gseq::xi(terms);
      json out;
      out["command"] = "constants";
      out["parameters"] = {{"digits", digits}, {"terms", terms}};
      out["xi"] = bounded(x, digits);
      out["C"] = bounded(gseq::constant_C(x), digits);
      out["rho"] = bounded(gseq::rho_exact(x), digits);
      out["gamma34"] = bounded(gseq::gamma_three_quarters(), digits);
      out["wall_time"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      std::cout << out.dump(2) << "\n";
      return kExitPass;
    }

    if (*rho_mc) {
      const gseq::McEstimate e = gseq::estimate_rho(samples, horizon, seed, workers);
      std::cout << to_json(e).dump(2) << "\n";
      return kExitPass;
    }

    if (*ratio) {
      if (n_max > gseq::kSequenceCountCap) {
        throw UsageError("ratio: n_max exceeds cap " + std::to_string(gseq::kSequenceCountCap));
      }
      const auto rows = gseq::ratio_table(n_max);
      if (format == "json") {
        json out = json::array();
        for (const auto& r : rows) out.push_back({{"n", r.n}, {"G_n", r.count.str()}, {"ratio", r.ratio}});
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "n,G_n,ratio\n" << std::fixed << std::setprecision(6);
        for (const auto& r : rows) std::cout << r.n << "," << r.count << "," << r.ratio << "\n";
      }
      return kExitPass;
    }

    if (*convergence) {
      if (n_max > gseq::kGraphicalDpCap) {
        throw UsageError("convergence: n_max exceeds cap " + std::to_string(gseq::kGraphicalDpCap));
      }
      const double limit = (1 - gseq::rho_exact().value).convert_to<double>();
      const auto rows = gseq::convergence_table(n_max, limit);
      if (format == "json") {
        json out = json::array();
        for (const auto& r : rows) {
          out.push_back({{"n", r.n}, {"ratio", gseq::to_string(r.ratio)}, {"value", r.value}, {"distance", r.distance}});
        }
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "n,ratio,value,distance\n" << std::setprecision(10);
        for (const auto& r : rows) {
          std::cout << r.n << "," << gseq::to_string(r.ratio) << "," << r.value << "," << r.distance << "\n";
        }
      }
      return kExitPass;
    }

    if (*sample) {
      if (sample_n > gseq::kGraphicalDpCap) {
        throw UsageError("sample: n exceeds cap " + std::to_string(gseq::kGraphicalDpCap));
      }
      const gseq::GraphicalBridgeSampler sampler(sample_n);
      std::mt19937_64 engine = gseq::make_engine(seed, 0);
      for (std::uint64_t i = 0; i < samples; ++i) std::cout << sampler(engine).to_string() << "\n";
      return kExitPass;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
