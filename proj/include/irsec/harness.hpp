// SPDX-License-Identifier: Apache-2.0
//
// irsec: secrecy-rate optimization for IRS-assisted multi-antenna wiretap channels.
//
// Monte Carlo experiment driver: sweeps one scenario variable over a list of
// values, draws `trials` independent channel realizations per value, runs the
// requested methods on each realization and collects per-run records.
//
// Reproducibility contract: the channel seed of (point p, trial t) is
// combine_seed(combine_seed(sweep.seed, p), t) - a pure function of the
// master seed and the indices, independent of the method set, the thread
// count and the scheduling order. Identical config + seed therefore yields
// byte-identical CSV output.

#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "irsec/channel.hpp"
#include "irsec/errors.hpp"
#include "irsec/oracle.hpp"
#include "irsec/secrecy.hpp"

namespace irsec {

enum class SweepVariable { d_ab_h, n_irs, n_eve, power_dbw };
enum class Method { proposed, no_irs, grid_oracle };

inline std::string to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::d_ab_h: return "d_ab_h";
    case SweepVariable::n_irs: return "n_irs";
    case SweepVariable::n_eve: return "n_eve";
    case SweepVariable::power_dbw: return "power_dbw";
  }
  throw InvalidInputError("unknown sweep variable");
}

inline std::string to_string(Method m) {
  switch (m) {
    case Method::proposed: return "proposed";
    case Method::no_irs: return "no_irs";
    case Method::grid_oracle: return "grid_oracle";
  }
  throw InvalidInputError("unknown method");
}

inline SweepVariable sweep_variable_from_string(const std::string& s) {
  if (s == "d_ab_h") return SweepVariable::d_ab_h;
  if (s == "n_irs") return SweepVariable::n_irs;
  if (s == "n_eve") return SweepVariable::n_eve;
  if (s == "power_dbw") return SweepVariable::power_dbw;
  throw InvalidInputError("unknown sweep variable: " + s);
}

inline Method method_from_string(const std::string& s) {
  if (s == "proposed") return Method::proposed;
  if (s == "no_irs") return Method::no_irs;
  if (s == "grid_oracle") return Method::grid_oracle;
  throw InvalidInputError("unknown method: " + s);
}

/// One sweep: which variable, its values, realizations per value, master seed
/// and methods to evaluate. `restarts` adds that many seeded random-phase
/// starts to the proposed method (0 keeps the deterministic uniform start
/// only); grid_q / grid_rounds parameterize the grid_oracle method.
struct SweepSpec {
  SweepVariable variable = SweepVariable::d_ab_h;
  std::vector<double> values;
  int trials = 500;
  std::uint64_t seed = 1;
  std::vector<Method> methods = {Method::proposed, Method::no_irs};
  int restarts = 0;
  int grid_q = 16;
  int grid_rounds = 3;

  void validate() const {
    if (values.empty()) throw InvalidInputError("SweepSpec: values must be non-empty");
    for (std::size_t i = 1; i < values.size(); ++i)
      if (!(values[i] > values[i - 1]))
        throw InvalidInputError("SweepSpec: values must be strictly increasing");
    if (trials < 1) throw InvalidInputError("SweepSpec: trials must be >= 1");
    if (methods.empty()) throw InvalidInputError("SweepSpec: methods must be non-empty");
    if (restarts < 0) throw InvalidInputError("SweepSpec: restarts must be >= 0");
    if (grid_rounds < 1) throw InvalidInputError("SweepSpec: grid_rounds must be >= 1");
    if (variable == SweepVariable::n_irs || variable == SweepVariable::n_eve)
      for (double v : values)
        if (v < 1.0 || v != std::floor(v))
          throw InvalidInputError("SweepSpec: integer sweep values required");
  }
};

struct RunRecord {
  SweepVariable variable = SweepVariable::d_ab_h;
  double sweep_value = 0.0;
  int trial = 0;
  Method method = Method::proposed;
  double rate_bits = 0.0;
  int iterations = 0;
  double wall_ms = 0.0;
  std::uint64_t seed = 0;
};

namespace detail {

inline ScenarioConfig apply_sweep_value(ScenarioConfig cfg, SweepVariable var,
                                        double value) {
  switch (var) {
    case SweepVariable::d_ab_h: cfg.d_ab_h_m = value; break;
    case SweepVariable::n_irs: cfg.n_irs = static_cast<int>(value); break;
    case SweepVariable::n_eve: cfg.n_eve = static_cast<int>(value); break;
    case SweepVariable::power_dbw: cfg.power_dbw = value; break;
  }
  return cfg;
}

inline constexpr std::uint64_t kRestartStream = 0x52535452ull;  // per-trial restarts

}  // namespace detail

/// Channel seed of (point, trial); method-independent by construction.
inline std::uint64_t trial_seed(std::uint64_t master, std::size_t point,
                                std::size_t trial) {
  return combine_seed(combine_seed(master, point), trial);
}

/// Run the sweep. Tasks (one per point/trial pair) execute on `threads`
/// workers (0 = hardware concurrency); records land in a preallocated slot
/// per (point, trial, method), so output order is deterministic regardless of
/// scheduling.
inline std::vector<RunRecord> run_sweep(const ScenarioConfig& cfg, const SweepSpec& sweep,
                                        unsigned threads = 0) {
  cfg.validate();
  sweep.validate();

  // Validate every sweep point upfront, including the grid guard.
  for (double value : sweep.values) {
    const ScenarioConfig pt = detail::apply_sweep_value(cfg, sweep.variable, value);
    pt.validate();
    for (Method m : sweep.methods)
      if (m == Method::grid_oracle)
        detail::check_grid_guard(GridSpec{sweep.grid_q, pt.n_irs},
                                 static_cast<std::size_t>(pt.n_irs));
  }

  const std::size_t n_points = sweep.values.size();
  const std::size_t n_trials = static_cast<std::size_t>(sweep.trials);
  const std::size_t n_methods = sweep.methods.size();
  std::vector<RunRecord> records(n_points * n_trials * n_methods);

  auto run_task = [&](std::size_t task) {
    const std::size_t point = task / n_trials;
    const std::size_t trial = task % n_trials;
    const double value = sweep.values[point];
    const ScenarioConfig pt = detail::apply_sweep_value(cfg, sweep.variable, value);
    const std::uint64_t seed = trial_seed(sweep.seed, point, trial);
    const SystemChannels ch = draw_channels(pt, seed);
    const double power_w = dbw_to_watt(pt.power_dbw);

    for (std::size_t mi = 0; mi < n_methods; ++mi) {
      const Method method = sweep.methods[mi];
      RunRecord rec;
      rec.variable = sweep.variable;
      rec.sweep_value = value;
      rec.trial = static_cast<int>(trial);
      rec.method = method;
      rec.seed = seed;

      const auto t0 = std::chrono::steady_clock::now();
      switch (method) {
        case Method::proposed: {
          const OptimizationResult res = optimize_with_restarts(
              ch, power_w, sweep.restarts,
              combine_seed(seed, detail::kRestartStream));
          rec.rate_bits = res.secrecy_rate_bits;
          rec.iterations = res.iterations;
          break;
        }
        case Method::no_irs: {
          rec.rate_bits = baseline_no_irs(ch, power_w);
          rec.iterations = 1;
          break;
        }
        case Method::grid_oracle: {
          const JointGridResult res = joint_grid_alternate(
              ch, power_w, GridSpec{sweep.grid_q, pt.n_irs}, sweep.grid_rounds);
          rec.rate_bits = res.rate_bits;
          rec.iterations = sweep.grid_rounds;
          break;
        }
      }
      const auto t1 = std::chrono::steady_clock::now();
      rec.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      records[(point * n_trials + trial) * n_methods + mi] = rec;
    }
  };

  const std::size_t n_tasks = n_points * n_trials;
  unsigned n_workers = threads != 0 ? threads : std::thread::hardware_concurrency();
  if (n_workers == 0) n_workers = 1;
  n_workers = static_cast<unsigned>(
      std::min<std::size_t>(n_workers, n_tasks));

  if (n_workers <= 1) {
    for (std::size_t task = 0; task < n_tasks; ++task) run_task(task);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (unsigned k = 0; k < n_workers; ++k)
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t task = next.fetch_add(1);
          if (task >= n_tasks) return;
          run_task(task);
        }
      });
    for (std::thread& t : pool) t.join();
  }
  return records;
}

/// Fixed-point with 11 fraction digits; zero serializes as 0.00000000000.
inline std::string format_real(double x) {
  if (x == 0.0) x = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.11f", x);
  return buf;
}

/// Write records as CSV (UTF-8, LF, '.' decimal separator). Wall times are
/// serialized as zero unless with_timing is set, keeping the default output a
/// pure function of config + seed.
inline void emit_csv(const std::vector<RunRecord>& records,
                     const std::filesystem::path& path, bool with_timing = false) {
  if (records.empty()) throw InvalidInputError("emit_csv: no records");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("emit_csv: cannot open " + path.string());
  out << "sweep_var,sweep_value,trial,method,rate_bits,iterations,wall_ms,seed\n";
  for (const RunRecord& r : records) {
    out << to_string(r.variable) << ',' << format_real(r.sweep_value) << ','
        << r.trial << ',' << to_string(r.method) << ',' << format_real(r.rate_bits)
        << ',' << r.iterations << ','
        << format_real(with_timing ? r.wall_ms : 0.0) << ',' << r.seed << '\n';
  }
  if (!out) throw IoError("emit_csv: write failed for " + path.string());
}

/// Mean / standard error / count per (sweep value, method), in record order.
struct PointStats {
  SweepVariable variable = SweepVariable::d_ab_h;
  double sweep_value = 0.0;
  Method method = Method::proposed;
  double mean = 0.0;
  double std_error = 0.0;
  int count = 0;
};

inline std::vector<PointStats> summarize(const std::vector<RunRecord>& records) {
  std::vector<PointStats> stats;
  std::vector<std::vector<double>> samples;
  for (const RunRecord& r : records) {
    std::size_t g = 0;
    for (; g < stats.size(); ++g)
      if (stats[g].sweep_value == r.sweep_value && stats[g].method == r.method) break;
    if (g == stats.size()) {
      stats.push_back({r.variable, r.sweep_value, r.method, 0.0, 0.0, 0});
      samples.emplace_back();
    }
    samples[g].push_back(r.rate_bits);
  }
  for (std::size_t g = 0; g < stats.size(); ++g) {
    const std::vector<double>& xs = samples[g];
    const double n = static_cast<double>(xs.size());
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= n;
    double var = 0.0;
    if (xs.size() > 1) {
      for (double x : xs) var += (x - mean) * (x - mean);
      var /= (n - 1.0);
    }
    stats[g].mean = mean;
    stats[g].std_error = xs.size() > 1 ? std::sqrt(var / n) : 0.0;
    stats[g].count = static_cast<int>(xs.size());
  }
  return stats;
}

// ---------------------------------------------------------------------------
// JSON configuration file: {"scenario": {...}, "sweep": {...}} with keys
// mirroring the struct field names. Missing keys keep their defaults.
// ---------------------------------------------------------------------------

struct HarnessConfig {
  ScenarioConfig scenario;
  SweepSpec sweep;
};

namespace detail {

template <typename T>
void get_if_present(const nlohmann::json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace detail

inline HarnessConfig parse_config(const nlohmann::json& j) {
  HarnessConfig cfg;
  if (j.contains("scenario")) {
    const nlohmann::json& s = j.at("scenario");
    detail::get_if_present(s, "n_tx", cfg.scenario.n_tx);
    detail::get_if_present(s, "n_irs", cfg.scenario.n_irs);
    detail::get_if_present(s, "n_eve", cfg.scenario.n_eve);
    detail::get_if_present(s, "power_dbw", cfg.scenario.power_dbw);
    detail::get_if_present(s, "noise_bob_dbw", cfg.scenario.noise_bob_dbw);
    detail::get_if_present(s, "noise_eve_dbw", cfg.scenario.noise_eve_dbw);
    detail::get_if_present(s, "pl0_db", cfg.scenario.pl0_db);
    detail::get_if_present(s, "d0_m", cfg.scenario.d0_m);
    detail::get_if_present(s, "exp_ai", cfg.scenario.exp_ai);
    detail::get_if_present(s, "exp_ib", cfg.scenario.exp_ib);
    detail::get_if_present(s, "exp_ie", cfg.scenario.exp_ie);
    detail::get_if_present(s, "exp_ab", cfg.scenario.exp_ab);
    detail::get_if_present(s, "exp_ae", cfg.scenario.exp_ae);
    detail::get_if_present(s, "d_ai_m", cfg.scenario.d_ai_m);
    detail::get_if_present(s, "d_v_m", cfg.scenario.d_v_m);
    detail::get_if_present(s, "d_ae_h_m", cfg.scenario.d_ae_h_m);
    detail::get_if_present(s, "d_ab_h_m", cfg.scenario.d_ab_h_m);
    detail::get_if_present(s, "seed", cfg.scenario.seed);
  }
  if (j.contains("sweep")) {
    const nlohmann::json& s = j.at("sweep");
    if (s.contains("variable"))
      cfg.sweep.variable = sweep_variable_from_string(s.at("variable").get<std::string>());
    detail::get_if_present(s, "values", cfg.sweep.values);
    detail::get_if_present(s, "trials", cfg.sweep.trials);
    detail::get_if_present(s, "seed", cfg.sweep.seed);
    if (s.contains("methods")) {
      cfg.sweep.methods.clear();
      for (const auto& m : s.at("methods"))
        cfg.sweep.methods.push_back(method_from_string(m.get<std::string>()));
    }
    detail::get_if_present(s, "restarts", cfg.sweep.restarts);
    detail::get_if_present(s, "grid_q", cfg.sweep.grid_q);
    detail::get_if_present(s, "grid_rounds", cfg.sweep.grid_rounds);
  }
  return cfg;
}

inline HarnessConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("load_config: cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInputError("load_config: bad JSON in " + path.string() + ": " +
                            e.what());
  }
  try {
    return parse_config(j);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInputError("load_config: bad field in " + path.string() + ": " +
                            e.what());
  }
}

}  // namespace irsec
