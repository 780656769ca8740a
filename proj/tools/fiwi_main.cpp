// Copyright 2026 The fiwi Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// fiwi: joint power allocation and caching for fiber-wireless access.
//
//   fiwi generate --out scenario.json [--seed N] [--snr-db X] ...
//   fiwi solve scenario.json [--algorithm proposed|full_cache|equal_power|random]
//   fiwi sweep config.json --out results.csv [--summary s.csv] [--gnuplot d.dat]
//   fiwi compare [scenario.json]
//   fiwi oracle-check [--instances N] [--seed S]
//
// Exit codes: 0 success, 1 solver error, 2 usage, 3 input parse error,
// 4 oracle mismatch.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fiwi/errors.hpp"
#include "fiwi/experiments.hpp"
#include "fiwi/oracles.hpp"
#include "fiwi/scenario.hpp"

namespace {

constexpr int kExitSolver = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitOracle = 4;

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path);
}

void print_report(const fiwi::Scenario& scenario, const fiwi::Solution& sol,
                  std::string_view algorithm) {
  std::printf("algorithm              %.*s\n", static_cast<int>(algorithm.size()),
              algorithm.data());
  std::printf("throughput_bps         %s\n",
              fiwi::format_double(sol.total_throughput_bps).c_str());
  std::printf("backhaul_used_bps      %s\n",
              fiwi::format_double(sol.backhaul_used_bps).c_str());
  std::printf("backhaul_capacity_bps  %s\n",
              fiwi::format_double(scenario.backhaul_capacity_bps).c_str());
  std::printf("backhaul_units_used    %lld of %lld\n",
              static_cast<long long>(sol.backhaul_units_used),
              static_cast<long long>(fiwi::capacity_units(
                  scenario.backhaul_capacity_bps, scenario.backhaul_unit_bps)));
  std::printf("mean_cache_utilization %.6f\n", sol.mean_cache_utilization);
  std::printf("feasible               %s\n", sol.feasible ? "true" : "false");
  if (sol.throttle_factor != 1.0) {
    std::printf("throttle_factor        %.6f\n", sol.throttle_factor);
  }
  // Circuit power is a per-AP constant outside the optimized budget.
  std::printf("circuit_power_w        %s per AP (not budgeted)\n",
              fiwi::format_double(scenario.power.circuit_power_w).c_str());
  std::printf("\n%4s %6s %8s %14s %9s %14s %8s %12s\n", "ap", "files", "opt_out",
              "sum_rate_bps", "hit", "backhaul_bps", "util", "water_w");
  for (const auto& d : sol.aps) {
    std::printf("%4zu %6zu %8s %14.6e %9.6f %14.6e %8.4f %12.6e\n", d.ap_id,
                d.prefix_len, d.opt_out ? "yes" : "no", d.sum_rate_bps,
                d.hit_ratio, d.backhaul_bps, d.cache_utilization,
                d.allocation.water_level_w);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Joint power allocation and caching for fiber-wireless access"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Write a seeded scenario file");
  std::string gen_out;
  std::string gen_config;
  fiwi::GeneratorConfig gen_cfg;
  std::optional<std::uint64_t> gen_seed;
  std::optional<std::size_t> gen_aps, gen_ues;
  std::optional<double> gen_snr, gen_capacity, gen_power, gen_delta;
  gen->add_option("--out,-o", gen_out, "Output scenario path")->required();
  gen->add_option("--config", gen_config, "Generator config (JSON)");
  gen->add_option("--seed", gen_seed, "PRNG seed");
  gen->add_option("--num-aps", gen_aps, "Number of ONU-APs");
  gen->add_option("--ues-per-ap", gen_ues, "UEs per AP");
  gen->add_option("--snr-db", gen_snr, "Reference mean SNR in dB");
  gen->add_option("--backhaul-capacity", gen_capacity, "Backhaul capacity, bit/s");
  gen->add_option("--max-power", gen_power, "Maximum total AP power, W");
  gen->add_option("--zipf-delta", gen_delta, "Zipf exponent");

  // solve
  auto* solve = app.add_subcommand("solve", "Solve one scenario file");
  std::string solve_path;
  std::string solve_algorithm = "proposed";
  std::uint64_t solve_seed = 1;
  bool solve_json = false;
  solve->add_option("scenario", solve_path, "Scenario file")->required();
  solve->add_option("--algorithm,-a", solve_algorithm,
                    "proposed | full_cache | equal_power | random")
      ->check(CLI::IsMember({"proposed", "full_cache", "equal_power", "random"}));
  solve->add_option("--seed", solve_seed, "Seed for the random baseline");
  solve->add_flag("--json", solve_json, "Also print the constraint check as JSON");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep");
  std::string sweep_config;
  std::string sweep_default_axis;
  std::string sweep_out;
  std::string sweep_summary;
  std::string sweep_gnuplot;
  std::optional<std::size_t> sweep_threads;
  bool sweep_timing = false;
  auto* cfg_opt = sweep->add_option("config", sweep_config, "Sweep config (JSON)");
  sweep->add_option("--default-axis", sweep_default_axis,
                    "Use the built-in grid for this axis")
      ->excludes(cfg_opt);
  sweep->add_option("--out,-o", sweep_out, "CSV output path (default stdout)");
  sweep->add_option("--summary", sweep_summary, "Per-point mean/std CSV path");
  sweep->add_option("--gnuplot", sweep_gnuplot, "gnuplot data path");
  sweep->add_option("--threads", sweep_threads, "Worker threads");
  sweep->add_flag("--timing", sweep_timing, "Record runtime_ms (non-reproducible)");

  // compare
  auto* compare = app.add_subcommand("compare", "Run all four algorithms");
  std::string compare_path;
  std::uint64_t compare_seed = 1;
  compare->add_option("scenario", compare_path,
                      "Scenario file (default: generated default scenario)");
  compare->add_option("--seed", compare_seed, "Scenario and random-baseline seed");

  // oracle-check
  auto* oracle = app.add_subcommand("oracle-check",
                                    "Cross-check solvers against brute force");
  std::size_t oracle_instances = 200;
  std::uint64_t oracle_seed = 7;
  oracle->add_option("--instances", oracle_instances, "Random instances per suite");
  oracle->add_option("--seed", oracle_seed, "Seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen) {
      fiwi::GeneratorConfig cfg;
      if (!gen_config.empty()) {
        std::ifstream in(gen_config);
        if (!in) throw fiwi::ParseError("cannot open " + gen_config, "");
        std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
        cfg = fiwi::generator_config_from_json(
            fiwi::parse_json_text(text, gen_config));
      }
      if (gen_seed) cfg.seed = *gen_seed;
      if (gen_aps) cfg.num_aps = *gen_aps;
      if (gen_ues) cfg.ues_per_ap = *gen_ues;
      if (gen_snr) cfg.mean_snr_ref_db = *gen_snr;
      if (gen_capacity) cfg.backhaul_capacity_bps = *gen_capacity;
      if (gen_power) cfg.max_power_w = *gen_power;
      if (gen_delta) cfg.zipf_delta = *gen_delta;
      fiwi::save_scenario(fiwi::generate(cfg), gen_out);
      std::printf("wrote %s (%zu APs, %zu UEs)\n", gen_out.c_str(), cfg.num_aps,
                  cfg.num_aps * cfg.ues_per_ap);
      return 0;
    }

    if (*solve) {
      const fiwi::Scenario scenario = fiwi::load_scenario(solve_path);
      const fiwi::Algorithm algorithm = fiwi::parse_algorithm(solve_algorithm);
      const fiwi::Solution sol =
          fiwi::run_algorithm(algorithm, scenario, solve_seed);
      print_report(scenario, sol, fiwi::name_of(algorithm));
      if (solve_json) {
        const auto ev = fiwi::p1_evaluate(scenario, sol);
        nlohmann::json doc = {{"objective_bps", ev.objective_bps},
                              {"backhaul_residual", ev.backhaul_residual},
                              {"power_residual", ev.power_residual},
                              {"cache_residual", ev.cache_residual},
                              {"min_residual", ev.min_residual()}};
        std::printf("\n%s\n", doc.dump(2).c_str());
      }
      return 0;
    }

    if (*sweep) {
      fiwi::SweepSpec spec;
      if (!sweep_config.empty()) {
        spec = fiwi::load_sweep_spec(sweep_config);
      } else if (!sweep_default_axis.empty()) {
        spec = fiwi::default_sweep(fiwi::parse_axis(sweep_default_axis));
      } else {
        std::fprintf(stderr, "sweep: give a config file or --default-axis\n");
        return kExitUsage;
      }
      fiwi::SweepOptions options;
      options.threads = fiwi::resolve_thread_count(sweep_threads);
      options.record_runtime = sweep_timing;
      const auto rows = fiwi::run_sweep(spec, options);
      const std::string csv = fiwi::to_csv(rows);
      if (sweep_out.empty()) {
        std::fwrite(csv.data(), 1, csv.size(), stdout);
      } else {
        write_file(sweep_out, csv);
      }
      const auto summary = fiwi::summarize(rows);
      if (!sweep_summary.empty()) {
        write_file(sweep_summary, fiwi::summary_csv(summary));
      }
      if (!sweep_gnuplot.empty()) {
        write_file(sweep_gnuplot, fiwi::gnuplot_data(summary, spec.axis));
      }
      std::size_t errors = 0;
      for (const auto& r : rows) errors += r.error ? 1 : 0;
      if (errors > 0) {
        std::fprintf(stderr, "sweep: %zu of %zu points failed\n", errors,
                     rows.size());
      }
      return 0;
    }

    if (*compare) {
      fiwi::Scenario scenario;
      if (compare_path.empty()) {
        fiwi::GeneratorConfig cfg;
        cfg.seed = compare_seed;
        scenario = fiwi::generate(cfg);
      } else {
        scenario = fiwi::load_scenario(compare_path);
      }
      struct Line {
        fiwi::Algorithm algorithm;
        fiwi::Solution solution;
      };
      std::vector<Line> lines;
      for (fiwi::Algorithm a : fiwi::kAllAlgorithms) {
        lines.push_back({a, fiwi::run_algorithm(a, scenario, compare_seed)});
      }
      std::stable_sort(lines.begin(), lines.end(), [](const Line& x, const Line& y) {
        return x.solution.total_throughput_bps > y.solution.total_throughput_bps;
      });
      for (const auto& l : lines) {
        const auto name = fiwi::name_of(l.algorithm);
        std::printf("%-12.*s throughput_bps=%s utilization=%.4f feasible=%s\n",
                    static_cast<int>(name.size()), name.data(),
                    fiwi::format_double(l.solution.total_throughput_bps).c_str(),
                    l.solution.mean_cache_utilization,
                    l.solution.feasible ? "true" : "false");
      }
      return 0;
    }

    if (*oracle) {
      const auto report = fiwi::oracle_check(oracle_instances, oracle_seed);
      std::printf("waterfill  %zu cases, %zu mismatches\n", report.waterfill_cases,
                  report.waterfill_mismatches);
      std::printf("mckp       %zu cases, %zu mismatches\n", report.mckp_cases,
                  report.mckp_mismatches);
      std::printf("scenario   %zu cases, %zu mismatches\n", report.scenario_cases,
                  report.scenario_mismatches);
      for (const auto& m : report.messages) std::fprintf(stderr, "%s\n", m.c_str());
      return report.ok() ? 0 : kExitOracle;
    }
  } catch (const fiwi::ParseError& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return kExitParse;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitSolver;
  }
  return kExitUsage;
}
