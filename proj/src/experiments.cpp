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

#include "fiwi/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "fiwi/baselines.hpp"
#include "fiwi/errors.hpp"
#include "fiwi/mckp.hpp"
#include "fiwi/oracles.hpp"
#include "fiwi/rng.hpp"

namespace fiwi {

using nlohmann::json;

std::string_view name_of(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kProposed: return "proposed";
    case Algorithm::kFullCache: return "full_cache";
    case Algorithm::kEqualPower: return "equal_power";
    case Algorithm::kRandom: return "random";
  }
  return "?";
}

std::string_view name_of(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kBackhaulCapacity: return "backhaul_capacity";
    case SweepAxis::kMaxPower: return "max_power";
    case SweepAxis::kZipfDelta: return "zipf_delta";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : kAllAlgorithms) {
    if (name_of(a) == name) return a;
  }
  throw ParseError("unknown algorithm '" + std::string(name) + "'",
                   "algorithms");
}

SweepAxis parse_axis(std::string_view name) {
  for (SweepAxis a : {SweepAxis::kBackhaulCapacity, SweepAxis::kMaxPower,
                      SweepAxis::kZipfDelta}) {
    if (name_of(a) == name) return a;
  }
  throw ParseError("unknown axis '" + std::string(name) + "'", "axis");
}

Solution run_algorithm(Algorithm algorithm, const Scenario& scenario,
                       std::uint64_t seed) {
  switch (algorithm) {
    case Algorithm::kProposed: return solve_scenario(scenario);
    case Algorithm::kFullCache: return full_cache(scenario);
    case Algorithm::kEqualPower: return equal_power(scenario);
    case Algorithm::kRandom: return random_cache(scenario, seed);
  }
  throw DomainError("unknown algorithm");
}

void apply_axis(Scenario& scenario, SweepAxis axis, double value) {
  switch (axis) {
    case SweepAxis::kBackhaulCapacity:
      scenario.backhaul_capacity_bps = value;
      break;
    case SweepAxis::kMaxPower:
      scenario.power.max_power_w = value;
      break;
    case SweepAxis::kZipfDelta:
      scenario.catalog.zipf_delta = value;
      break;
  }
  validate(scenario);
}

void validate(const SweepSpec& spec) {
  if (spec.values.empty()) throw DomainError("sweep: no axis values");
  if (!std::is_sorted(spec.values.begin(), spec.values.end())) {
    throw DomainError("sweep: axis values must be sorted");
  }
  for (double v : spec.values) {
    if (!std::isfinite(v)) throw DomainError("sweep: non-finite axis value");
  }
  if (spec.algorithms.empty()) throw DomainError("sweep: no algorithms");
  if (spec.seeds.empty()) throw DomainError("sweep: no seeds");
  validate(spec.base);
}

SweepSpec sweep_spec_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("sweep config must be an object", "");
  for (const auto& [key, value] : doc.items()) {
    if (key != "format_version" && key != "axis" && key != "values" &&
        key != "algorithms" && key != "seeds" && key != "base") {
      throw ParseError("unknown sweep field '" + key + "'", key);
    }
  }
  if (auto it = doc.find("format_version");
      it != doc.end() && *it != kScenarioFormatVersion) {
    throw ParseError("unsupported format_version", "format_version");
  }
  SweepSpec spec;
  auto field = [&](const char* key) -> const json& {
    auto it = doc.find(key);
    if (it == doc.end()) {
      throw ParseError(std::string("missing field '") + key + "'", key);
    }
    return *it;
  };
  const json& axis = field("axis");
  if (!axis.is_string()) throw ParseError("field 'axis' must be a string", "axis");
  spec.axis = parse_axis(axis.get<std::string>());

  const json& values = field("values");
  if (!values.is_array()) {
    throw ParseError("field 'values' must be an array", "values");
  }
  for (const auto& v : values) {
    if (!v.is_number()) throw ParseError("values must be numbers", "values");
    spec.values.push_back(v.get<double>());
  }

  if (auto it = doc.find("algorithms"); it != doc.end()) {
    if (!it->is_array()) {
      throw ParseError("field 'algorithms' must be an array", "algorithms");
    }
    for (const auto& a : *it) {
      if (!a.is_string()) {
        throw ParseError("algorithms must be strings", "algorithms");
      }
      spec.algorithms.push_back(parse_algorithm(a.get<std::string>()));
    }
  } else {
    spec.algorithms.assign(std::begin(kAllAlgorithms), std::end(kAllAlgorithms));
  }

  const json& seeds = field("seeds");
  if (!seeds.is_array()) throw ParseError("field 'seeds' must be an array", "seeds");
  for (const auto& s : seeds) {
    if (!s.is_number_unsigned()) {
      throw ParseError("seeds must be non-negative integers", "seeds");
    }
    spec.seeds.push_back(s.get<std::uint64_t>());
  }

  if (auto it = doc.find("base"); it != doc.end()) {
    try {
      spec.base = generator_config_from_json(*it);
    } catch (const ParseError& e) {
      throw ParseError(std::string("base: ") + e.what(),
                       "base." + e.field(), e.line());
    }
  }
  try {
    validate(spec);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), "");
  }
  return spec;
}

json to_json(const SweepSpec& spec) {
  json algorithms = json::array();
  for (Algorithm a : spec.algorithms) algorithms.push_back(name_of(a));
  return {{"format_version", kScenarioFormatVersion},
          {"axis", name_of(spec.axis)},
          {"values", spec.values},
          {"algorithms", algorithms},
          {"seeds", spec.seeds},
          {"base", to_json(spec.base)}};
}

SweepSpec load_sweep_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, "");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return sweep_spec_from_json(parse_json_text(buf.str(), path));
  } catch (const ParseError& e) {
    if (e.line() != 0) throw;
    throw ParseError(path + ": " + e.what(), e.field(), e.line());
  }
}

SweepSpec default_sweep(SweepAxis axis) {
  SweepSpec spec;
  spec.axis = axis;
  spec.algorithms.assign(std::begin(kAllAlgorithms), std::end(kAllAlgorithms));
  spec.seeds = {1, 2, 3};
  switch (axis) {
    case SweepAxis::kBackhaulCapacity:
      spec.values = {0.5e9, 1.0e9, 1.25e9, 1.5e9, 2.0e9, 2.488e9, 3.0e9, 4.0e9,
                     5.0e9};
      break;
    case SweepAxis::kMaxPower:
      spec.values = {4.0, 5.0, 6.0, 7.0, 8.0, 9.0, 10.0};
      break;
    case SweepAxis::kZipfDelta:
      spec.values = {0.4, 0.6, 0.8, 1.0, 1.2};
      break;
  }
  return spec;
}

std::size_t resolve_thread_count(std::optional<std::size_t> flag) {
  if (flag && *flag > 0) return *flag;
  if (const char* env = std::getenv("FIWI_THREADS")) {
    std::size_t value = 0;
    const char* end = env + std::char_traits<char>::length(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec == std::errc() && ptr == end && value > 0) return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<SweepRow> run_sweep(const SweepSpec& input,
                                const SweepOptions& options) {
  validate(input);
  SweepSpec spec = input;
  std::sort(spec.algorithms.begin(), spec.algorithms.end());
  spec.algorithms.erase(
      std::unique(spec.algorithms.begin(), spec.algorithms.end()),
      spec.algorithms.end());
  std::sort(spec.seeds.begin(), spec.seeds.end());
  spec.seeds.erase(std::unique(spec.seeds.begin(), spec.seeds.end()),
                   spec.seeds.end());

  std::vector<Scenario> scenarios;
  scenarios.reserve(spec.seeds.size());
  for (std::uint64_t seed : spec.seeds) {
    GeneratorConfig config = spec.base;
    config.seed = seed;
    scenarios.push_back(generate(config));
  }

  const std::size_t per_value = spec.algorithms.size() * spec.seeds.size();
  std::vector<SweepRow> rows(spec.values.size() * per_value);
  auto run_job = [&](std::size_t index) {
    const std::size_t v = index / per_value;
    const std::size_t a = (index % per_value) / spec.seeds.size();
    const std::size_t s = index % spec.seeds.size();
    SweepRow& row = rows[index];
    row.scenario_seed = spec.seeds[s];
    row.algorithm = spec.algorithms[a];
    row.axis = spec.axis;
    row.axis_value = spec.values[v];
    try {
      const auto start = std::chrono::steady_clock::now();
      Scenario scenario = scenarios[s];
      apply_axis(scenario, spec.axis, row.axis_value);
      const Solution sol = run_algorithm(row.algorithm, scenario, row.scenario_seed);
      const auto stop = std::chrono::steady_clock::now();
      row.throughput_bps = sol.total_throughput_bps;
      row.backhaul_used_bps = sol.backhaul_used_bps;
      row.mean_cache_utilization = sol.mean_cache_utilization;
      row.feasible = sol.feasible;
      if (options.record_runtime) {
        row.runtime_ms =
            std::chrono::duration<double, std::milli>(stop - start).count();
      }
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  };

  const std::size_t workers =
      std::max<std::size_t>(1, std::min(options.threads, rows.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) run_job(i);
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  return rows;
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::string to_csv(const std::vector<SweepRow>& rows) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += std::to_string(r.scenario_seed);
    out += ',';
    out += name_of(r.algorithm);
    out += ',';
    out += name_of(r.axis);
    out += ',';
    out += format_double(r.axis_value);
    out += ',';
    if (r.error) {
      out += "nan,nan,nan,error,";
    } else {
      out += format_double(r.throughput_bps);
      out += ',';
      out += format_double(r.backhaul_used_bps);
      out += ',';
      out += format_double(r.mean_cache_utilization);
      out += ',';
      out += r.feasible ? "true" : "false";
      out += ',';
    }
    out += format_double(r.runtime_ms);
    out += '\n';
  }
  return out;
}

namespace {

void mean_std(const std::vector<double>& xs, double& mean, double& sd) {
  mean = 0.0;
  sd = 0.0;
  if (xs.empty()) return;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  for (double x : xs) sd += (x - mean) * (x - mean);
  sd = std::sqrt(sd / static_cast<double>(xs.size()));
}

}  // namespace

std::vector<SummaryRow> summarize(const std::vector<SweepRow>& rows) {
  std::vector<SummaryRow> out;
  std::size_t i = 0;
  while (i < rows.size()) {
    std::size_t j = i;
    std::vector<double> thr, util;
    std::size_t feasible = 0;
    while (j < rows.size() && rows[j].axis_value == rows[i].axis_value &&
           rows[j].algorithm == rows[i].algorithm) {
      if (!rows[j].error) {
        thr.push_back(rows[j].throughput_bps);
        util.push_back(rows[j].mean_cache_utilization);
        if (rows[j].feasible) ++feasible;
      }
      ++j;
    }
    SummaryRow s;
    s.axis_value = rows[i].axis_value;
    s.algorithm = rows[i].algorithm;
    s.samples = thr.size();
    mean_std(thr, s.throughput_mean, s.throughput_std);
    mean_std(util, s.utilization_mean, s.utilization_std);
    s.feasible_fraction =
        thr.empty() ? 0.0
                    : static_cast<double>(feasible) / static_cast<double>(thr.size());
    out.push_back(s);
    i = j;
  }
  return out;
}

std::string summary_csv(const std::vector<SummaryRow>& summary) {
  std::string out =
      "axis_value,algorithm,samples,throughput_mean_bps,throughput_std_bps,"
      "utilization_mean,utilization_std,feasible_fraction\n";
  for (const auto& s : summary) {
    out += format_double(s.axis_value) + ',' + std::string(name_of(s.algorithm)) +
           ',' + std::to_string(s.samples) + ',' +
           format_double(s.throughput_mean) + ',' +
           format_double(s.throughput_std) + ',' +
           format_double(s.utilization_mean) + ',' +
           format_double(s.utilization_std) + ',' +
           format_double(s.feasible_fraction) + '\n';
  }
  return out;
}

std::string gnuplot_data(const std::vector<SummaryRow>& summary,
                         SweepAxis axis) {
  std::string out;
  bool first = true;
  for (Algorithm a : kAllAlgorithms) {
    bool any = false;
    for (const auto& s : summary) {
      if (s.algorithm != a) continue;
      if (!any) {
        if (!first) out += "\n\n";
        out += "# algorithm=" + std::string(name_of(a)) + "\n# " +
               std::string(name_of(axis)) +
               " throughput_mean throughput_std utilization_mean "
               "utilization_std\n";
        any = true;
        first = false;
      }
      out += format_double(s.axis_value) + ' ' + format_double(s.throughput_mean) +
             ' ' + format_double(s.throughput_std) + ' ' +
             format_double(s.utilization_mean) + ' ' +
             format_double(s.utilization_std) + '\n';
    }
  }
  return out;
}

OracleCheckReport oracle_check(std::size_t instances, std::uint64_t seed) {
  OracleCheckReport report;
  auto note = [&](std::string msg) {
    if (report.messages.size() < 20) report.messages.push_back(std::move(msg));
  };

  RngStream wf_rng(seed, 1, 0);
  for (std::size_t i = 0; i < instances; ++i) {
    const auto inst = random_waterfill_instance(wf_rng);
    const auto fast = waterfill(inst.floors, inst.budget);
    const auto slow = waterfill_bisection(inst.floors, inst.budget);
    ++report.waterfill_cases;
    if (!allocations_match(fast.powers_w, slow.powers_w, inst.budget)) {
      ++report.waterfill_mismatches;
      note("waterfill instance " + std::to_string(i) + " disagrees with bisection");
    }
  }

  RngStream kp_rng(seed, 2, 0);
  for (std::size_t i = 0; i < instances; ++i) {
    const auto inst = random_mckp_instance(kp_rng);
    const auto dp = solve_mckp(inst.classes, inst.capacity);
    const auto brute = mckp_exhaustive(inst.classes, inst.capacity);
    ++report.mckp_cases;
    if (dp.total_value != brute.total_value || dp.total_weight > inst.capacity) {
      ++report.mckp_mismatches;
      note("mckp instance " + std::to_string(i) + ": dp " +
           format_double(dp.total_value) + " vs exhaustive " +
           format_double(brute.total_value));
    }
  }

  RngStream sc_rng(seed, 3, 0);
  for (std::size_t i = 0; i < instances; ++i) {
    const Scenario scenario = random_small_scenario(sc_rng);
    const auto classes = build_classes(scenario);
    const auto units = capacity_units(scenario.backhaul_capacity_bps,
                                      scenario.backhaul_unit_bps);
    const Solution dp = mckp_solve(classes, units);
    const Solution brute = mckp_exhaustive(classes, units);
    const P1Evaluation ev = p1_evaluate(scenario, dp);
    ++report.scenario_cases;
    const bool objective_ok =
        std::abs(ev.objective_bps - dp.total_throughput_bps) <=
        1e-9 * std::max(1.0, dp.total_throughput_bps);
    if (dp.total_throughput_bps != brute.total_throughput_bps ||
        ev.min_residual() < -1e-9 || !objective_ok) {
      ++report.scenario_mismatches;
      note("scenario instance " + std::to_string(i) +
           " failed DP/exhaustive/constraint agreement");
    }
  }
  return report;
}

}  // namespace fiwi
