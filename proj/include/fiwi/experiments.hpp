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

// Parameter sweeps over all algorithms, CSV output, and the randomized
// oracle cross-check behind `fiwi oracle-check`.

#ifndef FIWI_EXPERIMENTS_HPP_
#define FIWI_EXPERIMENTS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "fiwi/domain.hpp"
#include "fiwi/scenario.hpp"

namespace fiwi {

enum class Algorithm { kProposed, kFullCache, kEqualPower, kRandom };
enum class SweepAxis { kBackhaulCapacity, kMaxPower, kZipfDelta };

inline constexpr Algorithm kAllAlgorithms[] = {
    Algorithm::kProposed, Algorithm::kFullCache, Algorithm::kEqualPower,
    Algorithm::kRandom};

std::string_view name_of(Algorithm algorithm);
std::string_view name_of(SweepAxis axis);
// Throw ParseError on an unknown name.
Algorithm parse_algorithm(std::string_view name);
SweepAxis parse_axis(std::string_view name);

// `seed` drives the random baseline only.
Solution run_algorithm(Algorithm algorithm, const Scenario& scenario,
                       std::uint64_t seed);

// Overrides one scenario parameter. Gains stay as generated, so every point
// of a sweep shares the same channel realization.
void apply_axis(Scenario& scenario, SweepAxis axis, double value);

struct SweepSpec {
  SweepAxis axis = SweepAxis::kBackhaulCapacity;
  std::vector<double> values;
  std::vector<Algorithm> algorithms;
  std::vector<std::uint64_t> seeds;
  GeneratorConfig base;
};

void validate(const SweepSpec& spec);
SweepSpec sweep_spec_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const SweepSpec& spec);
SweepSpec load_sweep_spec(const std::string& path);

// Grids used for the throughput/utilization figures, three seeds each.
SweepSpec default_sweep(SweepAxis axis);

struct SweepRow {
  std::uint64_t scenario_seed = 0;
  Algorithm algorithm = Algorithm::kProposed;
  SweepAxis axis = SweepAxis::kBackhaulCapacity;
  double axis_value = 0.0;
  double throughput_bps = 0.0;
  double backhaul_used_bps = 0.0;
  double mean_cache_utilization = 0.0;
  bool feasible = false;
  double runtime_ms = 0.0;
  std::optional<std::string> error;
};

struct SweepOptions {
  std::size_t threads = 1;
  // Wall-clock timing makes output non-reproducible, so it is opt-in;
  // otherwise runtime_ms is written as 0.
  bool record_runtime = false;
};

// FIWI_THREADS if set, else the hardware concurrency; `flag` wins over both.
std::size_t resolve_thread_count(std::optional<std::size_t> flag);

// Rows ordered by (axis value, algorithm, seed) whatever the completion
// order. A failing point yields a row with `error` set.
std::vector<SweepRow> run_sweep(const SweepSpec& spec,
                                const SweepOptions& options = {});

inline constexpr std::string_view kCsvHeader =
    "scenario_seed,algorithm,axis,axis_value,throughput_bps,backhaul_used_bps,"
    "mean_cache_utilization,feasible,runtime_ms";

std::string to_csv(const std::vector<SweepRow>& rows);

// Mean and population standard deviation over seeds per (value, algorithm).
struct SummaryRow {
  double axis_value = 0.0;
  Algorithm algorithm = Algorithm::kProposed;
  std::size_t samples = 0;
  double throughput_mean = 0.0;
  double throughput_std = 0.0;
  double utilization_mean = 0.0;
  double utilization_std = 0.0;
  double feasible_fraction = 0.0;
};

std::vector<SummaryRow> summarize(const std::vector<SweepRow>& rows);
std::string summary_csv(const std::vector<SummaryRow>& summary);
// One gnuplot index block per algorithm: value, throughput mean/std,
// utilization mean/std.
std::string gnuplot_data(const std::vector<SummaryRow>& summary,
                         SweepAxis axis);

// Randomized solver-vs-oracle agreement check.
struct OracleCheckReport {
  std::size_t waterfill_cases = 0;
  std::size_t waterfill_mismatches = 0;
  std::size_t mckp_cases = 0;
  std::size_t mckp_mismatches = 0;
  std::size_t scenario_cases = 0;
  std::size_t scenario_mismatches = 0;
  std::vector<std::string> messages;

  bool ok() const {
    return waterfill_mismatches == 0 && mckp_mismatches == 0 &&
           scenario_mismatches == 0;
  }
};

OracleCheckReport oracle_check(std::size_t instances, std::uint64_t seed);

// Number formatting shared by the CSV writers: shortest round-trip form.
std::string format_double(double value);

}  // namespace fiwi

#endif  // FIWI_EXPERIMENTS_HPP_
