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

#include <cmath>
#include <cstdlib>
#include <optional>
#include <tuple>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "fiwi/errors.hpp"
#include "fiwi/mckp.hpp"

namespace fiwi {
namespace {

SweepSpec small_spec(SweepAxis axis, std::vector<double> values) {
  SweepSpec spec;
  spec.axis = axis;
  spec.values = std::move(values);
  spec.algorithms.assign(std::begin(kAllAlgorithms), std::end(kAllAlgorithms));
  spec.seeds = {2, 1};
  spec.base.num_aps = 6;
  spec.base.ues_per_ap = 8;
  return spec;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(NamesTest, RoundTrip) {
  for (Algorithm a : kAllAlgorithms) EXPECT_EQ(parse_algorithm(name_of(a)), a);
  EXPECT_EQ(name_of(Algorithm::kFullCache), "full_cache");
  EXPECT_EQ(parse_axis("zipf_delta"), SweepAxis::kZipfDelta);
  EXPECT_THROW(parse_algorithm("greedy"), ParseError);
  EXPECT_THROW(parse_axis("bandwidth"), ParseError);
}

TEST(SweepTest, CsvHeaderAndRowCount) {
  const auto rows = run_sweep(small_spec(SweepAxis::kBackhaulCapacity, {1e8, 1e9}));
  ASSERT_EQ(rows.size(), 2u * 4u * 2u);
  const auto out = lines(to_csv(rows));
  ASSERT_EQ(out.size(), 17u);
  EXPECT_EQ(out[0],
            "scenario_seed,algorithm,axis,axis_value,throughput_bps,"
            "backhaul_used_bps,mean_cache_utilization,feasible,runtime_ms");
  EXPECT_EQ(out[1].substr(0, 35), "1,proposed,backhaul_capacity,1e+08,");
  EXPECT_EQ(out[1].substr(out[1].size() - 2), ",0");
}

TEST(SweepTest, RowsAreOrderedByValueAlgorithmSeed) {
  SweepOptions opts;
  opts.threads = 3;
  const auto rows =
      run_sweep(small_spec(SweepAxis::kMaxPower, {5.0, 7.0}), opts);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& a = rows[i - 1];
    const auto& b = rows[i];
    const auto key_a = std::tuple(a.axis_value, a.algorithm, a.scenario_seed);
    const auto key_b = std::tuple(b.axis_value, b.algorithm, b.scenario_seed);
    EXPECT_LT(key_a, key_b);
  }
}

TEST(SweepTest, ThreadCountDoesNotChangeOutput) {
  const auto spec = small_spec(SweepAxis::kZipfDelta, {0.6, 0.8, 1.0});
  SweepOptions one;
  one.threads = 1;
  SweepOptions many;
  many.threads = 4;
  EXPECT_EQ(to_csv(run_sweep(spec, one)), to_csv(run_sweep(spec, many)));
}

TEST(SweepTest, SinglePointMatchesDirectSolve) {
  auto spec = small_spec(SweepAxis::kBackhaulCapacity, {3e8});
  spec.algorithms = {Algorithm::kProposed};
  spec.seeds = {4};
  const auto rows = run_sweep(spec);
  ASSERT_EQ(rows.size(), 1u);
  GeneratorConfig cfg = spec.base;
  cfg.seed = 4;
  Scenario s = generate(cfg);
  s.backhaul_capacity_bps = 3e8;
  const auto sol = solve_scenario(s);
  EXPECT_EQ(rows[0].throughput_bps, sol.total_throughput_bps);
  EXPECT_EQ(rows[0].backhaul_used_bps, sol.backhaul_used_bps);
  EXPECT_TRUE(rows[0].feasible);
}

TEST(SweepTest, ProposedThroughputRisesWithBackhaul) {
  auto spec = small_spec(SweepAxis::kBackhaulCapacity,
                         {1e7, 5e7, 1e8, 2e8, 4e8, 1e9});
  spec.algorithms = {Algorithm::kProposed};
  const auto rows = run_sweep(spec);
  for (std::size_t i = spec.seeds.size(); i < rows.size(); ++i) {
    EXPECT_GE(rows[i].throughput_bps,
              rows[i - spec.seeds.size()].throughput_bps);
  }
}

TEST(SweepTest, UtilizationFallsWithSkew) {
  auto spec = small_spec(SweepAxis::kZipfDelta, {0.6, 0.8, 1.0});
  spec.algorithms = {Algorithm::kProposed};
  spec.base.backhaul_capacity_bps = 1e8;
  const auto rows = run_sweep(spec);
  for (std::size_t i = spec.seeds.size(); i < rows.size(); ++i) {
    EXPECT_LE(rows[i].mean_cache_utilization,
              rows[i - spec.seeds.size()].mean_cache_utilization);
  }
}

TEST(SweepTest, FailingPointBecomesErrorRow) {
  auto spec = small_spec(SweepAxis::kMaxPower, {-1.0, 7.0});
  spec.algorithms = {Algorithm::kProposed};
  spec.seeds = {1};
  const auto rows = run_sweep(spec);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_TRUE(rows[0].error.has_value());
  EXPECT_FALSE(rows[1].error.has_value());
  const auto out = lines(to_csv(rows));
  EXPECT_EQ(out[1], "1,proposed,max_power,-1,nan,nan,nan,error,0");
}

TEST(SweepTest, DuplicateSeedsAndAlgorithmsCollapse) {
  auto spec = small_spec(SweepAxis::kMaxPower, {7.0});
  spec.seeds = {3, 3, 1};
  spec.algorithms = {Algorithm::kRandom, Algorithm::kRandom};
  EXPECT_EQ(run_sweep(spec).size(), 2u);
}

TEST(SweepSpecTest, JsonRoundTripAndErrors) {
  const auto spec = default_sweep(SweepAxis::kZipfDelta);
  const auto back = sweep_spec_from_json(to_json(spec));
  EXPECT_EQ(back.values, spec.values);
  EXPECT_EQ(back.seeds, spec.seeds);
  EXPECT_EQ(back.algorithms, spec.algorithms);
  EXPECT_EQ(back.base, spec.base);

  auto doc = to_json(spec);
  doc["values"] = nlohmann::json::array({1.0, 0.5});
  EXPECT_THROW(sweep_spec_from_json(doc), ParseError);
  doc = to_json(spec);
  doc["extra"] = 1;
  EXPECT_THROW(sweep_spec_from_json(doc), ParseError);
  doc = to_json(spec);
  doc.erase("seeds");
  EXPECT_THROW(sweep_spec_from_json(doc), ParseError);
}

TEST(SweepSpecTest, DefaultGrids) {
  const auto c = default_sweep(SweepAxis::kBackhaulCapacity);
  EXPECT_EQ(c.values.front(), 0.5e9);
  EXPECT_EQ(c.values.back(), 5e9);
  EXPECT_EQ(c.seeds.size(), 3u);
  EXPECT_EQ(c.algorithms.size(), 4u);
  EXPECT_NO_THROW(validate(default_sweep(SweepAxis::kMaxPower)));
}

TEST(ThreadsTest, FlagThenEnvironmentThenHardware) {
  ::setenv("FIWI_THREADS", "3", 1);
  EXPECT_EQ(resolve_thread_count(std::nullopt), 3u);
  EXPECT_EQ(resolve_thread_count(5), 5u);
  ::setenv("FIWI_THREADS", "lots", 1);
  EXPECT_GE(resolve_thread_count(std::nullopt), 1u);
  ::unsetenv("FIWI_THREADS");
  EXPECT_GE(resolve_thread_count(std::nullopt), 1u);
}

TEST(SummaryTest, MeanAndPopulationStd) {
  std::vector<SweepRow> rows(3);
  const double tp[] = {1.0, 2.0, 3.0};
  for (std::size_t i = 0; i < 3; ++i) {
    rows[i].axis_value = 7.0;
    rows[i].scenario_seed = i;
    rows[i].throughput_bps = tp[i];
    rows[i].mean_cache_utilization = 0.5;
    rows[i].feasible = i != 0;
  }
  const auto summary = summarize(rows);
  ASSERT_EQ(summary.size(), 1u);
  EXPECT_EQ(summary[0].samples, 3u);
  EXPECT_DOUBLE_EQ(summary[0].throughput_mean, 2.0);
  EXPECT_DOUBLE_EQ(summary[0].throughput_std, std::sqrt(2.0 / 3.0));
  EXPECT_DOUBLE_EQ(summary[0].utilization_std, 0.0);
  EXPECT_DOUBLE_EQ(summary[0].feasible_fraction, 2.0 / 3.0);
  EXPECT_NE(summary_csv(summary).find("proposed"), std::string::npos);
  EXPECT_NE(gnuplot_data(summary, SweepAxis::kMaxPower).find("7"),
            std::string::npos);
}

TEST(OracleCheckTest, NoMismatches) {
  const auto report = oracle_check(100, 3);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.waterfill_cases, 100u);
  EXPECT_GT(report.mckp_cases, 0u);
  EXPECT_GT(report.scenario_cases, 0u);
}

TEST(FormatTest, ShortestRoundTrip) {
  EXPECT_EQ(format_double(2.488e9), "2.488e+09");
  EXPECT_EQ(format_double(640.0), "640");
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(std::nan("")), "nan");
}

}  // namespace
}  // namespace fiwi
