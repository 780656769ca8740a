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

#include "fiwi/mckp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "fiwi/errors.hpp"
#include "fiwi/oracles.hpp"
#include "fiwi/rng.hpp"
#include "fiwi/scenario.hpp"

namespace fiwi {
namespace {

double value_of(std::span<const MckpClass> classes, const MckpSelection& s) {
  double v = 0.0;
  for (std::size_t n = 0; n < classes.size(); ++n) {
    if (s.choice[n] != kNoItem) {
      v += classes[n][static_cast<std::size_t>(s.choice[n])].value;
    }
  }
  return v;
}

std::int64_t weight_of(std::span<const MckpClass> classes,
                       const MckpSelection& s) {
  std::int64_t w = 0;
  for (std::size_t n = 0; n < classes.size(); ++n) {
    if (s.choice[n] != kNoItem) {
      w += classes[n][static_cast<std::size_t>(s.choice[n])].weight;
    }
  }
  return w;
}

TEST(MckpTest, SingleClassPicksBestFittingItem) {
  const std::vector<MckpClass> classes{{{3.0, 2}, {5.0, 4}, {9.0, 7}}};
  const auto s = solve_mckp(classes, 5);
  EXPECT_EQ(s.choice[0], 1);
  EXPECT_EQ(s.total_value, 5.0);
  EXPECT_EQ(s.total_weight, 4);
}

TEST(MckpTest, ZeroCapacityKeepsOnlyWeightlessItems) {
  const std::vector<MckpClass> classes{{{1.0, 0}, {4.0, 3}}, {{2.0, 1}}};
  const auto s = solve_mckp(classes, 0);
  EXPECT_EQ(s.choice[0], 0);
  EXPECT_EQ(s.choice[1], kNoItem);
  EXPECT_EQ(s.total_value, 1.0);
  EXPECT_EQ(s.total_weight, 0);
}

TEST(MckpTest, HandCheckedThreeClasses) {
  // Classes of four items each, capacity 10.
  const std::vector<MckpClass> classes{
      {{1.0, 1}, {4.0, 3}, {5.0, 5}, {7.0, 8}},
      {{2.0, 2}, {3.0, 3}, {6.0, 4}, {8.0, 7}},
      {{1.0, 1}, {2.0, 2}, {5.0, 3}, {6.0, 6}}};
  const auto s = solve_mckp(classes, 10);
  // 4 (w3) + 6 (w4) + 5 (w3) = 15 at weight 10.
  EXPECT_EQ(s.total_value, 15.0);
  EXPECT_EQ(s.choice, (std::vector<int>{1, 2, 2}));
  const auto ex = mckp_exhaustive(classes, 10);
  EXPECT_EQ(ex.total_value, s.total_value);
  EXPECT_EQ(ex.choice, s.choice);
}

TEST(MckpTest, TiesPreferOptOutThenEarliestItem) {
  const std::vector<MckpClass> zero{{{0.0, 0}, {0.0, 1}}};
  EXPECT_EQ(solve_mckp(zero, 5).choice[0], kNoItem);
  const std::vector<MckpClass> dup{{{2.0, 3}, {2.0, 1}, {2.0, 0}}};
  EXPECT_EQ(solve_mckp(dup, 5).choice[0], 0);
}

TEST(MckpTest, Errors) {
  const std::vector<MckpClass> ok{{{1.0, 1}}};
  EXPECT_THROW(solve_mckp(ok, -1), DomainError);
  const std::vector<MckpClass> neg{{{1.0, -1}}};
  EXPECT_THROW(solve_mckp(neg, 3), DomainError);
  const std::vector<MckpClass> nan{{{std::nan(""), 1}}};
  EXPECT_THROW(solve_mckp(nan, 3), DomainError);
}

TEST(MckpTest, EmptyInstance) {
  const auto s = solve_mckp(std::vector<MckpClass>{}, 7);
  EXPECT_TRUE(s.choice.empty());
  EXPECT_EQ(s.total_value, 0.0);
}

TEST(MckpTest, MatchesExhaustiveOracle) {
  RngStream rng(5, 0, 0);
  for (int i = 0; i < 1000; ++i) {
    const auto inst = random_mckp_instance(rng);
    const auto dp = solve_mckp(inst.classes, inst.capacity);
    const auto ex = mckp_exhaustive(inst.classes, inst.capacity);
    ASSERT_EQ(dp.total_value, ex.total_value) << "instance " << i;
    ASSERT_LE(dp.total_weight, inst.capacity);
    ASSERT_EQ(value_of(inst.classes, dp), dp.total_value);
    ASSERT_EQ(weight_of(inst.classes, dp), dp.total_weight);
  }
}

// With integer values every sum is exact, so the oracle's tie order can be
// compared item by item.
TEST(MckpTest, SelectionMatchesOracleOnIntegerValues) {
  RngStream rng(17, 0, 0);
  int compared = 0;
  for (int i = 0; i < 2000; ++i) {
    const auto inst = random_mckp_instance(rng);
    bool integral = true;
    for (const auto& cls : inst.classes) {
      for (const auto& it : cls) integral &= it.value == std::floor(it.value);
    }
    if (!integral) continue;
    ++compared;
    const auto dp = solve_mckp(inst.classes, inst.capacity);
    const auto ex = mckp_exhaustive(inst.classes, inst.capacity);
    ASSERT_EQ(dp.choice, ex.choice) << "instance " << i;
  }
  EXPECT_GT(compared, 500);
}

TEST(MckpTest, OptimalSubstructure) {
  RngStream rng(23, 0, 0);
  for (int i = 0; i < 300; ++i) {
    const auto inst = random_mckp_instance(rng);
    if (inst.classes.size() < 2) continue;
    const auto full = solve_mckp(inst.classes, inst.capacity);
    const std::size_t last = inst.classes.size() - 1;
    std::int64_t used_last = 0;
    double value_last = 0.0;
    if (full.choice[last] != kNoItem) {
      const auto& it = inst.classes[last][static_cast<std::size_t>(full.choice[last])];
      used_last = it.weight;
      value_last = it.value;
    }
    const std::span<const MckpClass> head(inst.classes.data(), last);
    const auto sub = solve_mckp(head, inst.capacity - used_last);
    EXPECT_NEAR(sub.total_value + value_last, full.total_value,
                1e-9 * std::max(1.0, full.total_value));
  }
}

TEST(MckpTest, ClassOrderDoesNotChangeOptimum) {
  RngStream rng(31, 0, 0);
  for (int i = 0; i < 300; ++i) {
    auto inst = random_mckp_instance(rng);
    const double v = solve_mckp(inst.classes, inst.capacity).total_value;
    std::reverse(inst.classes.begin(), inst.classes.end());
    const double r = solve_mckp(inst.classes, inst.capacity).total_value;
    EXPECT_NEAR(v, r, 1e-12 * std::max(1.0, v));
  }
}

TEST(MckpTest, ValueNonDecreasingInCapacity) {
  RngStream rng(37, 0, 0);
  for (int i = 0; i < 100; ++i) {
    const auto inst = random_mckp_instance(rng);
    double last = -1.0;
    for (std::int64_t c = 0; c <= 30; ++c) {
      const double v = solve_mckp(inst.classes, c).total_value;
      EXPECT_GE(v, last);
      last = v;
    }
  }
}

TEST(MckpTest, DpRowsAreMonotone) {
  RngStream rng(41, 0, 0);
  for (int i = 0; i < 100; ++i) {
    const auto inst = random_mckp_instance(rng);
    std::vector<double> prev_row;
    std::size_t rows = 0;
    solve_mckp(inst.classes, inst.capacity,
               [&](std::size_t n, std::span<const double> row) {
                 EXPECT_EQ(n, rows + 1);
                 ++rows;
                 for (std::size_t c = 1; c < row.size(); ++c) {
                   EXPECT_GE(row[c], row[c - 1]);
                 }
                 // Adding a class never lowers R(n, c).
                 for (std::size_t c = 0; c < prev_row.size() && c < row.size();
                      ++c) {
                   EXPECT_GE(row[c], prev_row[c]);
                 }
                 prev_row.assign(row.begin(), row.end());
               });
    EXPECT_EQ(rows, inst.classes.size());
  }
}

TEST(MckpTest, CandidateOptOutMapsToIncumbent) {
  const std::vector<std::vector<Candidate>> classes{
      {Candidate{.ap_id = 4, .opt_out = true},
       Candidate{.ap_id = 4, .prefix_len = 0, .sum_rate_bps = 10.0,
                 .backhaul_bps = 10.0, .backhaul_units = 10},
       Candidate{.ap_id = 4, .prefix_len = 1, .sum_rate_bps = 9.0,
                 .hit_ratio = 0.5, .backhaul_bps = 4.5, .backhaul_units = 5}}};
  const auto none = mckp_solve(classes, 4);
  ASSERT_EQ(none.aps.size(), 1u);
  EXPECT_TRUE(none.aps[0].opt_out);
  EXPECT_EQ(none.aps[0].ap_id, 4u);
  EXPECT_EQ(none.total_throughput_bps, 0.0);
  const auto part = mckp_solve(classes, 5);
  EXPECT_EQ(part.aps[0].prefix_len, 1u);
  EXPECT_EQ(part.backhaul_units_used, 5);
  const auto all = mckp_solve(classes, 10);
  EXPECT_EQ(all.aps[0].prefix_len, 0u);
  EXPECT_EQ(all.total_throughput_bps, 10.0);
}

Scenario small_scenario(std::size_t aps, double capacity_bps) {
  GeneratorConfig cfg;
  cfg.seed = 3;
  cfg.num_aps = aps;
  cfg.ues_per_ap = 4;
  cfg.file_count = 6;
  cfg.cache_capacity_bits = 4 * 8e8;
  cfg.backhaul_capacity_bps = capacity_bps;
  return generate(cfg);
}

TEST(SolveScenarioTest, SlackBackhaulGivesPerApArgmax) {
  const Scenario s = small_scenario(3, 1e12);
  const auto sol = solve_scenario(s);
  const auto classes = build_classes(s);
  for (std::size_t n = 0; n < classes.size(); ++n) {
    double best = 0.0;
    std::size_t arg = 0;
    for (const auto& c : classes[n]) {
      if (!c.opt_out && c.sum_rate_bps > best) {
        best = c.sum_rate_bps;
        arg = c.prefix_len;
      }
    }
    EXPECT_EQ(sol.aps[n].prefix_len, arg);
    EXPECT_EQ(sol.aps[n].sum_rate_bps, best);
  }
}

TEST(SolveScenarioTest, TwoApJointBruteForce) {
  for (double cap : {5e6, 1e7, 2e7, 3e7, 4e7}) {
    const Scenario s = small_scenario(2, cap);
    const auto classes = build_classes(s);
    const auto cap_units = capacity_units(cap, s.backhaul_unit_bps);
    double best = 0.0;
    for (const auto& a : classes[0]) {
      for (const auto& b : classes[1]) {
        if (a.backhaul_units + b.backhaul_units <= cap_units) {
          best = std::max(best, a.sum_rate_bps + b.sum_rate_bps);
        }
      }
    }
    const auto sol = solve_scenario(s);
    EXPECT_NEAR(sol.total_throughput_bps, best, 1e-9 * std::max(1.0, best))
        << "C = " << cap;
    EXPECT_LE(sol.backhaul_units_used, cap_units);
    EXPECT_TRUE(sol.feasible);
  }
}

TEST(SolveScenarioTest, DefaultsAreFeasible) {
  const Scenario s = generate(GeneratorConfig{});
  const auto sol = solve_scenario(s);
  EXPECT_TRUE(sol.feasible);
  EXPECT_LE(sol.backhaul_used_bps, s.backhaul_capacity_bps);
  EXPECT_LE(sol.backhaul_units_used, 2488);
  EXPECT_EQ(sol.aps.size(), 32u);
  double sum = 0.0;
  for (const auto& ap : sol.aps) sum += ap.sum_rate_bps;
  EXPECT_NEAR(sol.total_throughput_bps, sum, 1e-9 * sum);
}

}  // namespace
}  // namespace fiwi
