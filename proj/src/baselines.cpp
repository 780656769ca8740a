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

#include "fiwi/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fiwi/mckp.hpp"
#include "fiwi/popularity.hpp"
#include "fiwi/rng.hpp"
#include "fiwi/vabwf.hpp"

namespace fiwi {
namespace {

void finish_totals(Solution& sol) {
  sol.total_throughput_bps = 0.0;
  sol.backhaul_used_bps = 0.0;
  sol.backhaul_units_used = 0;
  double utilization = 0.0;
  for (const auto& d : sol.aps) {
    sol.total_throughput_bps += d.sum_rate_bps;
    sol.backhaul_used_bps += d.backhaul_bps;
    sol.backhaul_units_used += d.backhaul_units;
    utilization += d.cache_utilization;
  }
  sol.mean_cache_utilization =
      sol.aps.empty() ? 0.0 : utilization / static_cast<double>(sol.aps.size());
}

ApDecision decision_from(const Candidate& c) {
  ApDecision d;
  d.ap_id = c.ap_id;
  d.prefix_len = c.prefix_len;
  d.allocation = c.allocation;
  d.sum_rate_bps = c.sum_rate_bps;
  d.hit_ratio = c.hit_ratio;
  d.backhaul_bps = c.backhaul_bps;
  d.backhaul_units = c.backhaul_units;
  d.cache_utilization = c.cache_utilization;
  return d;
}

}  // namespace

void apply_backhaul_throttle(Solution& sol, double capacity_bps) {
  finish_totals(sol);
  sol.throttle_factor = 1.0;
  sol.feasible = sol.backhaul_used_bps <= capacity_bps;
  if (sol.feasible) return;
  sol.throttle_factor = capacity_bps / sol.backhaul_used_bps;
  double served = 0.0;
  for (const auto& d : sol.aps) served += d.hit_ratio * d.sum_rate_bps;
  sol.total_throughput_bps = served + capacity_bps;
  sol.backhaul_used_bps = capacity_bps;
}

Solution full_cache(const Scenario& scenario) {
  validate(scenario);
  const auto model = PopularityModel::zipf(scenario.catalog.file_count,
                                           scenario.catalog.zipf_delta);
  Solution sol;
  for (const auto& ap : scenario.aps) {
    // max_prefix also keeps a positive transmit budget when the cache alone
    // could absorb all of P_M.
    const std::size_t j = max_prefix(ap, scenario.power, scenario.catalog);
    sol.aps.push_back(decision_from(
        build_candidate(ap, j, model, scenario.power, scenario.catalog,
                        scenario.backhaul_unit_bps)));
  }
  apply_backhaul_throttle(sol, scenario.backhaul_capacity_bps);
  return sol;
}

Solution equal_power(const Scenario& scenario) {
  return solve_scenario(scenario, AllocationPolicy::kEqualSplit);
}

Solution random_cache(const Scenario& scenario, std::uint64_t seed) {
  validate(scenario);
  const auto model = PopularityModel::zipf(scenario.catalog.file_count,
                                           scenario.catalog.zipf_delta);
  const std::size_t files = scenario.catalog.file_count;
  Solution sol;
  for (const auto& ap : scenario.aps) {
    const std::size_t j = max_prefix(ap, scenario.power, scenario.catalog);
    RngStream stream(seed, ap.id, kRandomCacheStream);
    std::vector<std::size_t> ranks(files);
    std::iota(ranks.begin(), ranks.end(), std::size_t{0});
    // Partial Fisher-Yates: the first j slots are a uniform j-subset.
    for (std::size_t i = 0; i < j; ++i) {
      const auto pick = i + static_cast<std::size_t>(stream.below(files - i));
      std::swap(ranks[i], ranks[pick]);
    }
    ranks.resize(j);
    std::sort(ranks.begin(), ranks.end());

    ApDecision d;
    d.ap_id = ap.id;
    d.prefix_len = j;
    d.allocation = equal_split_allocate(ap.ue_gains, j, scenario.power,
                                        scenario.catalog.file_size_bits);
    d.sum_rate_bps = sum_rate(ap.ue_gains, d.allocation.powers_w, scenario.power);
    d.hit_ratio = model.hit_ratio_of(ranks);
    d.backhaul_bps = (1.0 - d.hit_ratio) * d.sum_rate_bps;
    d.backhaul_units = static_cast<std::int64_t>(
        std::ceil(d.backhaul_bps / scenario.backhaul_unit_bps));
    d.cache_utilization = ap.cache_capacity_bits > 0.0
                              ? static_cast<double>(j) *
                                    scenario.catalog.file_size_bits /
                                    ap.cache_capacity_bits
                              : 0.0;
    d.cached_files = std::move(ranks);
    sol.aps.push_back(std::move(d));
  }
  apply_backhaul_throttle(sol, scenario.backhaul_capacity_bps);
  return sol;
}

}  // namespace fiwi
