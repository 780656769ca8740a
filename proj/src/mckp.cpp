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
#include <string>

#include "fiwi/errors.hpp"
#include "fiwi/popularity.hpp"

namespace fiwi {

MckpSelection solve_mckp(std::span<const MckpClass> classes,
                         std::int64_t capacity,
                         const DpRowObserver& observer) {
  if (capacity < 0) throw DomainError("mckp: capacity must be >= 0");
  std::int64_t slack_cap = 0;
  for (const auto& cls : classes) {
    std::int64_t heaviest = 0;
    for (const auto& item : cls) {
      if (item.weight < 0) throw DomainError("mckp: negative item weight");
      if (!std::isfinite(item.value)) {
        throw DomainError("mckp: non-finite item value");
      }
      heaviest = std::max(heaviest, item.weight);
    }
    slack_cap += heaviest;
  }
  const std::int64_t cap = std::min(capacity, slack_cap);
  const auto width = static_cast<std::size_t>(cap) + 1;

  std::vector<double> prev(width, 0.0);
  std::vector<double> cur(width, 0.0);
  std::vector<std::vector<int>> traceback(classes.size(),
                                          std::vector<int>(width, kNoItem));

  for (std::size_t n = 0; n < classes.size(); ++n) {
    const MckpClass& items = classes[n];
    std::vector<int>& tr = traceback[n];
    for (std::size_t c = 0; c < width; ++c) {
      double best = prev[c];
      int arg = kNoItem;
      for (std::size_t i = 0; i < items.size(); ++i) {
        const auto w = static_cast<std::size_t>(items[i].weight);
        if (w > c) continue;
        const double v = prev[c - w] + items[i].value;
        if (v > best) {
          best = v;
          arg = static_cast<int>(i);
        }
      }
      cur[c] = best;
      tr[c] = arg;
    }
    if (observer) observer(n + 1, cur);
    std::swap(prev, cur);
  }

  MckpSelection out;
  out.choice.assign(classes.size(), kNoItem);
  out.total_value = prev[width - 1];
  auto c = static_cast<std::size_t>(cap);
  for (std::size_t n = classes.size(); n-- > 0;) {
    const int i = traceback[n][c];
    out.choice[n] = i;
    if (i != kNoItem) {
      const auto w = classes[n][static_cast<std::size_t>(i)].weight;
      c -= static_cast<std::size_t>(w);
      out.total_weight += w;
    }
  }
  return out;
}

CandidateItems to_items(std::span<const std::vector<Candidate>> classes) {
  CandidateItems out;
  out.classes.resize(classes.size());
  out.index_map.resize(classes.size());
  for (std::size_t n = 0; n < classes.size(); ++n) {
    for (std::size_t i = 0; i < classes[n].size(); ++i) {
      const Candidate& cand = classes[n][i];
      if (cand.opt_out) continue;
      out.classes[n].push_back({cand.sum_rate_bps, cand.backhaul_units});
      out.index_map[n].push_back(i);
    }
  }
  return out;
}

namespace {

ApDecision to_decision(const Candidate& c) {
  ApDecision d;
  d.ap_id = c.ap_id;
  d.prefix_len = c.prefix_len;
  d.allocation = c.allocation;
  d.sum_rate_bps = c.sum_rate_bps;
  d.hit_ratio = c.hit_ratio;
  d.backhaul_bps = c.backhaul_bps;
  d.backhaul_units = c.backhaul_units;
  d.cache_utilization = c.cache_utilization;
  d.opt_out = c.opt_out;
  return d;
}

ApDecision opt_out_decision(const std::vector<Candidate>& cls) {
  for (const auto& c : cls) {
    if (c.opt_out) return to_decision(c);
  }
  ApDecision d;
  d.opt_out = true;
  if (!cls.empty()) {
    d.ap_id = cls.front().ap_id;
    d.allocation.powers_w.assign(cls.front().allocation.powers_w.size(), 0.0);
  }
  return d;
}

}  // namespace

Solution assemble_solution(std::span<const std::vector<Candidate>> classes,
                           const CandidateItems& items,
                           const MckpSelection& selection) {
  Solution sol;
  sol.aps.reserve(classes.size());
  double utilization_sum = 0.0;
  for (std::size_t n = 0; n < classes.size(); ++n) {
    const int i = selection.choice[n];
    ApDecision d =
        i == kNoItem
            ? opt_out_decision(classes[n])
            : to_decision(
                  classes[n][items.index_map[n][static_cast<std::size_t>(i)]]);
    sol.backhaul_used_bps += d.backhaul_bps;
    sol.backhaul_units_used += d.backhaul_units;
    utilization_sum += d.cache_utilization;
    sol.aps.push_back(std::move(d));
  }
  sol.total_throughput_bps = selection.total_value;
  sol.mean_cache_utilization =
      classes.empty() ? 0.0
                      : utilization_sum / static_cast<double>(classes.size());
  sol.feasible = true;
  return sol;
}

Solution mckp_solve(std::span<const std::vector<Candidate>> classes,
                    std::int64_t capacity_units) {
  const CandidateItems items = to_items(classes);
  const MckpSelection selection = solve_mckp(items.classes, capacity_units);
  return assemble_solution(classes, items, selection);
}

std::vector<std::vector<Candidate>> build_classes(const Scenario& scenario,
                                                  AllocationPolicy policy) {
  validate(scenario);
  const auto model = PopularityModel::zipf(scenario.catalog.file_count,
                                           scenario.catalog.zipf_delta);
  std::vector<std::vector<Candidate>> classes;
  classes.reserve(scenario.aps.size());
  for (const auto& ap : scenario.aps) {
    classes.push_back(build_class(ap, model, scenario.power, scenario.catalog,
                                  scenario.backhaul_unit_bps, policy));
  }
  return classes;
}

Solution solve_scenario(const Scenario& scenario, AllocationPolicy policy) {
  const auto classes = build_classes(scenario, policy);
  return mckp_solve(classes, capacity_units(scenario.backhaul_capacity_bps,
                                            scenario.backhaul_unit_bps));
}

}  // namespace fiwi
