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

#include "fiwi/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fiwi/errors.hpp"
#include "fiwi/popularity.hpp"

namespace fiwi {

PowerAllocation waterfill_bisection(std::span<const double> floors,
                                    double budget) {
  if (floors.empty()) throw DomainError("bisection: no users");
  if (!(budget > 0.0)) throw NoTransmitBudget("bisection: budget must be > 0");
  const double lowest = *std::min_element(floors.begin(), floors.end());
  auto poured = [&](double level) {
    double total = 0.0;
    for (double f : floors) total += std::max(level - f, 0.0);
    return total;
  };
  // poured(lo) = 0 < budget <= poured(hi).
  double lo = lowest;
  double hi = lowest + budget;
  for (int iter = 0; iter < 4096; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (poured(mid) < budget) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  // Pick whichever endpoint pours closer to the budget.
  const double level =
      std::abs(poured(lo) - budget) <= std::abs(poured(hi) - budget) ? lo : hi;
  PowerAllocation out;
  out.water_level_w = level;
  out.powers_w.reserve(floors.size());
  for (double f : floors) out.powers_w.push_back(std::max(level - f, 0.0));
  return out;
}

PowerAllocation waterfill_bisection(std::span<const double> gains,
                                    double budget, double noise_w) {
  std::vector<double> floors;
  floors.reserve(gains.size());
  for (double g : gains) floors.push_back(noise_w / g);
  return waterfill_bisection(floors, budget);
}

MckpSelection mckp_exhaustive(std::span<const MckpClass> classes,
                              std::int64_t capacity) {
  double combos = 1.0;
  for (const auto& cls : classes) combos *= static_cast<double>(cls.size() + 1);
  if (combos > kExhaustiveLimit) {
    throw OracleRefusal("mckp_exhaustive: " + std::to_string(combos) +
                        " selections exceed the enumeration limit");
  }
  const std::size_t n = classes.size();
  // odometer[c] is the option for class c: 0 = opt-out, i+1 = item i.
  std::vector<std::size_t> odometer(n, 0);
  std::vector<std::size_t> best_ranks;
  MckpSelection best;
  bool have_best = false;

  auto preferred = [&](const std::vector<std::size_t>& a,
                       const std::vector<std::size_t>& b) {
    for (std::size_t c = n; c-- > 0;) {
      if (a[c] != b[c]) return a[c] < b[c];
    }
    return false;
  };

  while (true) {
    double value = 0.0;
    std::int64_t weight = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (odometer[c] == 0) continue;
      const MckpItem& item = classes[c][odometer[c] - 1];
      value += item.value;
      weight += item.weight;
    }
    if (weight <= capacity) {
      const bool better = !have_best || value > best.total_value ||
                          (value == best.total_value &&
                           preferred(odometer, best_ranks));
      if (better) {
        have_best = true;
        best_ranks = odometer;
        best.total_value = value;
        best.total_weight = weight;
      }
    }
    std::size_t c = 0;
    while (c < n && ++odometer[c] > classes[c].size()) {
      odometer[c] = 0;
      ++c;
    }
    if (c == n) break;
  }

  best.choice.resize(n);
  for (std::size_t c = 0; c < n; ++c) {
    best.choice[c] =
        best_ranks[c] == 0 ? kNoItem : static_cast<int>(best_ranks[c] - 1);
  }
  return best;
}

Solution mckp_exhaustive(std::span<const std::vector<Candidate>> classes,
                         std::int64_t capacity_units) {
  const CandidateItems items = to_items(classes);
  return assemble_solution(classes, items,
                           mckp_exhaustive(items.classes, capacity_units));
}

double P1Evaluation::min_residual() const {
  double m = std::min({backhaul_residual, power_sign_residual, binary_residual});
  for (double r : power_residual) m = std::min(m, r);
  for (double r : cache_residual) m = std::min(m, r);
  return m;
}

P1Evaluation p1_evaluate(const Scenario& scenario, const Solution& solution) {
  if (solution.aps.size() != scenario.aps.size()) {
    throw DomainError("p1_evaluate: solution has " +
                      std::to_string(solution.aps.size()) + " APs, scenario " +
                      std::to_string(scenario.aps.size()));
  }
  const auto& power = scenario.power;
  const auto& catalog = scenario.catalog;
  const auto model = PopularityModel::zipf(catalog.file_count, catalog.zipf_delta);

  P1Evaluation ev;
  double min_power = std::numeric_limits<double>::infinity();
  double miss_traffic = 0.0;
  for (std::size_t n = 0; n < scenario.aps.size(); ++n) {
    const AccessPoint& ap = scenario.aps[n];
    const ApDecision& d = solution.aps[n];
    const auto& powers = d.allocation.powers_w;
    if (powers.size() != ap.ue_gains.size()) {
      throw DomainError("p1_evaluate: AP " + std::to_string(n) + " has " +
                        std::to_string(powers.size()) + " powers for " +
                        std::to_string(ap.ue_gains.size()) + " UEs");
    }

    // Cache decision x_nj as an indicator over ranks.
    std::vector<bool> cached(catalog.file_count, false);
    std::size_t count = 0;
    bool valid = true;
    if (d.cached_files.empty()) {
      if (d.prefix_len > catalog.file_count) {
        valid = false;
      } else {
        for (std::size_t r = 0; r < d.prefix_len; ++r) cached[r] = true;
        count = d.prefix_len;
      }
    } else {
      for (std::size_t r : d.cached_files) {
        if (r >= catalog.file_count || cached[r]) {
          valid = false;
          continue;
        }
        cached[r] = true;
        ++count;
      }
    }
    if (!valid) ev.binary_residual = -1.0;

    double miss = 0.0;
    for (std::size_t r = 0; r < catalog.file_count; ++r) {
      if (!cached[r]) miss += model.probabilities()[r];
    }

    double rate = 0.0;
    double transmit = 0.0;
    for (std::size_t k = 0; k < powers.size(); ++k) {
      const double p = powers[k];
      min_power = std::min(min_power, p);
      transmit += power.amplifier_coeff * p;
      if (p > 0.0) {
        rate += shannon_rate(ap.ue_gains[k], p, power.noise_power_w,
                             power.subchannel_bw_hz);
      }
    }
    ev.objective_bps += rate;
    miss_traffic += miss * rate;

    const double cached_bits = static_cast<double>(count) * catalog.file_size_bits;
    const double used =
        transmit + power.caching_coeff_w_per_bit * cached_bits;
    ev.power_residual.push_back((power.max_power_w - used) / power.max_power_w);
    ev.cache_residual.push_back(
        (ap.cache_capacity_bits - cached_bits) /
        std::max(ap.cache_capacity_bits, catalog.file_size_bits));
  }
  ev.backhaul_used_bps = miss_traffic;
  ev.backhaul_residual = (scenario.backhaul_capacity_bps - miss_traffic) /
                         std::max(scenario.backhaul_capacity_bps, 1.0);
  ev.power_sign_residual = std::min(min_power, 0.0) / power.max_power_w;
  return ev;
}

}  // namespace fiwi

namespace fiwi {
namespace {

double log_uniform(RngStream& rng, double lo, double hi) {
  return lo * std::pow(hi / lo, rng.uniform01());
}

}  // namespace

WaterfillInstance random_waterfill_instance(RngStream& rng,
                                            std::size_t max_users) {
  WaterfillInstance inst;
  const auto users = 1 + static_cast<std::size_t>(rng.below(max_users));
  inst.floors.reserve(users);
  for (std::size_t k = 0; k < users; ++k) {
    inst.floors.push_back(log_uniform(rng, 1e-3, 1e3));
  }
  inst.budget = log_uniform(rng, 1e-3, 1e3);
  return inst;
}

MckpInstance random_mckp_instance(RngStream& rng, std::size_t max_classes,
                                  std::size_t max_items,
                                  std::int64_t max_capacity) {
  MckpInstance inst;
  const bool integral = rng.below(2) == 0;
  const auto span = static_cast<std::uint64_t>(max_capacity) + 1;
  const auto classes = 1 + static_cast<std::size_t>(rng.below(max_classes));
  for (std::size_t n = 0; n < classes; ++n) {
    MckpClass cls;
    const auto items = 1 + static_cast<std::size_t>(rng.below(max_items));
    for (std::size_t i = 0; i < items; ++i) {
      MckpItem item;
      item.weight = static_cast<std::int64_t>(rng.below(span));
      item.value = integral ? static_cast<double>(rng.below(10))
                            : 100.0 * rng.uniform01();
      cls.push_back(item);
    }
    inst.classes.push_back(std::move(cls));
  }
  inst.capacity = static_cast<std::int64_t>(rng.below(span));
  return inst;
}

Scenario random_small_scenario(RngStream& rng) {
  Scenario s;
  s.catalog.file_count = 2 + static_cast<std::size_t>(rng.below(4));
  s.catalog.file_size_bits = 8e8;
  s.catalog.zipf_delta = 1.5 * rng.uniform01();
  s.power.max_power_w = 0.05 + 0.05 * rng.uniform01();
  // A handful of files can eat a visible share of P_M.
  s.power.caching_coeff_w_per_bit = 6.25e-12;
  const double noise = s.power.noise_power_w;
  const auto aps = 1 + static_cast<std::size_t>(rng.below(3));
  double unconstrained = 0.0;
  for (std::size_t n = 0; n < aps; ++n) {
    AccessPoint ap;
    ap.id = n;
    ap.cache_capacity_bits =
        static_cast<double>(rng.below(s.catalog.file_count + 1)) *
        s.catalog.file_size_bits;
    const auto ues = 1 + static_cast<std::size_t>(rng.below(4));
    for (std::size_t k = 0; k < ues; ++k) {
      // SNR between 0 and 40 dB at the per-UE share of the budget.
      const double snr = std::pow(10.0, 4.0 * rng.uniform01());
      ap.ue_gains.push_back(snr * noise / (s.power.max_power_w / 1.2 / 4.0));
    }
    unconstrained += 4.0 * 5e5 * 14.0;
    s.aps.push_back(std::move(ap));
  }
  s.backhaul_unit_bps = 1e6;
  s.backhaul_capacity_bps =
      std::floor(unconstrained * rng.uniform01() / 1e6) * 1e6;
  return s;
}

bool allocations_match(std::span<const double> a, std::span<const double> b,
                       double budget, double rel) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!(std::abs(a[k] - b[k]) <= rel * std::abs(b[k]) + 1e-15 * budget)) {
      return false;
    }
  }
  return true;
}

}  // namespace fiwi
