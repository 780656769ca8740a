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

#include "fiwi/vabwf.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fiwi/errors.hpp"

namespace fiwi {
namespace {

std::vector<double> noise_floors(std::span<const double> gains,
                                 const PowerParams& power) {
  if (gains.empty()) throw DomainError("allocation needs at least one UE");
  std::vector<double> floors;
  floors.reserve(gains.size());
  for (double g : gains) {
    if (!std::isfinite(g) || g <= 0.0) {
      throw DomainError("channel gains must be finite and > 0");
    }
    floors.push_back(power.noise_power_w / g);
  }
  return floors;
}

double checked_budget(const PowerParams& power, std::size_t prefix,
                      double file_size_bits) {
  const double budget = transmit_budget(power, prefix, file_size_bits);
  if (!(budget > 0.0)) {
    throw NoTransmitBudget("no transmit budget left after caching " +
                           std::to_string(prefix) + " files");
  }
  return budget;
}

}  // namespace

PowerAllocation waterfill(std::span<const double> floors, double budget) {
  if (floors.empty()) throw DomainError("waterfill: no users");
  if (!std::isfinite(budget)) throw DomainError("waterfill: budget not finite");
  if (budget <= 0.0) throw NoTransmitBudget("waterfill: budget must be > 0");
  for (double f : floors) {
    if (!std::isfinite(f) || f < 0.0) {
      throw DomainError("waterfill: floors must be finite and >= 0");
    }
  }

  std::vector<bool> active(floors.size(), true);
  double level = 0.0;
  bool removed = true;
  while (removed) {
    double floor_sum = 0.0;
    std::size_t count = 0;
    for (std::size_t k = 0; k < floors.size(); ++k) {
      if (!active[k]) continue;
      floor_sum += floors[k];
      ++count;
    }
    // The lowest floor never leaves the active set, so count > 0.
    level = (budget + floor_sum) / static_cast<double>(count);
    removed = false;
    for (std::size_t k = 0; k < floors.size(); ++k) {
      if (active[k] && level - floors[k] < 0.0) {
        active[k] = false;
        removed = true;
      }
    }
  }

  PowerAllocation out;
  out.water_level_w = level;
  out.powers_w.resize(floors.size(), 0.0);
  for (std::size_t k = 0; k < floors.size(); ++k) {
    if (active[k]) out.powers_w[k] = level - floors[k];
  }
  return out;
}

PowerAllocation vabwf_allocate(std::span<const double> gains, std::size_t prefix,
                               const PowerParams& power, double file_size_bits) {
  const auto floors = noise_floors(gains, power);
  PowerAllocation out =
      waterfill(floors, checked_budget(power, prefix, file_size_bits));
  out.cached_prefix = prefix;
  return out;
}

PowerAllocation equal_split_allocate(std::span<const double> gains,
                                     std::size_t prefix,
                                     const PowerParams& power,
                                     double file_size_bits) {
  noise_floors(gains, power);  // validation only
  const double share = checked_budget(power, prefix, file_size_bits) /
                       static_cast<double>(gains.size());
  PowerAllocation out;
  out.powers_w.assign(gains.size(), share);
  out.cached_prefix = prefix;
  out.water_level_w = share;
  return out;
}

double sum_rate(std::span<const double> gains, std::span<const double> powers,
                const PowerParams& power) {
  if (gains.size() != powers.size()) {
    throw DomainError("sum_rate: gains and powers differ in length");
  }
  double total = 0.0;
  for (std::size_t k = 0; k < gains.size(); ++k) {
    total += shannon_rate(gains[k], powers[k], power.noise_power_w,
                          power.subchannel_bw_hz);
  }
  return total;
}

std::size_t max_prefix(const AccessPoint& ap, const PowerParams& power,
                       const CatalogParams& catalog) {
  const double by_cache =
      std::floor(ap.cache_capacity_bits / catalog.file_size_bits);
  std::size_t limit = catalog.file_count;
  if (by_cache < static_cast<double>(limit)) {
    limit = static_cast<std::size_t>(std::max(0.0, by_cache));
  }
  // Largest j with a strictly positive transmit budget.
  const double per_file =
      power.caching_coeff_w_per_bit * catalog.file_size_bits;
  const double by_power = std::floor(power.max_power_w / per_file);
  std::size_t j = limit;
  if (by_power < static_cast<double>(limit)) {
    j = static_cast<std::size_t>(std::max(0.0, by_power));
  }
  while (j < limit && transmit_budget(power, j + 1, catalog.file_size_bits) > 0.0) {
    ++j;
  }
  while (j > 0 && !(transmit_budget(power, j, catalog.file_size_bits) > 0.0)) {
    --j;
  }
  return j;
}

Candidate build_candidate(const AccessPoint& ap, std::size_t prefix,
                          const PopularityModel& model,
                          const PowerParams& power,
                          const CatalogParams& catalog, double backhaul_unit_bps,
                          AllocationPolicy policy) {
  if (static_cast<double>(prefix) * catalog.file_size_bits >
      ap.cache_capacity_bits) {
    throw DomainError("prefix " + std::to_string(prefix) +
                      " does not fit the cache of AP " + std::to_string(ap.id));
  }
  if (!(backhaul_unit_bps > 0.0)) {
    throw DomainError("backhaul unit must be > 0");
  }
  Candidate c;
  c.ap_id = ap.id;
  c.prefix_len = prefix;
  c.allocation =
      policy == AllocationPolicy::kWaterFilling
          ? vabwf_allocate(ap.ue_gains, prefix, power, catalog.file_size_bits)
          : equal_split_allocate(ap.ue_gains, prefix, power,
                                 catalog.file_size_bits);
  c.sum_rate_bps = sum_rate(ap.ue_gains, c.allocation.powers_w, power);
  c.hit_ratio = model.hit_ratio(prefix);
  c.backhaul_bps = (1.0 - c.hit_ratio) * c.sum_rate_bps;
  c.backhaul_units =
      static_cast<std::int64_t>(std::ceil(c.backhaul_bps / backhaul_unit_bps));
  c.cache_utilization =
      ap.cache_capacity_bits > 0.0
          ? static_cast<double>(prefix) * catalog.file_size_bits /
                ap.cache_capacity_bits
          : 0.0;
  return c;
}

Candidate opt_out_candidate(const AccessPoint& ap) {
  Candidate c;
  c.ap_id = ap.id;
  c.opt_out = true;
  c.allocation.powers_w.assign(ap.ue_gains.size(), 0.0);
  return c;
}

std::vector<Candidate> build_class(const AccessPoint& ap,
                                   const PopularityModel& model,
                                   const PowerParams& power,
                                   const CatalogParams& catalog,
                                   double backhaul_unit_bps,
                                   AllocationPolicy policy) {
  std::vector<Candidate> items;
  items.push_back(opt_out_candidate(ap));
  if (!(transmit_budget(power, 0, catalog.file_size_bits) > 0.0)) return items;
  const std::size_t last = max_prefix(ap, power, catalog);
  items.reserve(last + 2);
  for (std::size_t j = 0; j <= last; ++j) {
    items.push_back(build_candidate(ap, j, model, power, catalog,
                                    backhaul_unit_bps, policy));
  }
  return items;
}

}  // namespace fiwi
