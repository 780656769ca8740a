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

// Comparison algorithms.
//
// Baselines that overrun the backhaul are not rejected. Their cache-miss
// traffic is scaled by C / sum(backhaul) so that exactly C is used, the
// Solution is flagged infeasible, and the reported throughput is
// sum(hit * nu) + C.

#ifndef FIWI_BASELINES_HPP_
#define FIWI_BASELINES_HPP_

#include <cstdint>

#include "fiwi/domain.hpp"

namespace fiwi {

// Every AP caches as many top files as fit, then water-fills what is left.
Solution full_cache(const Scenario& scenario);

// Prefix length chosen by the same knapsack DP as the proposed solver, but
// each UE gets an equal share of the transmit budget.
Solution equal_power(const Scenario& scenario);

// Every AP fills its cache with files drawn uniformly without replacement
// and splits the transmit budget equally. Draws for AP n come from
// RngStream(seed, n, kRandomCacheStream).
Solution random_cache(const Scenario& scenario, std::uint64_t seed);

inline constexpr std::uint64_t kRandomCacheStream = 0x52414E44;  // "RAND"

// Applies the throttling rule above in place.
void apply_backhaul_throttle(Solution& solution, double capacity_bps);

}  // namespace fiwi

#endif  // FIWI_BASELINES_HPP_
