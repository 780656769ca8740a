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

// Volume-adjustable backhaul-constrained water-filling (VABWF).
//
// For a fixed caching prefix j the per-AP problem is concave in the powers,
// so the optimum is classical water-filling over the floors sigma^2/g_k with
// a water volume that shrinks as the cache grows:
//
//   T  = (P_M - w*j*s) / rho
//   WL = (T + sum_{k in S} sigma^2/g_k) / |S|
//   P_k = WL - sigma^2/g_k  for k in S, 0 otherwise
//
// where S is found by repeatedly dropping users whose power would be
// negative. Every allocation spends the whole budget: sum rho*P_k + w*j*s
// equals P_M up to rounding.

#ifndef FIWI_VABWF_HPP_
#define FIWI_VABWF_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fiwi/domain.hpp"
#include "fiwi/popularity.hpp"

namespace fiwi {

enum class AllocationPolicy {
  kWaterFilling,  // VABWF
  kEqualSplit,    // T/|Phi_n| per UE, used by the equal-power baseline
};

// One item A_nj of the multiple-choice knapsack: AP n caching its top j files.
struct Candidate {
  std::size_t ap_id = 0;
  std::size_t prefix_len = 0;
  PowerAllocation allocation;
  double sum_rate_bps = 0.0;  // nu
  double hit_ratio = 0.0;
  double backhaul_bps = 0.0;  // (1 - hit) * nu
  std::int64_t backhaul_units = 0;
  double cache_utilization = 0.0;
  bool opt_out = false;
};

// Water-filling over explicit floors sigma^2/g (which may be 0). Returns the
// powers and final water level; `cached_prefix` is left at 0. Throws
// DomainError on an empty or non-finite input and NoTransmitBudget when
// budget <= 0.
PowerAllocation waterfill(std::span<const double> floors, double budget);

PowerAllocation vabwf_allocate(std::span<const double> gains, std::size_t prefix,
                               const PowerParams& power, double file_size_bits);

PowerAllocation equal_split_allocate(std::span<const double> gains,
                                     std::size_t prefix,
                                     const PowerParams& power,
                                     double file_size_bits);

// Sum of per-UE Shannon rates for the given powers.
double sum_rate(std::span<const double> gains, std::span<const double> powers,
                const PowerParams& power);

// Largest cacheable prefix: bounded by the cache size, the catalog size and
// a strictly positive transmit budget.
std::size_t max_prefix(const AccessPoint& ap, const PowerParams& power,
                       const CatalogParams& catalog);

Candidate build_candidate(const AccessPoint& ap, std::size_t prefix,
                          const PopularityModel& model,
                          const PowerParams& power,
                          const CatalogParams& catalog, double backhaul_unit_bps,
                          AllocationPolicy policy = AllocationPolicy::kWaterFilling);

// The zero-profit, zero-weight item standing for "AP n selects nothing".
Candidate opt_out_candidate(const AccessPoint& ap);

// The MCKP class of one AP: OPT-OUT first, then j = 0, 1, ..., max_prefix.
std::vector<Candidate> build_class(
    const AccessPoint& ap, const PopularityModel& model,
    const PowerParams& power, const CatalogParams& catalog,
    double backhaul_unit_bps,
    AllocationPolicy policy = AllocationPolicy::kWaterFilling);

}  // namespace fiwi

#endif  // FIWI_VABWF_HPP_
