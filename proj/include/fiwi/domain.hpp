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

// Physical model of a cache-enabled fiber-wireless access network.
//
// All quantities are SI: powers in watts, rates in bits/s, sizes in bits,
// bandwidths in Hz. Channel gains are linear power ratios; any dB
// conversion happens before values reach these types.

#ifndef FIWI_DOMAIN_HPP_
#define FIWI_DOMAIN_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace fiwi {

struct CatalogParams {
  std::size_t file_count = 1000;  // J
  double file_size_bits = 8e8;    // s (100 MB)
  double zipf_delta = 0.8;        // popularity skew

  bool operator==(const CatalogParams&) const = default;
};

struct PowerParams {
  double max_power_w = 7.0;           // P_M, shared by transmission and caching
  double amplifier_coeff = 1.2;       // rho
  double caching_coeff_w_per_bit = 6.25e-12;
  double circuit_power_w = 3.0;       // reported only, never budgeted
  double noise_power_w = 1.990535852767493e-15;  // -174 dBm/Hz over 500 kHz
  double subchannel_bw_hz = 5e5;      // B, one subchannel per UE

  bool operator==(const PowerParams&) const = default;
};

struct AccessPoint {
  std::size_t id = 0;
  double cache_capacity_bits = 0.0;  // Q_n
  std::vector<double> ue_gains;      // g_nk, one per associated UE

  bool operator==(const AccessPoint&) const = default;
};

struct Scenario {
  std::vector<AccessPoint> aps;
  CatalogParams catalog;
  PowerParams power;
  double backhaul_capacity_bps = 2.488e9;  // C
  double backhaul_unit_bps = 1e6;          // DP weight granularity

  std::size_t total_ues() const;
  bool operator==(const Scenario&) const = default;
};

// Transmit powers of one AP for one caching choice.
struct PowerAllocation {
  std::vector<double> powers_w;  // aligned with AccessPoint::ue_gains
  std::size_t cached_prefix = 0;
  double water_level_w = 0.0;

  bool operator==(const PowerAllocation&) const = default;
};

// What one AP ends up doing in a Solution.
struct ApDecision {
  std::size_t ap_id = 0;
  std::size_t prefix_len = 0;  // number of cached files
  // Explicit 0-based popularity ranks when the cache is not a top-j prefix
  // (random baseline only). Empty means the top `prefix_len` files.
  std::vector<std::size_t> cached_files;
  PowerAllocation allocation;
  double sum_rate_bps = 0.0;
  double hit_ratio = 0.0;
  double backhaul_bps = 0.0;
  std::int64_t backhaul_units = 0;
  double cache_utilization = 0.0;  // cached bits / Q_n
  bool opt_out = false;            // AP selected nothing and transmits nothing
};

struct Solution {
  std::vector<ApDecision> aps;
  double total_throughput_bps = 0.0;
  double backhaul_used_bps = 0.0;    // continuous sum of per-AP occupancy
  std::int64_t backhaul_units_used = 0;
  double mean_cache_utilization = 0.0;
  bool feasible = true;
  // Scale applied to miss traffic when a baseline overran the backhaul.
  double throttle_factor = 1.0;
};

// Received SINR. `interference` holds (gain, power) pairs of co-channel APs.
double sinr(double own_gain, double own_power_w,
            std::span<const std::pair<double, double>> interference,
            double noise_w);

// B * log2(1 + g*P/sigma^2).
double shannon_rate(double gain, double power_w, double noise_w,
                    double bandwidth_hz);

double noise_power_from_density(double density_dbm_per_hz,
                                double bandwidth_hz);

// Energy-proportional caching power w*j*s.
double caching_power(std::size_t files, double file_size_bits,
                     double coeff_w_per_bit);

// Transmit budget (P_M - w*j*s)/rho left after caching j files.
double transmit_budget(const PowerParams& power, std::size_t files,
                       double file_size_bits);

// Backhaul capacity expressed in DP weight units. Values within 1e-9 of an
// integer snap to it; anything else rounds down.
std::int64_t capacity_units(double capacity_bps, double unit_bps);

// Throws DomainError on the first violated invariant.
void validate(const CatalogParams& catalog);
void validate(const PowerParams& power);
void validate(const AccessPoint& ap);
void validate(const Scenario& scenario);

}  // namespace fiwi

#endif  // FIWI_DOMAIN_HPP_
