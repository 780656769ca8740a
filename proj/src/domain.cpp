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

#include "fiwi/domain.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fiwi/errors.hpp"

namespace fiwi {
namespace {

void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) {
    throw DomainError(std::string(name) + " must be finite");
  }
}

void require_positive(double value, const char* name) {
  require_finite(value, name);
  if (value <= 0.0) throw DomainError(std::string(name) + " must be > 0");
}

}  // namespace

std::size_t Scenario::total_ues() const {
  std::size_t total = 0;
  for (const auto& ap : aps) total += ap.ue_gains.size();
  return total;
}

double sinr(double own_gain, double own_power_w,
            std::span<const std::pair<double, double>> interference,
            double noise_w) {
  require_finite(own_gain, "gain");
  require_finite(own_power_w, "power");
  require_positive(noise_w, "noise");
  if (own_gain < 0.0 || own_power_w < 0.0) {
    throw DomainError("gain and power must be non-negative");
  }
  double denominator = 0.0;
  for (const auto& [gain, power] : interference) {
    require_finite(gain, "interference gain");
    require_finite(power, "interference power");
    if (gain < 0.0 || power < 0.0) {
      throw DomainError("interference terms must be non-negative");
    }
    denominator += gain * power;
  }
  denominator += noise_w;
  return own_gain * own_power_w / denominator;
}

double shannon_rate(double gain, double power_w, double noise_w,
                    double bandwidth_hz) {
  require_positive(bandwidth_hz, "bandwidth");
  require_positive(noise_w, "noise");
  require_positive(gain, "gain");
  require_finite(power_w, "power");
  if (power_w < 0.0) throw DomainError("power must be non-negative");
  return bandwidth_hz * std::log1p(gain * power_w / noise_w) / std::numbers::ln2;
}

double noise_power_from_density(double density_dbm_per_hz,
                                double bandwidth_hz) {
  require_finite(density_dbm_per_hz, "noise density");
  require_positive(bandwidth_hz, "bandwidth");
  return std::pow(10.0, (density_dbm_per_hz - 30.0) / 10.0) * bandwidth_hz;
}

double caching_power(std::size_t files, double file_size_bits,
                     double coeff_w_per_bit) {
  return coeff_w_per_bit * static_cast<double>(files) * file_size_bits;
}

double transmit_budget(const PowerParams& power, std::size_t files,
                       double file_size_bits) {
  return (power.max_power_w -
          caching_power(files, file_size_bits, power.caching_coeff_w_per_bit)) /
         power.amplifier_coeff;
}

std::int64_t capacity_units(double capacity_bps, double unit_bps) {
  require_positive(unit_bps, "backhaul unit");
  if (std::isnan(capacity_bps) || capacity_bps < 0.0) {
    throw DomainError("backhaul capacity must be >= 0");
  }
  const double ratio = capacity_bps / unit_bps;
  constexpr double kMaxUnits = 9.0e18;
  if (ratio >= kMaxUnits) return static_cast<std::int64_t>(kMaxUnits);
  const double nearest = std::round(ratio);
  if (std::abs(ratio - nearest) <= 1e-9 * std::max(1.0, ratio)) {
    return static_cast<std::int64_t>(nearest);
  }
  return static_cast<std::int64_t>(std::floor(ratio));
}

void validate(const CatalogParams& catalog) {
  if (catalog.file_count < 1) throw DomainError("file_count must be >= 1");
  require_positive(catalog.file_size_bits, "file_size_bits");
  require_finite(catalog.zipf_delta, "zipf_delta");
  if (catalog.zipf_delta < 0.0) throw DomainError("zipf_delta must be >= 0");
}

void validate(const PowerParams& power) {
  require_positive(power.max_power_w, "max_power_w");
  require_positive(power.amplifier_coeff, "amplifier_coeff");
  require_positive(power.caching_coeff_w_per_bit, "caching_coeff_w_per_bit");
  require_finite(power.circuit_power_w, "circuit_power_w");
  if (power.circuit_power_w < 0.0) {
    throw DomainError("circuit_power_w must be >= 0");
  }
  require_positive(power.noise_power_w, "noise_power_w");
  require_positive(power.subchannel_bw_hz, "subchannel_bw_hz");
}

void validate(const AccessPoint& ap) {
  require_finite(ap.cache_capacity_bits, "cache_capacity_bits");
  if (ap.cache_capacity_bits < 0.0) {
    throw DomainError("cache_capacity_bits must be >= 0");
  }
  if (ap.ue_gains.empty()) {
    throw DomainError("AP " + std::to_string(ap.id) + " has no UEs");
  }
  for (double g : ap.ue_gains) require_positive(g, "ue gain");
}

void validate(const Scenario& scenario) {
  if (scenario.aps.empty()) throw DomainError("scenario has no APs");
  validate(scenario.catalog);
  validate(scenario.power);
  for (const auto& ap : scenario.aps) validate(ap);
  if (std::isnan(scenario.backhaul_capacity_bps) ||
      scenario.backhaul_capacity_bps < 0.0) {
    throw DomainError("backhaul_capacity_bps must be >= 0");
  }
  require_positive(scenario.backhaul_unit_bps, "backhaul_unit_bps");
}

}  // namespace fiwi
