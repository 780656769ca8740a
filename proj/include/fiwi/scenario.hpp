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

// Scenario generation and the on-disk scenario format.
//
// Channel gains are i.i.d. exponential (Rayleigh power gains). Their mean is
// pinned by one knob, `mean_snr_ref_db`: the SNR a UE with the mean gain
// would see if its AP split the full transmit budget P_M/rho equally across
// its UEs,
//
//   g_mean * (P_M / rho / ues_per_ap) / sigma^2 = 10^(mean_snr_ref_db / 10).
//
// Gain g_nk is the first exponential variate of RngStream(seed, n, k).

#ifndef FIWI_SCENARIO_HPP_
#define FIWI_SCENARIO_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "fiwi/domain.hpp"

namespace fiwi {

inline constexpr int kScenarioFormatVersion = 1;

struct GeneratorConfig {
  std::uint64_t seed = 1;
  std::size_t num_aps = 32;
  std::size_t ues_per_ap = 20;
  double mean_snr_ref_db = 20.0;

  std::size_t file_count = 1000;
  double file_size_bits = 8e8;          // 100 MB
  double zipf_delta = 0.8;
  double cache_capacity_bits = 2.4e11;  // 30 GB

  double max_power_w = 7.0;
  double amplifier_coeff = 1.2;
  double caching_coeff_w_per_bit = 6.25e-12;
  double circuit_power_w = 3.0;
  double noise_density_dbm_per_hz = -174.0;
  double subchannel_bw_hz = 5e5;
  double system_bw_hz = 2e7;  // only a ceiling on ues_per_ap * subchannel_bw

  double backhaul_capacity_bps = 2.488e9;
  double backhaul_unit_bps = 1e6;

  bool operator==(const GeneratorConfig&) const = default;
};

void validate(const GeneratorConfig& config);

// Mean exponential gain implied by the reference SNR.
double mean_gain(const GeneratorConfig& config);

Scenario generate(const GeneratorConfig& config);

// JSON encoding. Decoders throw ParseError naming the offending field.
nlohmann::json to_json(const Scenario& scenario);
Scenario scenario_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const GeneratorConfig& config);
// Fields absent from `doc` keep the defaults of `base`.
GeneratorConfig generator_config_from_json(const nlohmann::json& doc,
                                           GeneratorConfig base = {});

// Parses text into JSON; syntax errors become ParseError with a line number.
nlohmann::json parse_json_text(const std::string& text,
                               const std::string& source);

Scenario parse_scenario(const std::string& text,
                        const std::string& source = "<string>");
Scenario load_scenario(const std::filesystem::path& path);
void save_scenario(const Scenario& scenario, const std::filesystem::path& path);

}  // namespace fiwi

#endif  // FIWI_SCENARIO_HPP_
