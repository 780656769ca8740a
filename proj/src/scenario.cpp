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

#include "fiwi/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "fiwi/errors.hpp"
#include "fiwi/rng.hpp"

namespace fiwi {
namespace {

using nlohmann::json;

const json& require(const json& obj, const std::string& key,
                    const std::string& path) {
  if (!obj.is_object()) throw ParseError(path + ": expected an object", path);
  auto it = obj.find(key);
  if (it == obj.end()) {
    const std::string field = path.empty() ? key : path + "." + key;
    throw ParseError("missing field '" + field + "'", field);
  }
  return *it;
}

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

double get_number(const json& obj, const std::string& key,
                  const std::string& path) {
  const json& v = require(obj, key, path);
  if (!v.is_number()) {
    throw ParseError("field '" + join(path, key) + "' must be a number",
                     join(path, key));
  }
  return v.get<double>();
}

std::uint64_t get_unsigned(const json& obj, const std::string& key,
                           const std::string& path) {
  const json& v = require(obj, key, path);
  if (!v.is_number_unsigned()) {
    throw ParseError(
        "field '" + join(path, key) + "' must be a non-negative integer",
        join(path, key));
  }
  return v.get<std::uint64_t>();
}

template <typename T>
void maybe(const json& obj, const std::string& key, T& out) {
  auto it = obj.find(key);
  if (it == obj.end()) return;
  if constexpr (std::is_integral_v<T>) {
    if (!it->is_number_unsigned()) {
      throw ParseError("field '" + key + "' must be a non-negative integer",
                       key);
    }
  } else {
    if (!it->is_number()) {
      throw ParseError("field '" + key + "' must be a number", key);
    }
  }
  out = it->get<T>();
}

std::size_t line_of(const std::string& text, std::size_t byte) {
  const std::size_t end = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(
                 std::count(text.begin(), text.begin() + end, '\n'));
}

// Domain errors raised while checking a decoded scenario become parse errors.
template <typename F>
void as_parse_error(F&& check, const std::string& field) {
  try {
    check();
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid scenario: ") + e.what(), field);
  }
}

}  // namespace

void validate(const GeneratorConfig& config) {
  if (config.num_aps < 1) throw DomainError("num_aps must be >= 1");
  if (config.ues_per_ap < 1) throw DomainError("ues_per_ap must be >= 1");
  if (!std::isfinite(config.mean_snr_ref_db)) {
    throw DomainError("mean_snr_ref_db must be finite");
  }
  CatalogParams catalog{config.file_count, config.file_size_bits,
                        config.zipf_delta};
  validate(catalog);
  if (!std::isfinite(config.noise_density_dbm_per_hz)) {
    throw DomainError("noise_density_dbm_per_hz must be finite");
  }
  PowerParams power{config.max_power_w, config.amplifier_coeff,
                    config.caching_coeff_w_per_bit, config.circuit_power_w,
                    1.0, config.subchannel_bw_hz};
  validate(power);
  if (!std::isfinite(config.cache_capacity_bits) ||
      config.cache_capacity_bits < 0.0) {
    throw DomainError("cache_capacity_bits must be >= 0");
  }
  if (!(config.system_bw_hz > 0.0)) throw DomainError("system_bw_hz must be > 0");
  if (static_cast<double>(config.ues_per_ap) * config.subchannel_bw_hz >
      config.system_bw_hz) {
    throw DomainError("ues_per_ap * subchannel_bw_hz exceeds system_bw_hz");
  }
  if (std::isnan(config.backhaul_capacity_bps) ||
      config.backhaul_capacity_bps < 0.0) {
    throw DomainError("backhaul_capacity_bps must be >= 0");
  }
  if (!(config.backhaul_unit_bps > 0.0)) {
    throw DomainError("backhaul_unit_bps must be > 0");
  }
}

double mean_gain(const GeneratorConfig& config) {
  const double noise = noise_power_from_density(config.noise_density_dbm_per_hz,
                                                config.subchannel_bw_hz);
  const double per_ue_power = config.max_power_w / config.amplifier_coeff /
                              static_cast<double>(config.ues_per_ap);
  return std::pow(10.0, config.mean_snr_ref_db / 10.0) * noise / per_ue_power;
}

Scenario generate(const GeneratorConfig& config) {
  validate(config);
  Scenario s;
  s.catalog = {config.file_count, config.file_size_bits, config.zipf_delta};
  s.power.max_power_w = config.max_power_w;
  s.power.amplifier_coeff = config.amplifier_coeff;
  s.power.caching_coeff_w_per_bit = config.caching_coeff_w_per_bit;
  s.power.circuit_power_w = config.circuit_power_w;
  s.power.noise_power_w = noise_power_from_density(
      config.noise_density_dbm_per_hz, config.subchannel_bw_hz);
  s.power.subchannel_bw_hz = config.subchannel_bw_hz;
  s.backhaul_capacity_bps = config.backhaul_capacity_bps;
  s.backhaul_unit_bps = config.backhaul_unit_bps;

  const double g_mean = mean_gain(config);
  s.aps.resize(config.num_aps);
  for (std::size_t n = 0; n < config.num_aps; ++n) {
    AccessPoint& ap = s.aps[n];
    ap.id = n;
    ap.cache_capacity_bits = config.cache_capacity_bits;
    ap.ue_gains.resize(config.ues_per_ap);
    for (std::size_t k = 0; k < config.ues_per_ap; ++k) {
      RngStream stream(config.seed, n, k);
      double g = stream.exponential(g_mean);
      // A zero draw has probability 2^-53; keep the gain strictly positive.
      if (!(g > 0.0)) g = g_mean * 0x1.0p-53;
      ap.ue_gains[k] = g;
    }
  }
  return s;
}

json to_json(const Scenario& s) {
  json aps = json::array();
  for (const auto& ap : s.aps) {
    aps.push_back({{"id", ap.id},
                   {"cache_capacity_bits", ap.cache_capacity_bits},
                   {"ue_gains", ap.ue_gains}});
  }
  return {
      {"format_version", kScenarioFormatVersion},
      {"backhaul_capacity_bps", s.backhaul_capacity_bps},
      {"backhaul_unit_bps", s.backhaul_unit_bps},
      {"catalog",
       {{"file_count", s.catalog.file_count},
        {"file_size_bits", s.catalog.file_size_bits},
        {"zipf_delta", s.catalog.zipf_delta}}},
      {"power",
       {{"max_power_w", s.power.max_power_w},
        {"amplifier_coeff", s.power.amplifier_coeff},
        {"caching_coeff_w_per_bit", s.power.caching_coeff_w_per_bit},
        {"circuit_power_w", s.power.circuit_power_w},
        {"noise_power_w", s.power.noise_power_w},
        {"subchannel_bw_hz", s.power.subchannel_bw_hz}}},
      {"aps", aps},
  };
}

Scenario scenario_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("scenario must be a JSON object", "");
  const auto version = get_unsigned(doc, "format_version", "");
  if (version != kScenarioFormatVersion) {
    throw ParseError("unsupported format_version " + std::to_string(version),
                     "format_version");
  }
  Scenario s;
  s.backhaul_capacity_bps = get_number(doc, "backhaul_capacity_bps", "");
  s.backhaul_unit_bps = get_number(doc, "backhaul_unit_bps", "");

  const json& cat = require(doc, "catalog", "");
  s.catalog.file_count = get_unsigned(cat, "file_count", "catalog");
  s.catalog.file_size_bits = get_number(cat, "file_size_bits", "catalog");
  s.catalog.zipf_delta = get_number(cat, "zipf_delta", "catalog");
  as_parse_error([&] { validate(s.catalog); }, "catalog");

  const json& pw = require(doc, "power", "");
  s.power.max_power_w = get_number(pw, "max_power_w", "power");
  s.power.amplifier_coeff = get_number(pw, "amplifier_coeff", "power");
  s.power.caching_coeff_w_per_bit =
      get_number(pw, "caching_coeff_w_per_bit", "power");
  s.power.circuit_power_w = get_number(pw, "circuit_power_w", "power");
  s.power.noise_power_w = get_number(pw, "noise_power_w", "power");
  s.power.subchannel_bw_hz = get_number(pw, "subchannel_bw_hz", "power");
  as_parse_error([&] { validate(s.power); }, "power");

  const json& aps = require(doc, "aps", "");
  if (!aps.is_array()) throw ParseError("field 'aps' must be an array", "aps");
  for (std::size_t i = 0; i < aps.size(); ++i) {
    const std::string path = "aps[" + std::to_string(i) + "]";
    AccessPoint ap;
    ap.id = get_unsigned(aps[i], "id", path);
    ap.cache_capacity_bits = get_number(aps[i], "cache_capacity_bits", path);
    const json& gains = require(aps[i], "ue_gains", path);
    if (!gains.is_array()) {
      throw ParseError("field '" + path + ".ue_gains' must be an array",
                       path + ".ue_gains");
    }
    for (std::size_t k = 0; k < gains.size(); ++k) {
      if (!gains[k].is_number()) {
        const std::string field =
            path + ".ue_gains[" + std::to_string(k) + "]";
        throw ParseError("field '" + field + "' must be a number", field);
      }
      ap.ue_gains.push_back(gains[k].get<double>());
    }
    as_parse_error([&] { validate(ap); }, path);
    s.aps.push_back(std::move(ap));
  }
  as_parse_error([&] { validate(s); }, "");
  return s;
}

json to_json(const GeneratorConfig& c) {
  return {
      {"seed", c.seed},
      {"num_aps", c.num_aps},
      {"ues_per_ap", c.ues_per_ap},
      {"mean_snr_ref_db", c.mean_snr_ref_db},
      {"file_count", c.file_count},
      {"file_size_bits", c.file_size_bits},
      {"zipf_delta", c.zipf_delta},
      {"cache_capacity_bits", c.cache_capacity_bits},
      {"max_power_w", c.max_power_w},
      {"amplifier_coeff", c.amplifier_coeff},
      {"caching_coeff_w_per_bit", c.caching_coeff_w_per_bit},
      {"circuit_power_w", c.circuit_power_w},
      {"noise_density_dbm_per_hz", c.noise_density_dbm_per_hz},
      {"subchannel_bw_hz", c.subchannel_bw_hz},
      {"system_bw_hz", c.system_bw_hz},
      {"backhaul_capacity_bps", c.backhaul_capacity_bps},
      {"backhaul_unit_bps", c.backhaul_unit_bps},
  };
}

GeneratorConfig generator_config_from_json(const json& doc,
                                           GeneratorConfig base) {
  if (!doc.is_object()) {
    throw ParseError("generator config must be a JSON object", "");
  }
  static const char* const kKnown[] = {
      "seed", "num_aps", "ues_per_ap", "mean_snr_ref_db", "file_count",
      "file_size_bits", "zipf_delta", "cache_capacity_bits", "max_power_w",
      "amplifier_coeff", "caching_coeff_w_per_bit", "circuit_power_w",
      "noise_density_dbm_per_hz", "subchannel_bw_hz", "system_bw_hz",
      "backhaul_capacity_bps", "backhaul_unit_bps"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find(std::begin(kKnown), std::end(kKnown), key) ==
        std::end(kKnown)) {
      throw ParseError("unknown generator field '" + key + "'", key);
    }
  }
  maybe(doc, "seed", base.seed);
  maybe(doc, "num_aps", base.num_aps);
  maybe(doc, "ues_per_ap", base.ues_per_ap);
  maybe(doc, "mean_snr_ref_db", base.mean_snr_ref_db);
  maybe(doc, "file_count", base.file_count);
  maybe(doc, "file_size_bits", base.file_size_bits);
  maybe(doc, "zipf_delta", base.zipf_delta);
  maybe(doc, "cache_capacity_bits", base.cache_capacity_bits);
  maybe(doc, "max_power_w", base.max_power_w);
  maybe(doc, "amplifier_coeff", base.amplifier_coeff);
  maybe(doc, "caching_coeff_w_per_bit", base.caching_coeff_w_per_bit);
  maybe(doc, "circuit_power_w", base.circuit_power_w);
  maybe(doc, "noise_density_dbm_per_hz", base.noise_density_dbm_per_hz);
  maybe(doc, "subchannel_bw_hz", base.subchannel_bw_hz);
  maybe(doc, "system_bw_hz", base.system_bw_hz);
  maybe(doc, "backhaul_capacity_bps", base.backhaul_capacity_bps);
  maybe(doc, "backhaul_unit_bps", base.backhaul_unit_bps);
  try {
    validate(base);
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid generator config: ") + e.what(), "");
  }
  return base;
}

json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t line = line_of(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(source + ":" + std::to_string(line) + ": " + e.what(), "",
                     line);
  }
}

Scenario parse_scenario(const std::string& text, const std::string& source) {
  const json doc = parse_json_text(text, source);
  try {
    return scenario_from_json(doc);
  } catch (const ParseError& e) {
    throw ParseError(source + ": " + e.what(), e.field(), e.line());
  }
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string(), "");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), path.string());
}

void save_scenario(const Scenario& scenario, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << to_json(scenario).dump(2) << '\n';
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace fiwi
