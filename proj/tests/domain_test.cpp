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

#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "fiwi/errors.hpp"

namespace fiwi {
namespace {

using Terms = std::vector<std::pair<double, double>>;

TEST(SinrTest, ZeroPowerGivesZero) {
  EXPECT_EQ(sinr(1.0, 0.0, Terms{}, 1.0), 0.0);
}

TEST(SinrTest, InterferenceEntersDenominator) {
  EXPECT_DOUBLE_EQ(sinr(2.0, 3.0, Terms{{1.0, 4.0}}, 2.0), 1.0);
}

TEST(SinrTest, TypicalSnr) {
  // 1e-12 * 5.8333 / 2e-15 by hand.
  EXPECT_NEAR(sinr(1e-12, 5.8333, Terms{}, 2e-15), 2916.65, 1e-9);
}

TEST(SinrTest, RejectsNonFinite) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(sinr(nan, 1.0, Terms{}, 1.0), DomainError);
  EXPECT_THROW(sinr(1.0, 1.0, Terms{{nan, 1.0}}, 1.0), DomainError);
  EXPECT_THROW(sinr(1.0, 1.0, Terms{}, 0.0), DomainError);
}

TEST(ShannonRateTest, Examples) {
  EXPECT_EQ(shannon_rate(1.0, 0.0, 1.0, 5e5), 0.0);
  EXPECT_DOUBLE_EQ(shannon_rate(1.0, 1.0, 1.0, 5e5), 5e5);
  // 5e5 * log2(6.8333), 40-digit reference.
  EXPECT_NEAR(shannon_rate(1.0, 5.8333, 1.0, 5e5), 1386291.233171489, 1e-6);
}

TEST(ShannonRateTest, RejectsBadArguments) {
  EXPECT_THROW(shannon_rate(1.0, 1.0, 1.0, 0.0), DomainError);
  EXPECT_THROW(shannon_rate(1.0, 1.0, -1.0, 5e5), DomainError);
  EXPECT_THROW(shannon_rate(0.0, 1.0, 1.0, 5e5), DomainError);
  EXPECT_THROW(shannon_rate(1.0, -1.0, 1.0, 5e5), DomainError);
}

TEST(ShannonRateTest, StrictlyIncreasingInPowerAndGain) {
  double last = -1.0;
  for (double p = 0.0; p <= 10.0; p += 0.25) {
    const double r = shannon_rate(1e-12, p, 2e-15, 5e5);
    EXPECT_GT(r, last);
    last = r;
  }
  last = -1.0;
  for (double g = 1e-14; g <= 1e-10; g *= 1.5) {
    const double r = shannon_rate(g, 1.0, 2e-15, 5e5);
    EXPECT_GT(r, last);
    last = r;
  }
}

TEST(ShannonRateTest, MatchesSinrWithoutInterference) {
  for (double g : {1e-13, 3e-12, 1e-10}) {
    for (double p : {0.01, 0.3, 5.0}) {
      const double ratio = sinr(g, p, Terms{}, 2e-15);
      EXPECT_EQ(ratio, g * p / 2e-15);
      EXPECT_DOUBLE_EQ(shannon_rate(g, p, 2e-15, 5e5),
                       5e5 * std::log2(1.0 + ratio));
    }
  }
}

TEST(NoisePowerTest, ThermalNoise) {
  // 10^((-174 + 10 log10(5e5) - 30) / 10).
  EXPECT_NEAR(noise_power_from_density(-174.0, 5e5), 1.990535852767493e-15,
              1e-27);
  EXPECT_NEAR(noise_power_from_density(-30.0, 1.0), 1e-6, 1e-21);
  EXPECT_NEAR(noise_power_from_density(-174.0, 2e7), 7.962143411069971e-14,
              1e-26);
  EXPECT_EQ(PowerParams{}.noise_power_w, noise_power_from_density(-174.0, 5e5));
}

TEST(CachingPowerTest, Examples) {
  EXPECT_EQ(caching_power(0, 8e8, 6.25e-12), 0.0);
  EXPECT_DOUBLE_EQ(caching_power(1, 8e8, 6.25e-12), 5e-3);
  EXPECT_DOUBLE_EQ(caching_power(300, 8e8, 6.25e-12), 1.5);
}

TEST(CachingPowerTest, Linear) {
  for (std::size_t a : {0u, 3u, 17u, 150u}) {
    for (std::size_t b : {0u, 1u, 99u}) {
      EXPECT_DOUBLE_EQ(caching_power(a + b, 8e8, 6.25e-12),
                       caching_power(a, 8e8, 6.25e-12) +
                           caching_power(b, 8e8, 6.25e-12));
    }
  }
}

TEST(TransmitBudgetTest, CircuitPowerIsNotBudgeted) {
  PowerParams p;
  const double before = transmit_budget(p, 300, 8e8);
  p.circuit_power_w = 100.0;
  EXPECT_EQ(transmit_budget(p, 300, 8e8), before);
  EXPECT_DOUBLE_EQ(before, (7.0 - 1.5) / 1.2);
}

TEST(CapacityUnitsTest, SnapsAndFloors) {
  EXPECT_EQ(capacity_units(2.488e9, 1e6), 2488);
  EXPECT_EQ(capacity_units(0.0, 1e6), 0);
  EXPECT_EQ(capacity_units(1.5e6, 1e6), 1);
  EXPECT_EQ(capacity_units(3.0000000000001e6, 1e6), 3);
  EXPECT_THROW(capacity_units(-1.0, 1e6), DomainError);
  EXPECT_THROW(capacity_units(1.0, 0.0), DomainError);
}

TEST(ValidateTest, RejectsBrokenScenarios) {
  Scenario s;
  EXPECT_THROW(validate(s), DomainError);  // no APs
  s.aps.push_back({0, 2.4e11, {1e-12}});
  EXPECT_NO_THROW(validate(s));
  s.aps[0].ue_gains.clear();
  EXPECT_THROW(validate(s), DomainError);
  s.aps[0].ue_gains = {0.0};
  EXPECT_THROW(validate(s), DomainError);
  s.aps[0].ue_gains = {1e-12};
  s.aps[0].cache_capacity_bits = -1.0;
  EXPECT_THROW(validate(s), DomainError);
  s.aps[0].cache_capacity_bits = 0.0;
  s.catalog.file_count = 0;
  EXPECT_THROW(validate(s), DomainError);
  s.catalog.file_count = 10;
  s.power.noise_power_w = 0.0;
  EXPECT_THROW(validate(s), DomainError);
  s.power.noise_power_w = 1e-15;
  s.backhaul_unit_bps = 0.0;
  EXPECT_THROW(validate(s), DomainError);
}

}  // namespace
}  // namespace fiwi
