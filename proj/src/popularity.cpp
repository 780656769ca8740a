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

#include "fiwi/popularity.hpp"

#include <cmath>
#include <string>

#include "fiwi/errors.hpp"

namespace fiwi {

PopularityModel PopularityModel::zipf(std::size_t file_count, double delta) {
  if (file_count == 0) throw DomainError("zipf: file_count must be >= 1");
  if (!std::isfinite(delta) || delta < 0.0) {
    throw DomainError("zipf: delta must be finite and >= 0");
  }
  PopularityModel model;
  model.probabilities_.resize(file_count);
  for (std::size_t j = 0; j < file_count; ++j) {
    model.probabilities_[j] = std::pow(static_cast<double>(j + 1), -delta);
  }
  // Smallest terms first.
  long double norm = 0.0L;
  for (std::size_t j = file_count; j-- > 0;) norm += model.probabilities_[j];
  const double total = static_cast<double>(norm);
  for (double& p : model.probabilities_) p /= total;

  model.prefix_hit_.resize(file_count + 1);
  model.prefix_hit_[0] = 0.0;
  long double running = 0.0L;
  for (std::size_t j = 0; j < file_count; ++j) {
    running += model.probabilities_[j];
    model.prefix_hit_[j + 1] = static_cast<double>(running);
  }
  return model;
}

double PopularityModel::hit_ratio(std::size_t j) const {
  if (j >= prefix_hit_.size()) {
    throw RangeError("hit_ratio: prefix " + std::to_string(j) +
                     " exceeds catalog of " + std::to_string(file_count()));
  }
  return prefix_hit_[j];
}

double PopularityModel::hit_ratio_of(std::span<const std::size_t> ranks) const {
  std::vector<bool> seen(file_count(), false);
  long double hit = 0.0L;
  for (std::size_t rank : ranks) {
    if (rank >= file_count()) {
      throw RangeError("hit_ratio_of: rank " + std::to_string(rank) +
                       " out of range");
    }
    if (seen[rank]) continue;
    seen[rank] = true;
    hit += probabilities_[rank];
  }
  return static_cast<double>(hit);
}

}  // namespace fiwi
