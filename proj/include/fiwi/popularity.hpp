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

#ifndef FIWI_POPULARITY_HPP_
#define FIWI_POPULARITY_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace fiwi {

// Zipf request distribution over a catalog ranked by popularity, with the
// hit ratio of every top-j prefix precomputed.
class PopularityModel {
 public:
  // p_j = j^-delta / sum_i i^-delta. Throws DomainError for J = 0 or
  // negative/non-finite delta.
  static PopularityModel zipf(std::size_t file_count, double delta);

  std::size_t file_count() const { return probabilities_.size(); }

  // Rank-ordered request probabilities, index 0 is the most popular file.
  std::span<const double> probabilities() const { return probabilities_; }

  // prefix_hit()[j] is the hit ratio of caching the top j files.
  std::span<const double> prefix_hit() const { return prefix_hit_; }

  // Throws RangeError for j > J.
  double hit_ratio(std::size_t j) const;
  double miss_ratio(std::size_t j) const { return 1.0 - hit_ratio(j); }

  // Hit ratio of an arbitrary set of 0-based ranks. Throws RangeError on an
  // out-of-range rank; duplicates are counted once.
  double hit_ratio_of(std::span<const std::size_t> ranks) const;

 private:
  std::vector<double> probabilities_;
  std::vector<double> prefix_hit_;
};

inline PopularityModel zipf_pmf(std::size_t file_count, double delta) {
  return PopularityModel::zipf(file_count, delta);
}

}  // namespace fiwi

#endif  // FIWI_POPULARITY_HPP_
