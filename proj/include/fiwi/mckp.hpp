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

// Multiple-choice knapsack over the per-AP candidate classes.
//
// R(n, c) is the best total rate using the first n classes within c weight
// units:
//
//   R(n, c) = max( R(n-1, c),  max_j { R(n-1, c - w_nj) + v_nj : w_nj <= c } )
//
// The R(n-1, c) branch is the OPT-OUT choice. Ties keep the incumbent, and
// among items the earliest (smallest prefix) wins. Two value rows are kept;
// the traceback is N x (C+1) item indices.

#ifndef FIWI_MCKP_HPP_
#define FIWI_MCKP_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "fiwi/domain.hpp"
#include "fiwi/vabwf.hpp"

namespace fiwi {

struct MckpItem {
  double value = 0.0;
  std::int64_t weight = 0;
};

using MckpClass = std::vector<MckpItem>;

inline constexpr int kNoItem = -1;

struct MckpSelection {
  std::vector<int> choice;  // item index per class, kNoItem for opt-out
  double total_value = 0.0;
  std::int64_t total_weight = 0;
};

// Called once per finished DP row n (1-based) with R(n, 0..C').
using DpRowObserver =
    std::function<void(std::size_t n, std::span<const double> row)>;

// Capacity beyond the sum of the heaviest item per class is slack, so the
// table is truncated there. Throws DomainError on negative weights or
// capacity and on non-finite values.
MckpSelection solve_mckp(std::span<const MckpClass> classes,
                         std::int64_t capacity,
                         const DpRowObserver& observer = {});

// Candidate-level solve. OPT-OUT candidates map onto the incumbent branch.
Solution mckp_solve(std::span<const std::vector<Candidate>> classes,
                    std::int64_t capacity_units);

// Item view of candidate classes: OPT-OUT entries are dropped, and
// `index_map[n][i]` gives the candidate index of item i in class n.
struct CandidateItems {
  std::vector<MckpClass> classes;
  std::vector<std::vector<std::size_t>> index_map;
};
CandidateItems to_items(std::span<const std::vector<Candidate>> classes);

// Joins a per-class choice back into a Solution.
Solution assemble_solution(std::span<const std::vector<Candidate>> classes,
                           const CandidateItems& items,
                           const MckpSelection& selection);

// Builds one class per AP with the given allocation policy.
std::vector<std::vector<Candidate>> build_classes(
    const Scenario& scenario,
    AllocationPolicy policy = AllocationPolicy::kWaterFilling);

// End-to-end: popularity, candidate classes, DP, Solution.
Solution solve_scenario(const Scenario& scenario,
                        AllocationPolicy policy = AllocationPolicy::kWaterFilling);

}  // namespace fiwi

#endif  // FIWI_MCKP_HPP_
