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

// Slow, independent reference implementations used to check the solvers.

#ifndef FIWI_ORACLES_HPP_
#define FIWI_ORACLES_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "fiwi/domain.hpp"
#include "fiwi/mckp.hpp"
#include "fiwi/rng.hpp"
#include "fiwi/vabwf.hpp"

namespace fiwi {

// Water-filling by bisection on the level WL solving
// sum_k max(WL - floor_k, 0) = budget. Bisects until the bracket stops
// shrinking in double precision, which is well inside 1e-12 * budget.
PowerAllocation waterfill_bisection(std::span<const double> floors,
                                    double budget);
PowerAllocation waterfill_bisection(std::span<const double> gains,
                                    double budget, double noise_w);

inline constexpr double kExhaustiveLimit = 1e7;

// Enumerates every per-class choice (including opt-out). Among equal-valued
// selections it returns the one the DP's traceback would: the smallest
// (rank_N, ..., rank_1) with opt-out ranked first, then items in order.
// Throws OracleRefusal when the product of class sizes exceeds 1e7.
MckpSelection mckp_exhaustive(std::span<const MckpClass> classes,
                              std::int64_t capacity);
Solution mckp_exhaustive(std::span<const std::vector<Candidate>> classes,
                         std::int64_t capacity_units);

// Independent re-evaluation of a Solution against the joint problem.
// Residuals are normalised slacks; >= 0 means satisfied.
struct P1Evaluation {
  double objective_bps = 0.0;
  std::vector<double> power_residual;  // (P_M - sum rho P - w*bits) / P_M
  double backhaul_residual = 0.0;      // (C - sum miss*R) / max(C, 1 bit/s)
  std::vector<double> cache_residual;  // (Q_n - cached bits) / max(Q_n, s)
  double power_sign_residual = 0.0;    // min_k P_nk / P_M
  double binary_residual = 0.0;        // 0 if every cache set is valid, else -1
  double backhaul_used_bps = 0.0;      // recomputed sum of miss traffic

  double min_residual() const;
};

// Throws DomainError when the solution does not match the scenario's shape.
P1Evaluation p1_evaluate(const Scenario& scenario, const Solution& solution);

// Random instances shared by the tests and `fiwi oracle-check`.
struct WaterfillInstance {
  std::vector<double> floors;  // sigma^2/g, log-uniform over six decades
  double budget = 0.0;         // log-uniform over six decades
};
WaterfillInstance random_waterfill_instance(RngStream& rng,
                                            std::size_t max_users = 20);

struct MckpInstance {
  std::vector<MckpClass> classes;
  std::int64_t capacity = 0;
};
// Up to `max_classes` classes of 1..max_items items, weights in
// [0, max_capacity], capacity in [0, max_capacity]. Half of the instances
// use small integer values so that ties are frequent.
MckpInstance random_mckp_instance(RngStream& rng, std::size_t max_classes = 4,
                                  std::size_t max_items = 6,
                                  std::int64_t max_capacity = 25);

// Small end-to-end scenario (1-3 APs, catalog of 2-5 files) whose knapsack
// is tight enough to exercise opt-out and partial caching.
Scenario random_small_scenario(RngStream& rng);

// Per-user agreement: |a_k - b_k| <= rel * |b_k| + 1e-15 * budget.
bool allocations_match(std::span<const double> a, std::span<const double> b,
                       double budget, double rel = 1e-9);

}  // namespace fiwi

#endif  // FIWI_ORACLES_HPP_
