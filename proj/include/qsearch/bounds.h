// Copyright 2026 The qsearch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSEARCH_BOUNDS_H
#define QSEARCH_BOUNDS_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsearch/esp.h"
#include "qsearch/prior.h"

namespace qsearch {

// Brute-force upper-bound checks for the optimal search plan. Nothing in here calls the
// water-filling solver; callers pass its plan in as a reference when they want a residual.

/// sin(x) on [0, pi/2], 1 beyond. Throws InvalidInput for negative or NaN x.
double f_clamped(double x);

struct BoundReport {
    double bound_value = 0;
    /// Maximizing assignment. For projected ascent, one entry per item; for the grid search,
    /// step-major (step 0 items, then step 1 items, ...).
    std::vector<double> achiever;
    std::string method;
    /// bound_value minus the reference plan's ESP, when a reference was supplied.
    std::optional<double> residual;
    std::optional<double> reference_value;
    /// Projected-gradient stationarity measure at the achiever (ascent only).
    double gradient_norm = 0;
    int starts = 0;

    std::string to_json() const;
};

struct AscentConfig {
    int random_restarts = 32;
    /// Resolution 1/grid_resolution of the simplex grid used to seed extra starts.
    int grid_resolution = 4;
    /// Number of best grid points promoted to ascent starts.
    int grid_starts = 4;
    double gradient_tol = 1e-10;
    int max_iter = 20000;
    uint64_t seed = 0x5eed;
};

/// Desk-scale caps for theorem_a2_bound.
constexpr size_t kMaxBoundItems = 8;
constexpr int kMaxBoundQueries = 3;

/// Maximizes sum_i p_i f_clamped((2t+1) arcsin sqrt(r_i))^2 over r >= 0, sum(r) <= 1 (no per-item
/// cap) by projected gradient ascent with step-halving line search from random and grid starts.
///
/// Throws ResourceLimit when p.size() > kMaxBoundItems or t > kMaxBoundQueries.
BoundReport theorem_a2_bound(
    const Prior &p, int t, const std::optional<AmplitudePlan> &reference = std::nullopt, const AscentConfig &cfg = {});

struct AllocationReport {
    BoundReport unrestricted;
    /// Best value when every step uses the same allocation.
    BoundReport equal;
    /// unrestricted.bound_value - equal.bound_value.
    double gap = 0;
    double grid_step = 0;
    int steps = 0;
    /// 2 * grid_step: the slack the gap is compared against (a heuristic, not a theorem).
    double slack = 0;

    std::string to_json() const;
};

constexpr size_t kMaxAllocationItems = 3;
constexpr int kMaxAllocationSteps = 3;
constexpr double kMinGridStep = 0.02;

/// Exhaustive search over per-step allocations u_{t,x} (each step's allocation sums to 1) on a grid
/// of the given step, maximizing sum_x p_x f_clamped(sum_t arcsin sqrt(u_{t,x}))^2, followed by
/// coordinate-ascent refinement. Runs the same search restricted to equal per-step allocations
/// and reports the gap.
///
/// Throws ResourceLimit when p.size() > 3, steps > 3 or grid_step < 0.02; InvalidInput when
/// 1/grid_step is not an integer or steps < 1.
AllocationReport lemma_a1_search(const Prior &p, int steps, double grid_step);

}  // namespace qsearch

#endif
