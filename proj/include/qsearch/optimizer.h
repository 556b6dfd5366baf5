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

#ifndef QSEARCH_OPTIMIZER_H
#define QSEARCH_OPTIMIZER_H

#include <string>

#include "qsearch/esp.h"
#include "qsearch/prior.h"

namespace qsearch {

struct OptimizerConfig {
    /// Relative tolerance on the multiplier bracket and absolute tolerance on the plan mass.
    double tol = 1e-12;
    /// Cap on outer bisection steps.
    int max_iter = 200;

    void validate() const;
};

/// An optimal plan together with its KKT certificate.
///
/// `multiplier` is the budget multiplier in the water-filling convention: every interior item
/// satisfies p_i * g'(q_i) = multiplier, where g(q) = sin^2((2t+1) arcsin sqrt(q)).
struct OptimalPlan {
    AmplitudePlan plan;
    double multiplier;
    double kkt_residual;
    double esp;

    /// {"t": int, "q": [...], "esp": number, "kkt_residual": number}
    std::string to_json() const;
};

/// sin^2(pi / (2(2t+1))): the squared amplitude at which one item saturates after t iterations.
double cap(int t);

/// g'(q) = (2t+1) sin(2(2t+1) arcsin sqrt(q)) / (2 sqrt(q(1-q))), with g'(0) = (2t+1)^2.
double marginal_gain(double q, int t);

/// Largest violation of the KKT conditions of the capped problem for the given multiplier.
///
/// Covers stationarity of interior items, sign conditions on items at 0 or at the cap, the budget
/// constraint, and complementary slackness between the multiplier and unused budget.
double kkt_residual(const Prior &p, const AmplitudePlan &plan, double multiplier);

/// Maximizes esp(p, q) over 0 <= q_i <= cap(t), sum(q) <= 1.
///
/// Water-filling: an outer bisection on the multiplier (the plan mass is non-increasing in it)
/// with an inner bisection per item on p_i * g'(q_i) = multiplier. Zero-weight items are pinned
/// to 0; when the support fits under the budget at the cap, the caps are returned directly. For
/// t = 0 the whole mass goes to the first argmax. Throws NumericalFailure if the outer bisection
/// does not settle within cfg.max_iter steps.
OptimalPlan optimize(const Prior &p, int t, const OptimizerConfig &cfg = {});

/// One-query optimum from the explicit stationarity solution q_i = 1/2 - sqrt(1/16 - lambda/(48 p_i)).
///
/// lambda <= 0 is found by bisection so that the clamped q sum to 1; supports of at most four items
/// are saturated directly. The returned multiplier is -lambda so it matches optimize().
OptimalPlan optimize_t1_closed_form(const Prior &p, const OptimizerConfig &cfg = {});

}  // namespace qsearch

#endif
