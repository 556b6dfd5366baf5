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

#include "qsearch/optimizer.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "qsearch/error.h"
#include "qsearch/format.h"

namespace qsearch {

namespace {

// Marginal gain written in the angle a = arcsin(sqrt(q)): g'(q) = k sin(2ka) / sin(2a).
double gain_at_angle(double a, int k) {
    if (a <= 0) {
        return static_cast<double>(k) * k;
    }
    return k * std::sin(2 * k * a) / std::sin(2 * a);
}

// Largest angle in [lo, hi] with gain_at_angle >= target. The gain is strictly decreasing on
// [0, pi/(2k)], so plain bisection down to adjacent doubles.
double solve_angle(double target, int k, double lo, double hi) {
    if (gain_at_angle(lo, k) <= target) {
        return lo;
    }
    for (int step = 0; step < 200; step++) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        if (gain_at_angle(mid, k) > target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

OptimalPlan finish(const Prior &p, std::vector<double> q, int t, double multiplier) {
    AmplitudePlan plan(std::move(q), t);
    double residual = kkt_residual(p, plan, multiplier);
    double value = esp(p, plan);
    return OptimalPlan{std::move(plan), multiplier, residual, value};
}

}  // namespace

void OptimizerConfig::validate() const {
    if (!(tol > 0)) {
        throw InvalidInput("optimizer tol must be > 0");
    }
    if (max_iter < 1) {
        throw InvalidInput("optimizer max_iter must be >= 1");
    }
}

std::string OptimalPlan::to_json() const {
    return "{\"t\": " + std::to_string(plan.t()) + ", \"q\": " + format_double_array(plan.q()) +
           ", \"esp\": " + format_double(esp) + ", \"kkt_residual\": " + format_double(kkt_residual) + "}\n";
}

double cap(int t) {
    if (t < 0) {
        throw InvalidInput("cap: t must be >= 0");
    }
    if (t == 0) {
        return 1.0;
    }
    double s = std::sin(std::numbers::pi / (2.0 * (2.0 * t + 1.0)));
    return s * s;
}

double marginal_gain(double q, int t) {
    if (!(q >= 0 && q <= 1)) {
        throw InvalidInput("marginal_gain: q not in [0, 1]");
    }
    if (t < 0) {
        throw InvalidInput("marginal_gain: t must be >= 0");
    }
    int k = 2 * t + 1;
    if (q == 0) {
        return static_cast<double>(k) * k;
    }
    if (q == 1) {
        // k odd: sin(2ka) / sin(2a) -> k as a -> pi/2.
        return static_cast<double>(k) * k;
    }
    double a = std::asin(std::sqrt(q));
    return k * std::sin(2 * k * a) / (2 * std::sqrt(q * (1 - q)));
}

double kkt_residual(const Prior &p, const AmplitudePlan &plan, double multiplier) {
    if (p.size() != plan.size()) {
        throw InvalidInput("kkt_residual dimension mismatch");
    }
    int t = plan.t();
    double level = cap(t);
    double worst = 0;
    if (multiplier < 0) {
        worst = -multiplier;
    }
    for (size_t i = 0; i < p.size(); i++) {
        double qi = plan[i];
        if (qi > level * (1 + 1e-12)) {
            worst = std::max(worst, qi - level);
            continue;
        }
        double gain = p[i] * marginal_gain(std::min(qi, 1.0), t);
        if (qi == 0) {
            worst = std::max(worst, gain - multiplier);
        } else if (qi >= level * (1 - 1e-15)) {
            worst = std::max(worst, multiplier - gain);
        } else {
            worst = std::max(worst, std::abs(gain - multiplier));
        }
    }
    double mass = plan.total();
    worst = std::max(worst, mass - 1);
    if (multiplier > 0) {
        worst = std::max(worst, std::abs(1 - mass));
    }
    return worst;
}

OptimalPlan optimize(const Prior &p, int t, const OptimizerConfig &cfg) {
    cfg.validate();
    if (t < 0) {
        throw InvalidInput("optimize: t must be >= 0");
    }
    size_t n = p.size();

    if (t == 0) {
        std::vector<double> q(n, 0.0);
        size_t best = p.argmax();
        q[best] = 1.0;
        return finish(p, std::move(q), 0, p[best]);
    }

    double level = cap(t);
    size_t support = p.support_size();
    if (static_cast<double>(support) * level <= 1 + 1e-15) {
        std::vector<double> q(n, 0.0);
        for (size_t i = 0; i < n; i++) {
            if (p[i] > 0) {
                q[i] = level;
            }
        }
        return finish(p, std::move(q), t, 0.0);
    }

    int k = 2 * t + 1;
    double angle_cap = std::numbers::pi / (2.0 * k);
    double max_weight = p[p.argmax()];

    // Per-item angle solutions at the current bracket ends. Raising the multiplier lowers every
    // angle, so the solution for any interior multiplier lies between them.
    std::vector<double> angle_at_lo(n, 0.0);
    std::vector<double> angle_at_hi(n, 0.0);
    for (size_t i = 0; i < n; i++) {
        if (p[i] > 0) {
            angle_at_lo[i] = angle_cap;
        }
    }
    double lambda_lo = 0;
    double lambda_hi = max_weight * k * k;
    std::vector<double> trial(n, 0.0);

    auto mass_of = [](const std::vector<double> &angles) {
        double total = 0;
        for (double a : angles) {
            double s = std::sin(a);
            total += s * s;
        }
        return total;
    };

    double mass_hi = 0;
    bool converged = false;
    for (int iter = 0; iter < cfg.max_iter; iter++) {
        double mid = 0.5 * (lambda_lo + lambda_hi);
        if (mid <= lambda_lo || mid >= lambda_hi) {
            converged = true;
            break;
        }
        for (size_t i = 0; i < n; i++) {
            trial[i] = p[i] > 0 ? solve_angle(mid / p[i], k, angle_at_hi[i], angle_at_lo[i]) : 0.0;
        }
        double mass = mass_of(trial);
        if (mass > 1) {
            lambda_lo = mid;
            angle_at_lo.swap(trial);
        } else {
            lambda_hi = mid;
            mass_hi = mass;
            angle_at_hi.swap(trial);
        }
        if (lambda_hi - lambda_lo <= cfg.tol * lambda_hi && 1 - mass_hi <= cfg.tol) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        throw NumericalFailure("water-filling bisection did not converge", 1 - mass_hi);
    }

    std::vector<double> q(n, 0.0);
    for (size_t i = 0; i < n; i++) {
        double s = std::sin(angle_at_hi[i]);
        q[i] = std::min(s * s, level);
    }
    return finish(p, std::move(q), t, lambda_hi);
}

OptimalPlan optimize_t1_closed_form(const Prior &p, const OptimizerConfig &cfg) {
    cfg.validate();
    size_t n = p.size();
    constexpr double kCap = 0.25;

    if (p.support_size() <= 4) {
        std::vector<double> q(n, 0.0);
        for (size_t i = 0; i < n; i++) {
            if (p[i] > 0) {
                q[i] = kCap;
            }
        }
        return finish(p, std::move(q), 1, 0.0);
    }

    auto fill = [&](double lambda, std::vector<double> &q) {
        double total = 0;
        for (size_t i = 0; i < n; i++) {
            if (p[i] > 0) {
                double v = 0.5 - std::sqrt(1.0 / 16.0 - lambda / (48.0 * p[i]));
                q[i] = std::clamp(v, 0.0, kCap);
            } else {
                q[i] = 0;
            }
            total += q[i];
        }
        return total;
    };

    // Stationarity p_i (48 q^2 - 48 q + 9) + lambda = 0 puts lambda in [-9 max p, 0].
    double lambda_lo = -9.0 * p[p.argmax()];
    double lambda_hi = 0;
    std::vector<double> q(n, 0.0);
    std::vector<double> q_lo(n, 0.0);
    double mass_lo = fill(lambda_lo, q_lo);
    bool converged = false;
    for (int iter = 0; iter < cfg.max_iter; iter++) {
        double mid = 0.5 * (lambda_lo + lambda_hi);
        if (mid <= lambda_lo || mid >= lambda_hi) {
            converged = true;
            break;
        }
        double mass = fill(mid, q);
        if (mass > 1) {
            lambda_hi = mid;
        } else {
            lambda_lo = mid;
            mass_lo = mass;
            q_lo.swap(q);
        }
        if (lambda_hi - lambda_lo <= cfg.tol * -lambda_lo && 1 - mass_lo <= cfg.tol) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        throw NumericalFailure("closed-form multiplier bisection did not converge", 1 - mass_lo);
    }
    return finish(p, std::move(q_lo), 1, -lambda_lo);
}

}  // namespace qsearch
