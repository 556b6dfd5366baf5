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

#include "qsearch/bounds.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>

#include "qsearch/error.h"
#include "qsearch/format.h"

namespace qsearch {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

double clamped_sq(double angle) {
    if (angle >= kHalfPi) {
        return 1.0;
    }
    double s = std::sin(angle);
    return s * s;
}

// Euclidean projection onto {r >= 0, sum(r) <= 1}.
std::vector<double> project(const std::vector<double> &y) {
    std::vector<double> r(y.size());
    double total = 0;
    for (size_t i = 0; i < y.size(); i++) {
        r[i] = std::max(0.0, y[i]);
        total += r[i];
    }
    if (total <= 1) {
        return r;
    }
    std::vector<double> sorted(y);
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    double prefix = 0;
    double shift = 0;
    for (size_t j = 0; j < sorted.size(); j++) {
        prefix += sorted[j];
        double candidate = (prefix - 1) / static_cast<double>(j + 1);
        if (sorted[j] - candidate > 0) {
            shift = candidate;
        }
    }
    for (size_t i = 0; i < y.size(); i++) {
        r[i] = std::max(0.0, y[i] - shift);
    }
    return r;
}

struct BoundObjective {
    const Prior &p;
    int k;

    double value(const std::vector<double> &r) const {
        double total = 0;
        for (size_t i = 0; i < r.size(); i++) {
            if (p[i] > 0) {
                total += p[i] * clamped_sq(k * std::asin(std::sqrt(std::min(r[i], 1.0))));
            }
        }
        return total;
    }

    std::vector<double> gradient(const std::vector<double> &r) const {
        std::vector<double> g(r.size(), 0.0);
        for (size_t i = 0; i < r.size(); i++) {
            double ri = r[i];
            if (ri <= 0) {
                g[i] = p[i] * k * k;
            } else if (ri >= 1) {
                g[i] = k == 1 ? p[i] : 0.0;
            } else {
                double angle = k * std::asin(std::sqrt(ri));
                g[i] = angle >= kHalfPi ? 0.0 : p[i] * k * std::sin(2 * angle) / (2 * std::sqrt(ri * (1 - ri)));
            }
        }
        return g;
    }
};

double stationarity(const std::vector<double> &r, const std::vector<double> &g) {
    std::vector<double> step(r.size());
    for (size_t i = 0; i < r.size(); i++) {
        step[i] = r[i] + g[i];
    }
    auto moved = project(step);
    double total = 0;
    for (size_t i = 0; i < r.size(); i++) {
        total += (moved[i] - r[i]) * (moved[i] - r[i]);
    }
    return std::sqrt(total);
}

struct AscentResult {
    std::vector<double> r;
    double value;
    double gradient_norm;
};

AscentResult ascend(const BoundObjective &objective, std::vector<double> r, const AscentConfig &cfg) {
    r = project(r);
    double value = objective.value(r);
    double alpha = 1.0;
    double gnorm = 0;
    for (int iter = 0; iter < cfg.max_iter; iter++) {
        auto g = objective.gradient(r);
        gnorm = stationarity(r, g);
        if (gnorm < cfg.gradient_tol) {
            break;
        }
        bool accepted = false;
        while (alpha > 1e-18) {
            std::vector<double> trial(r.size());
            for (size_t i = 0; i < r.size(); i++) {
                trial[i] = r[i] + alpha * g[i];
            }
            trial = project(trial);
            double slope = 0;
            for (size_t i = 0; i < r.size(); i++) {
                slope += g[i] * (trial[i] - r[i]);
            }
            double trial_value = objective.value(trial);
            if (trial_value >= value + 1e-4 * slope && slope > 0) {
                r = std::move(trial);
                value = trial_value;
                alpha = std::min(alpha * 2, 1e6);
                accepted = true;
                break;
            }
            alpha /= 2;
        }
        if (!accepted) {
            break;
        }
    }
    return AscentResult{std::move(r), value, gnorm};
}

double uniform01(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// All ways to write `total` as an ordered sum of `parts` non-negative integers, in lexicographic order.
std::vector<std::vector<int>> compositions(int total, size_t parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> current(parts, 0);
    std::function<void(size_t, int)> rec = [&](size_t index, int remaining) {
        if (index + 1 == parts) {
            current[index] = remaining;
            out.push_back(current);
            return;
        }
        for (int v = 0; v <= remaining; v++) {
            current[index] = v;
            rec(index + 1, remaining - v);
        }
    };
    rec(0, total);
    return out;
}

bool better(double value, const std::vector<double> &assignment, double best, const std::vector<double> &best_assignment) {
    if (value != best) {
        return value > best;
    }
    return std::lexicographical_compare(
        assignment.begin(), assignment.end(), best_assignment.begin(), best_assignment.end());
}

std::string report_body(const BoundReport &r) {
    std::string out = "{\"method\": " + json_quote(r.method) + ", \"bound_value\": " + format_double(r.bound_value) +
                      ", \"achiever\": " + format_double_array(r.achiever);
    if (r.residual) {
        out += ", \"residual\": " + format_double(*r.residual);
    }
    if (r.reference_value) {
        out += ", \"reference_value\": " + format_double(*r.reference_value);
    }
    out += ", \"gradient_norm\": " + format_double(r.gradient_norm) + ", \"starts\": " + std::to_string(r.starts) + "}";
    return out;
}

// Objective over per-step allocations, stored step-major.
double allocation_value(const Prior &p, const std::vector<double> &u, int steps) {
    size_t n = p.size();
    double total = 0;
    for (size_t x = 0; x < n; x++) {
        double angle = 0;
        for (int t = 0; t < steps; t++) {
            angle += std::asin(std::sqrt(std::clamp(u[t * n + x], 0.0, 1.0)));
        }
        total += p[x] * clamped_sq(angle);
    }
    return total;
}

// Pairwise mass transfers within each step, halving the transfer size until it is negligible.
double refine_allocation(const Prior &p, std::vector<double> &u, int steps, double start_delta, bool tie_steps) {
    size_t n = p.size();
    auto evaluate = [&](const std::vector<double> &v) {
        if (!tie_steps) {
            return allocation_value(p, v, steps);
        }
        std::vector<double> expanded(static_cast<size_t>(steps) * n);
        for (int t = 0; t < steps; t++) {
            std::copy(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n), expanded.begin() + static_cast<std::ptrdiff_t>(t * n));
        }
        return allocation_value(p, expanded, steps);
    };
    int blocks = tie_steps ? 1 : steps;
    double best = evaluate(u);
    for (double delta = start_delta; delta > 1e-12; delta /= 2) {
        for (int sweep = 0; sweep < 1000; sweep++) {
            bool improved = false;
            for (int b = 0; b < blocks; b++) {
                for (size_t from = 0; from < n; from++) {
                    for (size_t to = 0; to < n; to++) {
                        if (from == to) {
                            continue;
                        }
                        size_t src = b * n + from;
                        size_t dst = b * n + to;
                        double amount = std::min(delta, u[src]);
                        if (amount <= 0) {
                            continue;
                        }
                        u[src] -= amount;
                        u[dst] += amount;
                        double v = evaluate(u);
                        if (v > best + 1e-15) {
                            best = v;
                            improved = true;
                        } else {
                            u[src] += amount;
                            u[dst] -= amount;
                        }
                    }
                }
            }
            if (!improved) {
                break;
            }
        }
    }
    return best;
}

}  // namespace

double f_clamped(double x) {
    if (!(x >= 0)) {
        throw InvalidInput("f_clamped needs x >= 0");
    }
    return x <= kHalfPi ? std::sin(x) : 1.0;
}

std::string BoundReport::to_json() const {
    return report_body(*this) + "\n";
}

std::string AllocationReport::to_json() const {
    return "{\"unrestricted\": " + report_body(unrestricted) + ", \"equal\": " + report_body(equal) +
           ", \"gap\": " + format_double(gap) + ", \"grid_step\": " + format_double(grid_step) +
           ", \"steps\": " + std::to_string(steps) + ", \"slack\": " + format_double(slack) + "}\n";
}

BoundReport theorem_a2_bound(const Prior &p, int t, const std::optional<AmplitudePlan> &reference, const AscentConfig &cfg) {
    if (t < 0) {
        throw InvalidInput("theorem_a2_bound: t must be >= 0");
    }
    if (p.size() > kMaxBoundItems || t > kMaxBoundQueries) {
        throw ResourceLimit(
            "theorem_a2_bound is capped at n <= " + std::to_string(kMaxBoundItems) + ", t <= " +
            std::to_string(kMaxBoundQueries));
    }
    size_t n = p.size();
    BoundObjective objective{p, 2 * t + 1};

    std::vector<std::vector<double>> starts;
    starts.emplace_back(n, 1.0 / static_cast<double>(n));

    std::vector<std::pair<double, std::vector<double>>> grid;
    for (const auto &c : compositions(cfg.grid_resolution, n)) {
        std::vector<double> r(n);
        for (size_t i = 0; i < n; i++) {
            r[i] = c[i] / static_cast<double>(cfg.grid_resolution);
        }
        grid.emplace_back(objective.value(r), std::move(r));
    }
    std::stable_sort(grid.begin(), grid.end(), [](const auto &a, const auto &b) {
        return a.first > b.first;
    });
    for (int g = 0; g < cfg.grid_starts && g < static_cast<int>(grid.size()); g++) {
        starts.push_back(grid[g].second);
    }

    std::mt19937_64 rng(cfg.seed);
    for (int s = 0; s < cfg.random_restarts; s++) {
        std::vector<double> r(n);
        double total = 0;
        for (double &v : r) {
            v = -std::log(1 - uniform01(rng));
            total += v;
        }
        for (double &v : r) {
            v /= total;
        }
        starts.push_back(std::move(r));
    }

    BoundReport report;
    report.method = "projected-ascent";
    report.bound_value = -1;
    report.starts = static_cast<int>(starts.size());
    for (auto &start : starts) {
        auto result = ascend(objective, std::move(start), cfg);
        if (better(result.value, result.r, report.bound_value, report.achiever)) {
            report.bound_value = result.value;
            report.achiever = std::move(result.r);
            report.gradient_norm = result.gradient_norm;
        }
    }
    report.bound_value = std::clamp(report.bound_value, 0.0, 1.0);
    if (reference) {
        report.reference_value = esp(p, *reference);
        report.residual = report.bound_value - *report.reference_value;
    }
    return report;
}

AllocationReport lemma_a1_search(const Prior &p, int steps, double grid_step) {
    if (steps < 1) {
        throw InvalidInput("lemma_a1_search needs at least one step");
    }
    if (p.size() > kMaxAllocationItems || steps > kMaxAllocationSteps || !(grid_step >= kMinGridStep)) {
        throw ResourceLimit("lemma_a1_search is capped at n <= 3, steps <= 3, grid_step >= 0.02");
    }
    double inverse = 1 / grid_step;
    int resolution = static_cast<int>(std::lround(inverse));
    if (std::abs(inverse - resolution) > 1e-9 * inverse) {
        throw InvalidInput("lemma_a1_search needs 1/grid_step to be an integer");
    }

    size_t n = p.size();
    auto comps = compositions(resolution, n);
    std::vector<double> angle(resolution + 1);
    for (int c = 0; c <= resolution; c++) {
        angle[c] = std::asin(std::sqrt(c / static_cast<double>(resolution)));
    }

    // Unrestricted: the objective only sees per-item angle sums, so step order is irrelevant and
    // non-decreasing index tuples cover every value. The sorted tuple is also the lexicographically
    // smallest among its permutations.
    std::vector<size_t> chosen(steps, 0);
    std::vector<size_t> best_tuple(steps, 0);
    double best_value = -1;
    std::vector<double> partial(static_cast<size_t>(steps + 1) * n, 0.0);
    std::function<void(int, size_t)> rec = [&](int step, size_t first) {
        const double *prev = &partial[static_cast<size_t>(step) * n];
        double *cur = &partial[static_cast<size_t>(step + 1) * n];
        for (size_t ci = first; ci < comps.size(); ci++) {
            for (size_t x = 0; x < n; x++) {
                cur[x] = prev[x] + angle[comps[ci][x]];
            }
            chosen[step] = ci;
            if (step + 1 == steps) {
                double v = 0;
                for (size_t x = 0; x < n; x++) {
                    v += p[x] * clamped_sq(cur[x]);
                }
                if (v > best_value) {
                    best_value = v;
                    best_tuple = chosen;
                }
            } else {
                rec(step + 1, ci);
            }
        }
    };
    rec(0, 0);

    std::vector<double> u(static_cast<size_t>(steps) * n);
    for (int s = 0; s < steps; s++) {
        for (size_t x = 0; x < n; x++) {
            u[s * n + x] = comps[best_tuple[s]][x] / static_cast<double>(resolution);
        }
    }
    double refined = refine_allocation(p, u, steps, grid_step / 2, false);

    double best_equal = -1;
    size_t best_equal_index = 0;
    for (size_t ci = 0; ci < comps.size(); ci++) {
        double v = 0;
        for (size_t x = 0; x < n; x++) {
            v += p[x] * clamped_sq(steps * angle[comps[ci][x]]);
        }
        if (v > best_equal) {
            best_equal = v;
            best_equal_index = ci;
        }
    }
    std::vector<double> equal_u(n);
    for (size_t x = 0; x < n; x++) {
        equal_u[x] = comps[best_equal_index][x] / static_cast<double>(resolution);
    }
    double refined_equal = refine_allocation(p, equal_u, steps, grid_step / 2, true);

    // Every equal allocation is also an unrestricted one, so the unrestricted search may start there too.
    std::vector<double> from_equal(static_cast<size_t>(steps) * n);
    for (int s = 0; s < steps; s++) {
        std::copy(equal_u.begin(), equal_u.end(), from_equal.begin() + static_cast<std::ptrdiff_t>(s * n));
    }
    double refined_from_equal = refine_allocation(p, from_equal, steps, grid_step / 2, false);
    if (refined_from_equal > refined) {
        refined = refined_from_equal;
        u = std::move(from_equal);
    }

    AllocationReport report;
    report.unrestricted.method = "grid";
    report.unrestricted.bound_value = std::clamp(refined, 0.0, 1.0);
    report.unrestricted.achiever = std::move(u);
    report.unrestricted.starts = 1;
    report.equal.method = "grid";
    report.equal.bound_value = std::clamp(refined_equal, 0.0, 1.0);
    report.equal.achiever = std::move(equal_u);
    report.equal.starts = 1;
    report.gap = report.unrestricted.bound_value - report.equal.bound_value;
    report.grid_step = grid_step;
    report.steps = steps;
    report.slack = 2 * grid_step;
    return report;
}

}  // namespace qsearch
