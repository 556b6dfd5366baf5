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

#include "qsearch/esp.h"

#include <cmath>
#include <numbers>

#include "qsearch/error.h"
#include "qsearch/format.h"
#include "qsearch/optimizer.h"

namespace qsearch {

AmplitudePlan::AmplitudePlan(std::vector<double> q, int t) : q_(std::move(q)), t_(t) {
    if (t_ < 0) {
        throw InvalidInput("query budget t must be >= 0");
    }
    double sum = 0;
    for (size_t i = 0; i < q_.size(); i++) {
        if (!(q_[i] >= 0 && q_[i] <= 1)) {
            throw InvalidInput("plan entry q[" + std::to_string(i) + "] = " + format_double(q_[i]) + " not in [0, 1]");
        }
        sum += q_[i];
    }
    if (sum > 1 + kSumTolerance) {
        throw InvalidInput("plan mass " + format_double(sum) + " exceeds 1");
    }
}

double AmplitudePlan::total() const {
    double sum = 0;
    for (double v : q_) {
        sum += v;
    }
    return sum;
}

double success_prob_single(double q, int t) {
    if (!(q >= 0 && q <= 1)) {
        throw InvalidInput("success_prob_single: q = " + format_double(q) + " not in [0, 1]");
    }
    if (t < 0) {
        throw InvalidInput("success_prob_single: t must be >= 0");
    }
    double s = std::sin((2.0 * t + 1.0) * std::asin(std::sqrt(q)));
    return s * s;
}

double esp(const Prior &p, const AmplitudePlan &plan) {
    if (p.size() != plan.size()) {
        throw InvalidInput(
            "esp dimension mismatch: prior has " + std::to_string(p.size()) + " items, plan has " +
            std::to_string(plan.size()));
    }
    double total = 0;
    for (size_t i = 0; i < p.size(); i++) {
        if (p[i] > 0) {
            total += p[i] * success_prob_single(plan[i], plan.t());
        }
    }
    return total;
}

std::string method_name(Method method) {
    switch (method) {
        case Method::kClassical:
            return "classical";
        case Method::kGroverUniform:
            return "grover-uniform";
        case Method::kRanking:
            return "ranking";
        case Method::kOptimal:
            return "optimal";
        case Method::kCustom:
            return "custom";
    }
    return "custom";
}

std::string EspReport::to_json() const {
    std::string out = "{\"method\": " + json_quote(method_name(method)) + ", \"value\": " + format_double(value) +
                      ", \"t\": " + std::to_string(t) + ", \"n\": " + std::to_string(n) + ", \"extras\": {";
    bool first = true;
    for (const auto &[key, v] : extras) {
        if (!first) {
            out += ", ";
        }
        first = false;
        out += json_quote(key) + ": " + format_double(v);
    }
    out += "}}";
    return out;
}

AmplitudePlan uniform_plan(size_t n, int t) {
    if (n == 0) {
        throw InvalidInput("uniform_plan needs n >= 1");
    }
    return AmplitudePlan(std::vector<double>(n, 1.0 / static_cast<double>(n)), t);
}

EspReport ranking_baseline(const Prior &p, int t) {
    if (t < 0) {
        throw InvalidInput("ranking_baseline: t must be >= 0");
    }
    auto order = p.descending_order();
    double mass = 0;
    double best = -1;
    size_t best_m = 1;
    for (size_t m = 1; m <= p.size(); m++) {
        mass += p[order[m - 1]];
        double s = std::sin((2.0 * t + 1.0) * std::asin(1.0 / std::sqrt(static_cast<double>(m))));
        double value = mass * s * s;
        if (value > best) {
            best = value;
            best_m = m;
        }
    }
    return EspReport{Method::kRanking, std::min(best, 1.0), t, p.size(), {{"M", static_cast<double>(best_m)}}};
}

AmplitudePlan speedup_plan(const Prior &p, size_t t_classical) {
    if (t_classical < 1 || t_classical > p.size()) {
        throw InvalidInput(
            "speedup_plan: t_classical=" + std::to_string(t_classical) + " must be in [1, " +
            std::to_string(p.size()) + "]");
    }
    int t = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(t_classical))));
    // Guard against sqrt rounding on perfect squares.
    while (static_cast<size_t>(t - 1) * static_cast<size_t>(t - 1) >= t_classical) {
        t--;
    }
    while (static_cast<size_t>(t) * static_cast<size_t>(t) < t_classical) {
        t++;
    }
    double level = cap(t);
    auto order = p.descending_order();
    std::vector<double> q(p.size(), 0.0);
    for (size_t k = 0; k < t_classical; k++) {
        q[order[k]] = level;
    }
    return AmplitudePlan(std::move(q), t);
}

EspReport classical_report(const Prior &p, int t) {
    if (t < 0) {
        throw InvalidInput("classical_report: t must be >= 0");
    }
    size_t k = std::min(static_cast<size_t>(t), p.size());
    return EspReport{Method::kClassical, top_k_mass(p, k), t, p.size(), {}};
}

}  // namespace qsearch
