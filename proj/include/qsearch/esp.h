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

#ifndef QSEARCH_ESP_H
#define QSEARCH_ESP_H

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qsearch/prior.h"

namespace qsearch {

/// Squared initial amplitudes q over the N items plus the number of oracle queries t.
///
/// The leftover amplitude sqrt(1 - sum(q)) lives on a separate sink component that is never a
/// solution. Construction validates q_i in [0, 1] and sum(q) <= 1 + kSumTolerance.
class AmplitudePlan {
   public:
    static constexpr double kSumTolerance = 1e-12;

    AmplitudePlan(std::vector<double> q, int t);

    std::span<const double> q() const {
        return q_;
    }
    double operator[](size_t i) const {
        return q_[i];
    }
    size_t size() const {
        return q_.size();
    }
    int t() const {
        return t_;
    }
    double total() const;

   private:
    std::vector<double> q_;
    int t_;
};

/// sin^2((2t+1) * arcsin(sqrt(q))): probability of measuring the solution after t iterations when
/// its squared initial amplitude is q. Throws InvalidInput for q outside [0, 1] or t < 0.
double success_prob_single(double q, int t);

/// Expected success probability sum_i p_i * success_prob_single(q_i, t).
double esp(const Prior &p, const AmplitudePlan &plan);

enum class Method { kClassical, kGroverUniform, kRanking, kOptimal, kCustom };

std::string method_name(Method method);

struct EspReport {
    Method method;
    double value;
    int t;
    size_t n;
    std::map<std::string, double> extras;

    std::string to_json() const;
};

/// Standard Grover start state: q_i = 1/n on every item.
AmplitudePlan uniform_plan(size_t n, int t);

/// Best uniform Grover search over the M most likely items, maximized over M = 1..n.
///
/// The Grover angle is not clamped: overshooting pi/2 lowers the value. extras["M"] holds the
/// smallest maximizing M.
EspReport ranking_baseline(const Prior &p, int t);

/// Plan that matches t_classical classical queries with ceil(sqrt(t_classical)) quantum ones.
///
/// Every one of the t_classical most likely items gets the saturating amplitude
/// sin^2(pi / (2(2t+1))), so each covered item is found with certainty and the total mass stays
/// below pi^2/16. Throws InvalidInput unless 1 <= t_classical <= n.
AmplitudePlan speedup_plan(const Prior &p, size_t t_classical);

/// Classical top-t mass wrapped as a report.
EspReport classical_report(const Prior &p, int t);

}  // namespace qsearch

#endif
