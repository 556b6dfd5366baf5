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
#include <random>

#include "gtest/gtest.h"
#include "oracles.h"
#include "qsearch/error.h"
#include "qsearch/optimizer.h"
#include "qsearch/random.h"

using namespace qsearch;

namespace {

Prior naive_prior() {
    return new_prior({0.25, 0.25, 0.25, 0.25, 0, 0, 0, 0});
}

Prior uniform_prior(size_t n) {
    return new_prior(std::vector<double>(n, 1.0));
}

}  // namespace

TEST(esp, success_prob_single_examples) {
    ASSERT_NEAR(success_prob_single(1.0 / 8, 1), 0.78125, 1e-15);
    ASSERT_NEAR(success_prob_single(0.25, 1), 1.0, 1e-15);
    for (double q : {0.0, 0.1, 0.37, 1.0}) {
        ASSERT_NEAR(success_prob_single(q, 0), q, 1e-15);
    }
    ASSERT_THROW(success_prob_single(-0.01, 1), InvalidInput);
    ASSERT_THROW(success_prob_single(1.01, 1), InvalidInput);
    ASSERT_THROW(success_prob_single(0.5, -1), InvalidInput);
}

TEST(esp, success_prob_single_matches_polynomial_at_t1) {
    for (int k = 0; k <= 100; k++) {
        double q = k / 100.0;
        ASSERT_NEAR(success_prob_single(q, 1), oracle::one_query_poly(q), 1e-14) << q;
    }
}

TEST(esp, success_prob_single_non_decreasing_below_cap) {
    for (int t = 0; t <= 8; t++) {
        double level = cap(t);
        double prev = -1;
        for (int k = 0; k <= 1000; k++) {
            double v = success_prob_single(level * k / 1000, t);
            ASSERT_GE(v, prev - 1e-15);
            prev = v;
        }
    }
}

TEST(esp, golden_examples) {
    ASSERT_NEAR(esp(uniform_prior(8), uniform_plan(8, 1)), 0.78125, 1e-12);
    AmplitudePlan quarter({0.25, 0.25, 0.25, 0.25, 0, 0, 0, 0}, 1);
    ASSERT_NEAR(esp(naive_prior(), quarter), 1.0, 1e-12);
    for (int t = 0; t < 4; t++) {
        ASSERT_EQ(esp(naive_prior(), AmplitudePlan(std::vector<double>(8, 0.0), t)), 0.0);
    }
    ASSERT_THROW(esp(naive_prior(), uniform_plan(4, 1)), InvalidInput);
}

TEST(esp, plan_validation) {
    ASSERT_THROW(AmplitudePlan({0.5, 0.6}, 1), InvalidInput);
    ASSERT_THROW(AmplitudePlan({-0.1}, 1), InvalidInput);
    ASSERT_THROW(AmplitudePlan({0.1}, -1), InvalidInput);
    ASSERT_NO_THROW(AmplitudePlan({0.5, 0.5 + 1e-13}, 1));
}

TEST(esp, linear_in_prior) {
    std::mt19937_64 rng(21);
    for (int k = 0; k < 100; k++) {
        size_t n = static_cast<size_t>(uniform_int(rng, 1, 16));
        int t = static_cast<int>(uniform_int(rng, 0, 5));
        Prior a = random_prior(rng, n);
        Prior b = random_prior(rng, n);
        double alpha = uniform01(rng);
        std::vector<double> mix(n);
        for (size_t i = 0; i < n; i++) {
            mix[i] = alpha * a[i] + (1 - alpha) * b[i];
        }
        AmplitudePlan plan = random_plan(rng, n, t);
        double lhs = esp(new_prior(mix), plan);
        double rhs = alpha * esp(a, plan) + (1 - alpha) * esp(b, plan);
        ASSERT_NEAR(lhs, rhs, 1e-12);
    }
}

TEST(esp, difference_bounded_by_l1_distance) {
    std::mt19937_64 rng(22);
    for (int k = 0; k < 200; k++) {
        size_t n = static_cast<size_t>(uniform_int(rng, 1, 16));
        int t = static_cast<int>(uniform_int(rng, 0, 5));
        Prior a = random_prior(rng, n);
        Prior b = random_prior(rng, n);
        AmplitudePlan plan = random_plan(rng, n, t);
        ASSERT_LE(std::abs(esp(a, plan) - esp(b, plan)), l1_distance(a, b) + 1e-12);
    }
}

TEST(esp, ranking_baseline_examples) {
    // Frozen against the polynomial enumeration over M = 1..8.
    auto [naive_value, naive_m] = oracle::ranking_t1_by_enumeration({0.25, 0.25, 0.25, 0.25, 0, 0, 0, 0});
    ASSERT_NEAR(naive_value, 1.0, 1e-15);
    ASSERT_EQ(naive_m, 4u);
    auto [uniform_value, uniform_m] = oracle::ranking_t1_by_enumeration(std::vector<double>(8, 0.125));
    ASSERT_NEAR(uniform_value, 0.78125, 1e-15);
    ASSERT_EQ(uniform_m, 8u);

    EspReport naive = ranking_baseline(naive_prior(), 1);
    ASSERT_NEAR(naive.value, 1.0, 1e-12);
    ASSERT_EQ(naive.extras.at("M"), 4.0);
    ASSERT_EQ(naive.method, Method::kRanking);

    EspReport uniform = ranking_baseline(uniform_prior(8), 1);
    ASSERT_NEAR(uniform.value, 0.78125, 1e-12);
    ASSERT_EQ(uniform.extras.at("M"), 8.0);
}

TEST(esp, ranking_baseline_matches_enumeration_on_random_priors) {
    std::mt19937_64 rng(23);
    for (int k = 0; k < 100; k++) {
        Prior p = random_prior(rng, static_cast<size_t>(uniform_int(rng, 1, 64)));
        auto [value, m] = oracle::ranking_t1_by_enumeration({p.weights().begin(), p.weights().end()});
        EspReport r = ranking_baseline(p, 1);
        ASSERT_NEAR(r.value, value, 1e-12);
        ASSERT_EQ(r.extras.at("M"), static_cast<double>(m));
    }
}

TEST(esp, ranking_baseline_zero_queries_is_best_single_guess) {
    std::mt19937_64 rng(24);
    for (int k = 0; k < 50; k++) {
        Prior p = random_prior(rng, static_cast<size_t>(uniform_int(rng, 1, 30)));
        EspReport r = ranking_baseline(p, 0);
        ASSERT_NEAR(r.value, top_k_mass(p, 1), 1e-15);
        ASSERT_EQ(r.extras.at("M"), 1.0);
    }
}

TEST(esp, ranking_dominates_uniform_grover) {
    std::mt19937_64 rng(25);
    for (int k = 0; k < 100; k++) {
        size_t n = static_cast<size_t>(uniform_int(rng, 1, 64));
        int t = static_cast<int>(uniform_int(rng, 1, 10));
        Prior p = random_prior(rng, n);
        ASSERT_GE(ranking_baseline(p, t).value, esp(p, uniform_plan(n, t)) - 1e-12);
    }
}

TEST(esp, ranking_overshoot_is_not_clamped) {
    // Two items, five queries: 11 * arcsin(sqrt(1/2)) = 11 pi / 4 overshoots; sin^2 = 1/2 either way.
    Prior p = new_prior({1, 1});
    EspReport r = ranking_baseline(p, 5);
    double m1 = 0.5 * std::pow(std::sin(11 * std::numbers::pi / 2), 2);
    double m2 = std::pow(std::sin(11 * std::numbers::pi / 4), 2);
    ASSERT_NEAR(r.value, std::max(m1, m2), 1e-12);
    ASSERT_LT(r.value, 1.0);
}

TEST(esp, speedup_plan_examples) {
    Prior naive = naive_prior();
    AmplitudePlan four = speedup_plan(naive, 4);
    ASSERT_EQ(four.t(), 2);
    double level = (3 - std::sqrt(5.0)) / 8;  // sin^2(18 degrees)
    for (size_t i = 0; i < 4; i++) {
        ASSERT_NEAR(four[i], level, 1e-15);
    }
    for (size_t i = 4; i < 8; i++) {
        ASSERT_EQ(four[i], 0.0);
    }
    ASSERT_NEAR(four.total(), (3 - std::sqrt(5.0)) / 2, 1e-15);
    ASSERT_NEAR(esp(naive, four), 1.0, 1e-12);

    Prior p = new_prior({0.1, 0.5, 0.4});
    AmplitudePlan one = speedup_plan(p, 1);
    ASSERT_EQ(one.t(), 1);
    ASSERT_NEAR(one[1], 0.25, 1e-15);
    ASSERT_EQ(one[0], 0.0);
    ASSERT_NEAR(esp(p, one), 0.5, 1e-12);

    ASSERT_THROW(speedup_plan(p, 4), InvalidInput);
    ASSERT_THROW(speedup_plan(p, 0), InvalidInput);
}

TEST(esp, speedup_plan_matches_classical_mass) {
    std::mt19937_64 rng(26);
    for (int k = 0; k < 100; k++) {
        size_t n = static_cast<size_t>(uniform_int(rng, 1, 100));
        size_t classical = static_cast<size_t>(uniform_int(rng, 1, static_cast<int64_t>(n)));
        Prior p = random_prior(rng, n);
        AmplitudePlan plan = speedup_plan(p, classical);
        ASSERT_EQ(plan.t(), static_cast<int>(std::ceil(std::sqrt(static_cast<double>(classical)))));
        ASSERT_NEAR(esp(p, plan), top_k_mass(p, classical), 1e-12);
        ASSERT_LE(plan.total(), std::numbers::pi * std::numbers::pi / 16 + 1e-12);
    }
}

TEST(esp, report_json) {
    EspReport r{Method::kRanking, 0.5, 3, 8, {{"M", 4}}};
    ASSERT_EQ(r.to_json(), R"({"method": "ranking", "value": 0.5, "t": 3, "n": 8, "extras": {"M": 4}})");
    ASSERT_EQ(method_name(Method::kGroverUniform), "grover-uniform");
    ASSERT_EQ(classical_report(naive_prior(), 2).value, 0.5);
}
