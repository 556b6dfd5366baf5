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

#include "qsearch/prior.h"

#include <random>

#include "gtest/gtest.h"
#include "qsearch/error.h"
#include "qsearch/random.h"

using namespace qsearch;

TEST(prior, normalizes_uniform) {
    Prior p = new_prior({1, 1, 1, 1});
    ASSERT_EQ(p.size(), 4u);
    for (double w : p.weights()) {
        ASSERT_EQ(w, 0.25);
    }
}

TEST(prior, keeps_already_normalized_weights_and_order) {
    std::vector<double> naive = {0.25, 0.25, 0.25, 0.25, 0, 0, 0, 0};
    Prior p = new_prior(naive);
    ASSERT_EQ(std::vector<double>(p.weights().begin(), p.weights().end()), naive);

    Prior unsorted = new_prior({1, 3, 2});
    ASSERT_DOUBLE_EQ(unsorted[0], 1.0 / 6);
    ASSERT_DOUBLE_EQ(unsorted[1], 0.5);
    ASSERT_DOUBLE_EQ(unsorted[2], 1.0 / 3);
}

TEST(prior, single_support) {
    Prior p = new_prior({2, 0, 0, 0});
    ASSERT_EQ(p[0], 1.0);
    ASSERT_EQ(p[1], 0.0);
    ASSERT_EQ(p.support_size(), 1u);
}

TEST(prior, rejects_bad_input) {
    ASSERT_THROW(new_prior({}), InvalidInput);
    ASSERT_THROW(new_prior({0.5, -0.1, 0.6}), InvalidInput);
    ASSERT_THROW(new_prior({0, 0, 0}), InvalidInput);
    ASSERT_THROW(new_prior({1, std::nan("")}), InvalidInput);
    ASSERT_THROW(new_prior({1, INFINITY}), InvalidInput);
}

TEST(prior, l1_distance_examples) {
    Prior a = new_prior({0.6, 0.4});
    ASSERT_EQ(l1_distance(a, a), 0.0);
    ASSERT_EQ(l1_distance(new_prior({1, 0}), new_prior({0, 1})), 2.0);
    ASSERT_NEAR(l1_distance(a, new_prior({0.5, 0.5})), 0.2, 1e-15);
    ASSERT_THROW(l1_distance(a, new_prior({1, 1, 1})), InvalidInput);
}

TEST(prior, l1_distance_is_a_metric_on_random_triples) {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 200; k++) {
        size_t n = static_cast<size_t>(uniform_int(rng, 1, 20));
        Prior a = random_prior(rng, n);
        Prior b = random_prior(rng, n);
        Prior c = random_prior(rng, n);
        double ab = l1_distance(a, b);
        ASSERT_EQ(ab, l1_distance(b, a));
        ASSERT_GE(ab, 0.0);
        ASSERT_LE(ab, 2.0 + 1e-12);
        ASSERT_LE(l1_distance(a, c), ab + l1_distance(b, c) + 1e-12);
    }
}

TEST(prior, sample_random_prior_contract) {
    ASSERT_EQ(sample_random_prior(1, 99)[0], 1.0);
    ASSERT_THROW(sample_random_prior(0, 1), InvalidInput);

    Prior a = sample_random_prior(512, 7);
    Prior b = sample_random_prior(512, 7);
    ASSERT_EQ(a, b);
    ASSERT_NE(a, sample_random_prior(512, 8));

    double sum = 0;
    for (double w : a.weights()) {
        ASSERT_GE(w, 0.0);
        sum += w;
    }
    ASSERT_NEAR(sum / 512, 1.0 / 512, 1e-15);
}

TEST(prior, sample_random_prior_is_pinned) {
    // Frozen from the first run; guards against the generator or the word-to-double map changing.
    Prior p = sample_random_prior(3, 7);
    std::mt19937_64 rng(7);
    std::vector<double> raw(3);
    double total = 0;
    for (double &w : raw) {
        w = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        total += w;
    }
    for (size_t i = 0; i < 3; i++) {
        ASSERT_EQ(p[i], raw[i] / total);
    }
}

TEST(prior, normalization_invariant_on_random_priors) {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 200; k++) {
        Prior p = random_prior(rng, static_cast<size_t>(uniform_int(rng, 1, 600)));
        double sum = 0;
        for (double w : p.weights()) {
            ASSERT_GE(w, 0.0);
            sum += w;
        }
        ASSERT_NEAR(sum, 1.0, Prior::kNormTolerance);
    }
}

TEST(prior, top_k_mass_examples) {
    Prior naive = new_prior({0.25, 0.25, 0.25, 0.25, 0, 0, 0, 0});
    ASSERT_EQ(top_k_mass(naive, 1), 0.25);
    ASSERT_EQ(top_k_mass(naive, 0), 0.0);
    ASSERT_NEAR(top_k_mass(new_prior({0.2, 0.5, 0.3}), 2), 0.8, 1e-15);
    ASSERT_THROW(top_k_mass(naive, 9), InvalidInput);
}

TEST(prior, top_k_mass_monotone_and_reaches_one) {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 50; k++) {
        Prior p = random_prior(rng, static_cast<size_t>(uniform_int(rng, 1, 40)));
        double prev = 0;
        for (size_t m = 0; m <= p.size(); m++) {
            double v = top_k_mass(p, m);
            ASSERT_GE(v, prev);
            prev = v;
        }
        ASSERT_EQ(top_k_mass(p, p.size()), 1.0);
    }
}

TEST(prior, descending_order_breaks_ties_by_index) {
    Prior p = new_prior({0.1, 0.3, 0.3, 0.2, 0.1});
    ASSERT_EQ(p.descending_order(), (std::vector<size_t>{1, 2, 3, 0, 4}));
    ASSERT_EQ(p.argmax(), 1u);
}

TEST(prior, json_round_trip) {
    Prior p = sample_random_prior(17, 3);
    ASSERT_EQ(Prior::from_json(p.to_json()), p);
    ASSERT_EQ(Prior::from_json(R"({"weights": [2, 2]})"), new_prior({1, 1}));
    ASSERT_THROW(Prior::from_json("{\"w\": [1]}"), InvalidInput);
    ASSERT_THROW(Prior::from_json("not json"), InvalidInput);
    ASSERT_THROW(Prior::from_json(R"({"weights": ["a"]})"), InvalidInput);
    ASSERT_THROW(load_prior_file("/nonexistent/prior.json"), InvalidInput);
}
