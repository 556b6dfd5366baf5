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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "json.hpp"
#include "qsearch/error.h"
#include "qsearch/format.h"

namespace qsearch {

Prior Prior::from_weights(std::vector<double> raw_weights) {
    if (raw_weights.empty()) {
        throw InvalidInput("prior weights must be non-empty");
    }
    double total = 0;
    for (size_t i = 0; i < raw_weights.size(); i++) {
        double w = raw_weights[i];
        if (!std::isfinite(w) || w < 0) {
            throw InvalidInput("prior weight " + std::to_string(i) + " is negative or not finite");
        }
        total += w;
    }
    if (!(total > 0) || !std::isfinite(total)) {
        throw InvalidInput("prior weights must have a positive finite sum");
    }
    // Already-normalized input is kept bit for bit so serialized priors round-trip exactly.
    if (std::abs(total - 1) > kNormTolerance) {
        for (double &w : raw_weights) {
            w /= total;
        }
    }
    return Prior(std::move(raw_weights));
}

std::vector<size_t> Prior::descending_order() const {
    std::vector<size_t> order(weights_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return weights_[a] > weights_[b];
    });
    return order;
}

size_t Prior::argmax() const {
    return static_cast<size_t>(std::max_element(weights_.begin(), weights_.end()) - weights_.begin());
}

size_t Prior::support_size() const {
    return static_cast<size_t>(std::count_if(weights_.begin(), weights_.end(), [](double w) {
        return w > 0;
    }));
}

std::string Prior::to_json() const {
    return "{\"weights\": " + format_double_array(weights_) + "}\n";
}

Prior Prior::from_json(const std::string &text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw InvalidInput(std::string("prior JSON does not parse: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("weights") || !doc["weights"].is_array()) {
        throw InvalidInput("prior JSON must be an object with a \"weights\" array");
    }
    std::vector<double> raw;
    for (const auto &entry : doc["weights"]) {
        if (!entry.is_number()) {
            throw InvalidInput("prior weights must be numbers");
        }
        raw.push_back(entry.get<double>());
    }
    return from_weights(std::move(raw));
}

Prior new_prior(std::vector<double> raw_weights) {
    return Prior::from_weights(std::move(raw_weights));
}

double l1_distance(const Prior &p, const Prior &p_hat) {
    if (p.size() != p_hat.size()) {
        throw InvalidInput(
            "l1_distance dimension mismatch: " + std::to_string(p.size()) + " vs " + std::to_string(p_hat.size()));
    }
    double total = 0;
    for (size_t i = 0; i < p.size(); i++) {
        total += std::abs(p[i] - p_hat[i]);
    }
    return total;
}

Prior sample_random_prior(size_t n, uint64_t seed) {
    if (n == 0) {
        throw InvalidInput("sample_random_prior needs n >= 1");
    }
    std::mt19937_64 rng(seed);
    std::vector<double> raw(n);
    double total = 0;
    while (true) {
        total = 0;
        for (double &w : raw) {
            w = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            total += w;
        }
        if (total > 0) {
            break;
        }
    }
    return Prior::from_weights(std::move(raw));
}

double top_k_mass(const Prior &p, size_t k) {
    if (k > p.size()) {
        throw InvalidInput("top_k_mass: k=" + std::to_string(k) + " exceeds n=" + std::to_string(p.size()));
    }
    if (k == p.size()) {
        return 1.0;
    }
    std::vector<double> sorted(p.weights().begin(), p.weights().end());
    std::partial_sort(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(k), sorted.end(), std::greater<>());
    double total = 0;
    for (size_t i = 0; i < k; i++) {
        total += sorted[i];
    }
    return total;
}

Prior load_prior_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open prior file: " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return Prior::from_json(buf.str());
}

}  // namespace qsearch
