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

#include "qsearch/random.h"

#include <algorithm>
#include <cmath>

#include "qsearch/optimizer.h"

namespace qsearch {

double uniform01(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int64_t uniform_int(std::mt19937_64 &rng, int64_t lo, int64_t hi) {
    auto span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int64_t>(rng() % span);
}

AmplitudePlan random_plan(std::mt19937_64 &rng, size_t n, int t, bool capped) {
    std::vector<double> q(n);
    double total = 0;
    for (double &v : q) {
        v = -std::log(1 - uniform01(rng));
        total += v;
    }
    double mass = uniform01(rng);
    double level = cap(t);
    for (double &v : q) {
        v = std::min(1.0, v / total * mass);
        if (capped) {
            v = std::min(v, level);
        }
    }
    return AmplitudePlan(std::move(q), t);
}

Prior random_prior(std::mt19937_64 &rng, size_t n) {
    return sample_random_prior(n, rng());
}

Prior perturbed_prior(std::mt19937_64 &rng, const Prior &p, double max_distance) {
    Prior other = random_prior(rng, p.size());
    double d = l1_distance(p, other);
    double a = uniform01(rng);
    if (d > 0) {
        a = std::min(a, max_distance / d);
    }
    std::vector<double> mixed(p.size());
    for (size_t i = 0; i < p.size(); i++) {
        mixed[i] = (1 - a) * p[i] + a * other[i];
    }
    return Prior::from_weights(std::move(mixed));
}

}  // namespace qsearch
