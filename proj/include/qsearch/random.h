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

#ifndef QSEARCH_RANDOM_H
#define QSEARCH_RANDOM_H

#include <cstdint>
#include <random>

#include "qsearch/esp.h"
#include "qsearch/prior.h"

namespace qsearch {

// Seeded generators for property checks. All draws go through uniform01 so sequences are identical
// across standard libraries.

/// (word >> 11) * 2^-53, in [0, 1).
double uniform01(std::mt19937_64 &rng);

/// Uniform integer in [lo, hi].
int64_t uniform_int(std::mt19937_64 &rng, int64_t lo, int64_t hi);

/// Random feasible plan: Dirichlet(1) direction scaled to a Uniform(0,1) total mass. When
/// `capped` is set, each coordinate is additionally clipped to cap(t).
AmplitudePlan random_plan(std::mt19937_64 &rng, size_t n, int t, bool capped = false);

/// Random prior with n items: normalized Uniform(0,1) weights, a fresh seed drawn from rng.
Prior random_prior(std::mt19937_64 &rng, size_t n);

/// p moved towards a random prior r: (1 - a) p + a r with a chosen so that l1_distance(p, result)
/// does not exceed max_distance.
Prior perturbed_prior(std::mt19937_64 &rng, const Prior &p, double max_distance);

}  // namespace qsearch

#endif
