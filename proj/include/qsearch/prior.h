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

#ifndef QSEARCH_PRIOR_H
#define QSEARCH_PRIOR_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qsearch {

/// A normalized probability distribution over the N candidate locations of the unique solution.
///
/// Weights are stored in caller order; nothing here assumes they are sorted. Instances are
/// immutable once built.
class Prior {
   public:
    /// Absolute tolerance on the sum of the weights after normalization.
    static constexpr double kNormTolerance = 1e-12;

    /// Normalizes non-negative raw weights. Throws InvalidInput on an empty vector, a negative or
    /// non-finite entry, or an all-zero vector.
    static Prior from_weights(std::vector<double> raw_weights);

    std::span<const double> weights() const {
        return weights_;
    }
    size_t size() const {
        return weights_.size();
    }
    double operator[](size_t i) const {
        return weights_[i];
    }
    bool operator==(const Prior &other) const = default;

    /// Indices sorted by descending weight; equal weights keep ascending index order.
    std::vector<size_t> descending_order() const;

    /// Index of the largest weight (lowest index wins ties).
    size_t argmax() const;

    /// Number of strictly positive weights.
    size_t support_size() const;

    /// JSON object {"weights": [...]} with 17 significant digits per weight.
    std::string to_json() const;

    /// Parses {"weights": [...]} and normalizes. Throws InvalidInput on malformed text.
    static Prior from_json(const std::string &text);

   private:
    explicit Prior(std::vector<double> weights) : weights_(std::move(weights)) {
    }
    std::vector<double> weights_;
};

/// Same as Prior::from_weights.
Prior new_prior(std::vector<double> raw_weights);

/// Sum of absolute coordinate differences. Throws InvalidInput on dimension mismatch.
double l1_distance(const Prior &p, const Prior &p_hat);

/// n i.i.d. Uniform(0,1) weights, normalized.
///
/// Uses std::mt19937_64 (whose output sequence is fixed by the C++ standard) seeded with `seed`,
/// converting each 64-bit word to a double as (word >> 11) * 2^-53. The library distribution
/// classes are avoided because their output is implementation-defined.
Prior sample_random_prior(size_t n, uint64_t seed);

/// Sum of the k largest weights. Throws InvalidInput when k > n.
double top_k_mass(const Prior &p, size_t k);

/// Reads a prior JSON file. Throws InvalidInput if the file can't be read or parsed.
Prior load_prior_file(const std::string &path);

}  // namespace qsearch

#endif
