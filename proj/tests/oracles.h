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

#ifndef QSEARCH_TESTS_ORACLES_H
#define QSEARCH_TESTS_ORACLES_H

// Independent reference computations used only by the tests. None of these call into the code
// paths they are used to check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace qsearch::oracle {

/// One-query success probability as a polynomial: sin^2(3 arcsin sqrt(q)) = q (3 - 4q)^2.
inline double one_query_poly(double q) {
    return q * (3 - 4 * q) * (3 - 4 * q);
}

/// Best top-M uniform Grover value for t = 1, enumerated with the polynomial form.
inline std::pair<double, size_t> ranking_t1_by_enumeration(std::vector<double> weights) {
    std::sort(weights.begin(), weights.end(), [](double a, double b) {
        return a > b;
    });
    double best = -1;
    size_t best_m = 0;
    double mass = 0;
    for (size_t m = 1; m <= weights.size(); m++) {
        mass += weights[m - 1];
        double v = mass * one_query_poly(1.0 / static_cast<double>(m));
        if (v > best + 1e-15) {
            best = v;
            best_m = m;
        }
    }
    return {best, best_m};
}

/// High-block optimum for the half-half prior at t = 1.
///
/// With q_lo = 1/4 - q_hi the stationarity balance p_hi (48 q^2 - 48 q + 9) = p_lo (48 q^2 + 24 q)
/// is a quadratic in q = q_hi; this returns its root in [1/8, 1/4].
inline double halfhalf_q_hi(double sigma) {
    double hi = 0.125 + sigma;
    double lo = 0.125 - sigma;
    double a = 48 * (hi - lo);
    double b = -(48 * hi + 24 * lo);
    double c = 9 * hi;
    if (a == 0) {
        return -c / b;
    }
    double disc = std::sqrt(b * b - 4 * a * c);
    double r1 = (-b - disc) / (2 * a);
    double r2 = (-b + disc) / (2 * a);
    return (r1 >= 0.125 - 1e-12 && r1 <= 0.25 + 1e-12) ? r1 : r2;
}

/// Central finite difference.
inline double central_difference(const std::function<double(double)> &f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2 * h);
}

/// Grover iterations by explicit dense matrices: builds O_x and R_s = I - 2|s><s| as full
/// (N+1)x(N+1) matrices and multiplies. Index 0 is the sink, items are 1..N.
inline double dense_matrix_grover(const std::vector<double> &q, int t, size_t x) {
    size_t dim = q.size() + 1;
    std::vector<double> s(dim);
    double total = 0;
    for (size_t i = 0; i < q.size(); i++) {
        s[i + 1] = std::sqrt(q[i]);
        total += q[i];
    }
    s[0] = std::sqrt(std::max(0.0, 1 - total));
    std::vector<std::vector<double>> step(dim, std::vector<double>(dim, 0.0));
    for (size_t r = 0; r < dim; r++) {
        for (size_t c = 0; c < dim; c++) {
            double reflect = (r == c ? 1.0 : 0.0) - 2 * s[r] * s[c];
            double oracle_sign = (c == x) ? -1.0 : 1.0;
            step[r][c] = reflect * oracle_sign;
        }
    }
    std::vector<double> psi = s;
    for (int k = 0; k < t; k++) {
        std::vector<double> next(dim, 0.0);
        for (size_t r = 0; r < dim; r++) {
            for (size_t c = 0; c < dim; c++) {
                next[r] += step[r][c] * psi[c];
            }
        }
        psi = next;
    }
    return psi[x] * psi[x];
}

}  // namespace qsearch::oracle

#endif
