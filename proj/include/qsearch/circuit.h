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

#ifndef QSEARCH_CIRCUIT_H
#define QSEARCH_CIRCUIT_H

#include <array>
#include <string>
#include <string_view>

#include "qsearch/prior.h"
#include "qsearch/simulator.h"

namespace qsearch {

// Three-qubit search circuits for the "half-half" prior
//   (1/8 + sigma) on items 000..011 and (1/8 - sigma) on items 100..111,
// solved with one oracle query. Solution strings are written most significant qubit first, so
// "011" is basis index 3 (qubits 0 and 1 set). The high-weight block is qubit 2 = 0, which picks up
// the cos(theta/2) branch of the RY(theta) in state preparation.

/// Reference RY angles for sigma = 1/80, 2/80, ..., 8/80, given to 8 decimals. The theta table
/// compares recomputed angles against these.
constexpr std::array<double, 8> kReferenceThetas = {
    1.48725065, 1.40239865, 1.31480465, 1.22272065, 1.12383265, 1.01471265, 0.88979265, 0.73831265,
};

/// The half-half prior. Throws InvalidInput unless 0 <= sigma < 1/8.
Prior halfhalf_prior(double sigma);

/// RY angle of the optimal one-query plan: theta = 2 arccos(2 sqrt(q_hi)).
///
/// Runs the water-filling optimizer at t = 1 and checks that each block's four values agree and
/// that sin^2(theta/2)/4 reproduces the low-block value, both within 1e-10 (NumericalFailure
/// otherwise).
double theta_for_sigma(double sigma);

/// Basis index of a 3-character solution string. Throws InvalidInput for anything else.
int parse_solution(std::string_view solution);

struct HalfHalfSpec {
    double sigma;
    std::string solution;
    double theta;

    /// Validates both fields and derives theta.
    static HalfHalfSpec make(double sigma, std::string solution);

    /// cos^2(theta/2)/4 for high-block solutions, sin^2(theta/2)/4 otherwise.
    double solution_amplitude_sq() const;

    /// Analytic probability that the circuit outputs the solution.
    double predicted_success() const;
};

/// State prep (H, H, RY(theta)), phase oracle for the solution (X-conjugated CCZ), inverse prep,
/// reflection about |000> (X-conjugated CCZ on all qubits), state prep again.
GateCircuit build_halfhalf_circuit(const HalfHalfSpec &spec);

/// OpenQASM 2.0 text with one qreg q, one creg c and a trailing `measure q -> c;`.
///
/// CCZ is lowered as h / ccx / h on its target. Angles use 17 significant digits. Throws
/// InvalidInput for invalid circuits or more than kMaxCircuitQubits qubits.
std::string emit_qasm(const GateCircuit &circuit);

/// Reads text produced by emit_qasm back into a circuit (the solution label is not stored in QASM).
GateCircuit parse_qasm(std::string_view text);

/// {"qubit_count": n, "solution": "...", "gates": [{"kind": "ry", "qubits": [2], "theta": ...}, ...]}
std::string circuit_to_json(const GateCircuit &circuit);

GateCircuit circuit_from_json(const std::string &text);

}  // namespace qsearch

#endif
