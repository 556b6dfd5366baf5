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

#ifndef QSEARCH_SIMULATOR_H
#define QSEARCH_SIMULATOR_H

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qsearch/esp.h"

namespace qsearch {

using Amplitude = std::complex<double>;

/// Dense state over N+1 basis states. Index 0 is the sink that carries sqrt(1 - sum(q));
/// indices 1..N are the items.
struct StateVector {
    std::vector<Amplitude> amplitudes;

    double norm_squared() const;
};

/// |s> = sqrt(1 - sum q) |sink> + sum_i sqrt(q_i) |i>.
StateVector prepare_state(const AmplitudePlan &plan);

struct IterationOptions {
    /// Use 2|s><s| - I instead of I - 2|s><s| (a global phase per iteration).
    bool negate_reflection = false;
    /// Fault injection: the oracle leaves the state untouched.
    bool skip_oracle = false;
};

struct IterationTrace {
    double probability;
    /// Largest | ||psi||^2 - 1 | seen after any oracle or reflection.
    double max_norm_error;
};

/// Applies (R_s O_x)^t to |s> and returns the probability of measuring item x (1-based).
IterationTrace run_iterations_traced(const AmplitudePlan &plan, size_t x, const IterationOptions &options = {});

double run_iterations(const AmplitudePlan &plan, size_t x, const IterationOptions &options = {});

enum class GateKind { kH, kX, kZ, kRY, kCCZ };

std::string gate_kind_name(GateKind kind);

/// Throws InvalidInput for names other than h, x, z, ry, ccz (case-insensitive).
GateKind parse_gate_kind(std::string_view name);

struct Gate {
    GateKind kind;
    /// One target for single-qubit gates; {control, control, target} for CCZ.
    std::vector<int> qubits;
    /// Rotation angle in radians; only meaningful for RY.
    double theta = 0;

    bool operator==(const Gate &other) const = default;
};

struct GateCircuit {
    int qubit_count = 0;
    std::vector<Gate> gates;
    std::string solution_label;

    /// Throws InvalidInput on out-of-range or repeated qubits, wrong arity, or non-finite angles.
    void validate() const;
};

/// Largest qubit count run_gate_circuit accepts.
constexpr int kMaxCircuitQubits = 12;

/// Exact outcome distribution of the circuit applied to |0...0>.
///
/// Basis index = sum_j bit_j * 2^j, qubit 0 being the least significant bit. Throws ResourceLimit
/// above kMaxCircuitQubits and NumericalFailure if the norm drifts by more than 1e-10.
std::vector<double> run_gate_circuit(const GateCircuit &circuit);

}  // namespace qsearch

#endif
