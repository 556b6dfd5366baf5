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

#include "qsearch/simulator.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

#include "qsearch/error.h"

namespace qsearch {

namespace {

constexpr double kNormTolerance = 1e-10;

void check_norm(const std::vector<Amplitude> &amps, const char *where) {
    double total = 0;
    for (const auto &a : amps) {
        total += std::norm(a);
    }
    if (std::abs(total - 1) > kNormTolerance) {
        throw NumericalFailure(std::string("state norm drifted after ") + where, total - 1);
    }
}

void apply_single(std::vector<Amplitude> &amps, int qubit, const Amplitude m[2][2]) {
    size_t stride = size_t{1} << qubit;
    for (size_t base = 0; base < amps.size(); base += 2 * stride) {
        for (size_t i = base; i < base + stride; i++) {
            Amplitude a0 = amps[i];
            Amplitude a1 = amps[i + stride];
            amps[i] = m[0][0] * a0 + m[0][1] * a1;
            amps[i + stride] = m[1][0] * a0 + m[1][1] * a1;
        }
    }
}

}  // namespace

double StateVector::norm_squared() const {
    double total = 0;
    for (const auto &a : amplitudes) {
        total += std::norm(a);
    }
    return total;
}

StateVector prepare_state(const AmplitudePlan &plan) {
    StateVector state;
    state.amplitudes.resize(plan.size() + 1);
    state.amplitudes[0] = std::sqrt(std::max(0.0, 1 - plan.total()));
    for (size_t i = 0; i < plan.size(); i++) {
        state.amplitudes[i + 1] = std::sqrt(plan[i]);
    }
    return state;
}

IterationTrace run_iterations_traced(const AmplitudePlan &plan, size_t x, const IterationOptions &options) {
    if (x < 1 || x > plan.size()) {
        throw InvalidInput("item index " + std::to_string(x) + " out of range [1, " + std::to_string(plan.size()) + "]");
    }
    StateVector s = prepare_state(plan);
    std::vector<Amplitude> psi = s.amplitudes;
    double max_error = std::abs(s.norm_squared() - 1);
    auto track = [&]() {
        double total = 0;
        for (const auto &a : psi) {
            total += std::norm(a);
        }
        max_error = std::max(max_error, std::abs(total - 1));
    };

    for (int step = 0; step < plan.t(); step++) {
        if (!options.skip_oracle) {
            psi[x] = -psi[x];
        }
        track();

        // R_s = I - 2|s><s|, applied as a rank-1 update.
        Amplitude overlap = 0;
        for (size_t i = 0; i < psi.size(); i++) {
            overlap += std::conj(s.amplitudes[i]) * psi[i];
        }
        for (size_t i = 0; i < psi.size(); i++) {
            psi[i] -= 2.0 * overlap * s.amplitudes[i];
            if (options.negate_reflection) {
                psi[i] = -psi[i];
            }
        }
        track();
    }
    return IterationTrace{std::norm(psi[x]), max_error};
}

double run_iterations(const AmplitudePlan &plan, size_t x, const IterationOptions &options) {
    return run_iterations_traced(plan, x, options).probability;
}

std::string gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::kH:
            return "h";
        case GateKind::kX:
            return "x";
        case GateKind::kZ:
            return "z";
        case GateKind::kRY:
            return "ry";
        case GateKind::kCCZ:
            return "ccz";
    }
    return "?";
}

GateKind parse_gate_kind(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
    });
    if (lower == "h") {
        return GateKind::kH;
    }
    if (lower == "x") {
        return GateKind::kX;
    }
    if (lower == "z") {
        return GateKind::kZ;
    }
    if (lower == "ry") {
        return GateKind::kRY;
    }
    if (lower == "ccz") {
        return GateKind::kCCZ;
    }
    throw InvalidInput("unknown gate kind: " + std::string(name));
}

void GateCircuit::validate() const {
    if (qubit_count < 1) {
        throw InvalidInput("circuit needs at least one qubit");
    }
    for (size_t g = 0; g < gates.size(); g++) {
        const Gate &gate = gates[g];
        size_t arity = gate.kind == GateKind::kCCZ ? 3 : 1;
        if (gate.qubits.size() != arity) {
            throw InvalidInput(
                "gate " + std::to_string(g) + " (" + gate_kind_name(gate.kind) + ") expects " + std::to_string(arity) +
                " qubits");
        }
        std::set<int> seen;
        for (int q : gate.qubits) {
            if (q < 0 || q >= qubit_count) {
                throw InvalidInput("gate " + std::to_string(g) + " touches qubit " + std::to_string(q) + " out of range");
            }
            if (!seen.insert(q).second) {
                throw InvalidInput("gate " + std::to_string(g) + " repeats qubit " + std::to_string(q));
            }
        }
        if (gate.kind == GateKind::kRY && !std::isfinite(gate.theta)) {
            throw InvalidInput("gate " + std::to_string(g) + " has a non-finite angle");
        }
    }
}

std::vector<double> run_gate_circuit(const GateCircuit &circuit) {
    if (circuit.qubit_count > kMaxCircuitQubits) {
        throw ResourceLimit(
            "circuit has " + std::to_string(circuit.qubit_count) + " qubits; the cap is " +
            std::to_string(kMaxCircuitQubits));
    }
    circuit.validate();

    std::vector<Amplitude> amps(size_t{1} << circuit.qubit_count);
    amps[0] = 1;
    const double r = 1 / std::sqrt(2.0);
    for (const Gate &gate : circuit.gates) {
        switch (gate.kind) {
            case GateKind::kH: {
                const Amplitude m[2][2] = {{r, r}, {r, -r}};
                apply_single(amps, gate.qubits[0], m);
                break;
            }
            case GateKind::kX: {
                const Amplitude m[2][2] = {{0, 1}, {1, 0}};
                apply_single(amps, gate.qubits[0], m);
                break;
            }
            case GateKind::kZ: {
                const Amplitude m[2][2] = {{1, 0}, {0, -1}};
                apply_single(amps, gate.qubits[0], m);
                break;
            }
            case GateKind::kRY: {
                double c = std::cos(gate.theta / 2);
                double s = std::sin(gate.theta / 2);
                const Amplitude m[2][2] = {{c, -s}, {s, c}};
                apply_single(amps, gate.qubits[0], m);
                break;
            }
            case GateKind::kCCZ: {
                size_t mask = 0;
                for (int q : gate.qubits) {
                    mask |= size_t{1} << q;
                }
                for (size_t i = 0; i < amps.size(); i++) {
                    if ((i & mask) == mask) {
                        amps[i] = -amps[i];
                    }
                }
                break;
            }
        }
        check_norm(amps, gate_kind_name(gate.kind).c_str());
    }

    std::vector<double> probs(amps.size());
    for (size_t i = 0; i < amps.size(); i++) {
        probs[i] = std::norm(amps[i]);
    }
    return probs;
}

}  // namespace qsearch
