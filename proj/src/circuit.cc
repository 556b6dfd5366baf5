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

#include "qsearch/circuit.h"

#include <cmath>
#include <sstream>

#include "json.hpp"
#include "qsearch/error.h"
#include "qsearch/format.h"
#include "qsearch/optimizer.h"

namespace qsearch {

namespace {

constexpr double kBlockTolerance = 1e-10;

void check_sigma(double sigma) {
    if (!(sigma >= 0 && sigma < 0.125)) {
        throw InvalidInput("sigma must lie in [0, 1/8), got " + format_double(sigma));
    }
}

void add(GateCircuit &c, GateKind kind, std::vector<int> qubits, double theta = 0) {
    c.gates.push_back(Gate{kind, std::move(qubits), theta});
}

std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return "";
    }
    size_t e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

int parse_qubit_ref(const std::string &token) {
    // q[<index>]
    if (token.size() < 4 || token.rfind("q[", 0) != 0 || token.back() != ']') {
        throw InvalidInput("bad qubit reference: " + token);
    }
    try {
        size_t used = 0;
        int v = std::stoi(token.substr(2, token.size() - 3), &used);
        if (used != token.size() - 3) {
            throw InvalidInput("bad qubit reference: " + token);
        }
        return v;
    } catch (const std::logic_error &) {
        throw InvalidInput("bad qubit reference: " + token);
    }
}

}  // namespace

Prior halfhalf_prior(double sigma) {
    check_sigma(sigma);
    std::vector<double> w(8);
    for (int i = 0; i < 8; i++) {
        w[i] = i < 4 ? 0.125 + sigma : 0.125 - sigma;
    }
    return Prior::from_weights(std::move(w));
}

double theta_for_sigma(double sigma) {
    Prior p = halfhalf_prior(sigma);
    OptimalPlan solved = optimize(p, 1);
    const auto &q = solved.plan;
    for (int i = 1; i < 4; i++) {
        if (std::abs(q[i] - q[0]) > kBlockTolerance || std::abs(q[4 + i] - q[4]) > kBlockTolerance) {
            throw NumericalFailure("half-half optimum is not constant on its blocks", std::abs(q[i] - q[0]));
        }
    }
    double q_hi = q[0];
    double q_lo = q[4];
    double theta = 2 * std::acos(std::min(1.0, 2 * std::sqrt(q_hi)));
    double s = std::sin(theta / 2);
    double mismatch = std::abs(s * s / 4 - q_lo);
    if (mismatch > kBlockTolerance) {
        throw NumericalFailure("theta does not reproduce the low-block amplitude", mismatch);
    }
    return theta;
}

int parse_solution(std::string_view solution) {
    if (solution.size() != 3) {
        throw InvalidInput("solution must be a 3-bit string, got '" + std::string(solution) + "'");
    }
    int index = 0;
    for (char c : solution) {
        if (c != '0' && c != '1') {
            throw InvalidInput("solution must be a 3-bit string, got '" + std::string(solution) + "'");
        }
        index = 2 * index + (c - '0');
    }
    return index;
}

HalfHalfSpec HalfHalfSpec::make(double sigma, std::string solution) {
    check_sigma(sigma);
    parse_solution(solution);
    return HalfHalfSpec{sigma, std::move(solution), theta_for_sigma(sigma)};
}

double HalfHalfSpec::solution_amplitude_sq() const {
    bool high = (parse_solution(solution) & 4) == 0;
    double half = theta / 2;
    double c = high ? std::cos(half) : std::sin(half);
    return c * c / 4;
}

double HalfHalfSpec::predicted_success() const {
    return success_prob_single(solution_amplitude_sq(), 1);
}

GateCircuit build_halfhalf_circuit(const HalfHalfSpec &spec) {
    int target = parse_solution(spec.solution);
    if (!std::isfinite(spec.theta)) {
        throw InvalidInput("half-half theta must be finite");
    }
    GateCircuit c;
    c.qubit_count = 3;
    c.solution_label = spec.solution;

    auto prepare = [&](double angle) {
        add(c, GateKind::kH, {0});
        add(c, GateKind::kH, {1});
        add(c, GateKind::kRY, {2}, angle);
    };
    auto flip_zero_bits = [&]() {
        for (int q = 0; q < 3; q++) {
            if (((target >> q) & 1) == 0) {
                add(c, GateKind::kX, {q});
            }
        }
    };
    auto flip_all = [&]() {
        for (int q = 0; q < 3; q++) {
            add(c, GateKind::kX, {q});
        }
    };

    prepare(spec.theta);
    flip_zero_bits();
    add(c, GateKind::kCCZ, {0, 1, 2});
    flip_zero_bits();
    prepare(-spec.theta);
    flip_all();
    add(c, GateKind::kCCZ, {0, 1, 2});
    flip_all();
    prepare(spec.theta);
    return c;
}

std::string emit_qasm(const GateCircuit &circuit) {
    if (circuit.qubit_count > kMaxCircuitQubits) {
        throw InvalidInput("emit_qasm supports at most " + std::to_string(kMaxCircuitQubits) + " qubits");
    }
    circuit.validate();
    std::string n = std::to_string(circuit.qubit_count);
    std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" + n + "];\ncreg c[" + n + "];\n";
    auto ref = [](int q) {
        return "q[" + std::to_string(q) + "]";
    };
    for (const Gate &g : circuit.gates) {
        switch (g.kind) {
            case GateKind::kH:
            case GateKind::kX:
            case GateKind::kZ:
                out += gate_kind_name(g.kind) + " " + ref(g.qubits[0]) + ";\n";
                break;
            case GateKind::kRY:
                out += "ry(" + format_double(g.theta) + ") " + ref(g.qubits[0]) + ";\n";
                break;
            case GateKind::kCCZ:
                out += "h " + ref(g.qubits[2]) + ";\n";
                out += "ccx " + ref(g.qubits[0]) + "," + ref(g.qubits[1]) + "," + ref(g.qubits[2]) + ";\n";
                out += "h " + ref(g.qubits[2]) + ";\n";
                break;
        }
    }
    out += "measure q -> c;\n";
    return out;
}

GateCircuit parse_qasm(std::string_view text) {
    GateCircuit c;
    std::istringstream in{std::string(text)};
    std::string raw;
    bool saw_header = false;
    int pending_h_skip = -1;
    while (std::getline(in, raw)) {
        std::string line = trim(raw);
        if (line.empty() || line.rfind("//", 0) == 0) {
            continue;
        }
        if (line.back() != ';') {
            throw InvalidInput("QASM statement missing ';': " + line);
        }
        line.pop_back();
        if (line == "OPENQASM 2.0") {
            saw_header = true;
            continue;
        }
        if (line.rfind("include", 0) == 0 || line.rfind("creg", 0) == 0 || line.rfind("measure", 0) == 0) {
            continue;
        }
        if (line.rfind("qreg", 0) == 0) {
            auto open = line.find('[');
            auto close = line.find(']');
            if (open == std::string::npos || close == std::string::npos || close < open) {
                throw InvalidInput("bad qreg declaration: " + line);
            }
            c.qubit_count = std::stoi(line.substr(open + 1, close - open - 1));
            continue;
        }

        size_t space = line.find(' ');
        if (space == std::string::npos) {
            throw InvalidInput("bad QASM gate statement: " + line);
        }
        std::string head = line.substr(0, space);
        std::string args = trim(std::string_view(line).substr(space + 1));
        std::vector<int> qubits;
        std::stringstream arg_stream(args);
        std::string token;
        while (std::getline(arg_stream, token, ',')) {
            qubits.push_back(parse_qubit_ref(trim(token)));
        }

        if (head == "ccx") {
            // Undo the h / ccx / h lowering of CCZ.
            if (qubits.size() != 3 || c.gates.empty() || c.gates.back().kind != GateKind::kH ||
                c.gates.back().qubits[0] != qubits[2]) {
                throw InvalidInput("ccx is only accepted as part of a lowered CCZ");
            }
            c.gates.pop_back();
            c.gates.push_back(Gate{GateKind::kCCZ, qubits, 0});
            pending_h_skip = qubits[2];
            continue;
        }
        if (pending_h_skip >= 0) {
            if (head != "h" || qubits.size() != 1 || qubits[0] != pending_h_skip) {
                throw InvalidInput("lowered CCZ is missing its closing h");
            }
            pending_h_skip = -1;
            continue;
        }
        if (head.rfind("ry(", 0) == 0 && head.back() == ')') {
            double theta = 0;
            try {
                theta = std::stod(head.substr(3, head.size() - 4));
            } catch (const std::logic_error &) {
                throw InvalidInput("bad ry angle: " + head);
            }
            c.gates.push_back(Gate{GateKind::kRY, qubits, theta});
            continue;
        }
        c.gates.push_back(Gate{parse_gate_kind(head), qubits, 0});
    }
    if (!saw_header) {
        throw InvalidInput("missing OPENQASM 2.0 header");
    }
    if (pending_h_skip >= 0) {
        throw InvalidInput("lowered CCZ is missing its closing h");
    }
    c.validate();
    return c;
}

std::string circuit_to_json(const GateCircuit &circuit) {
    std::string out = "{\"qubit_count\": " + std::to_string(circuit.qubit_count) +
                      ", \"solution\": " + json_quote(circuit.solution_label) + ", \"gates\": [";
    for (size_t g = 0; g < circuit.gates.size(); g++) {
        const Gate &gate = circuit.gates[g];
        if (g) {
            out += ", ";
        }
        out += "{\"kind\": " + json_quote(gate_kind_name(gate.kind)) + ", \"qubits\": [";
        for (size_t k = 0; k < gate.qubits.size(); k++) {
            out += (k ? ", " : "") + std::to_string(gate.qubits[k]);
        }
        out += "]";
        if (gate.kind == GateKind::kRY) {
            out += ", \"theta\": " + format_double(gate.theta);
        }
        out += "}";
    }
    out += "]}\n";
    return out;
}

GateCircuit circuit_from_json(const std::string &text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw InvalidInput(std::string("circuit JSON does not parse: ") + e.what());
    }
    GateCircuit c;
    try {
        c.qubit_count = doc.at("qubit_count").get<int>();
        c.solution_label = doc.value("solution", "");
        for (const auto &g : doc.at("gates")) {
            Gate gate{parse_gate_kind(g.at("kind").get<std::string>()), g.at("qubits").get<std::vector<int>>(), 0};
            if (gate.kind == GateKind::kRY) {
                gate.theta = g.at("theta").get<double>();
            }
            c.gates.push_back(std::move(gate));
        }
    } catch (const nlohmann::json::exception &e) {
        throw InvalidInput(std::string("malformed circuit JSON: ") + e.what());
    }
    c.validate();
    return c;
}

}  // namespace qsearch
