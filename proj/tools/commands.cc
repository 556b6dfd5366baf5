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

#include "commands.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>

#include "qsearch/bounds.h"
#include "qsearch/circuit.h"
#include "qsearch/error.h"
#include "qsearch/esp.h"
#include "qsearch/format.h"
#include "qsearch/optimizer.h"
#include "qsearch/parallel.h"
#include "qsearch/prior.h"
#include "qsearch/random.h"
#include "qsearch/simulator.h"

namespace qsearch::cli {

namespace {

constexpr double kOrderSlack = 1e-9;
const char *const kCompareHeader = "t,method,mean_esp,std_esp,samples,seed";
const char *const kThetaHeader = "sigma,theta,paper_theta,abs_diff";

bool write_file(const std::string &path, const std::string &content, std::ostream &err) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        err << "error: cannot open " << path << " for writing\n";
        return false;
    }
    f << content;
    f.close();
    if (!f) {
        err << "error: failed writing " << path << "\n";
        return false;
    }
    return true;
}

}  // namespace

int cmd_optimize(const OptimizeArgs &args, std::ostream &out, std::ostream &err) {
    if (args.t < 0) {
        err << "error: t must be >= 0\n";
        return kExitInputError;
    }
    if (args.method != "waterfill" && args.method != "closed-t1") {
        err << "error: unknown method '" << args.method << "' (expected waterfill or closed-t1)\n";
        return kExitInputError;
    }
    if (args.method == "closed-t1" && args.t != 1) {
        err << "error: closed-t1 only solves t = 1\n";
        return kExitInputError;
    }
    std::optional<Prior> prior;
    try {
        prior = load_prior_file(args.prior_path);
    } catch (const InvalidInput &e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    std::optional<OptimalPlan> solved;
    try {
        solved = args.method == "waterfill" ? optimize(*prior, args.t) : optimize_t1_closed_form(*prior);
    } catch (const NumericalFailure &e) {
        err << "error: " << e.what() << "\n";
        return kExitSolverFailure;
    }

    std::string json = solved->to_json();
    if (args.out_path.empty()) {
        out << json;
    } else if (!write_file(args.out_path, json, err)) {
        return kExitInputError;
    }
    out << "esp " << format_double(solved->esp) << "\n";
    out << "kkt_residual " << format_double(solved->kkt_residual) << "\n";
    return kExitOk;
}

int cmd_compare(const CompareArgs &args, std::ostream &out, std::ostream &err) {
    std::optional<Prior> injected;
    if (!args.prior_path.empty()) {
        try {
            injected = load_prior_file(args.prior_path);
        } catch (const InvalidInput &e) {
            err << "error: " << e.what() << "\n";
            return kExitInputError;
        }
    }
    size_t n = injected ? injected->size() : args.n;
    if (n < 1 || args.samples < 1 || args.t_min < 0 || args.t_min > args.t_max) {
        err << "error: need n >= 1, samples >= 1 and 0 <= t_min <= t_max\n";
        return kExitInputError;
    }
    if (args.out_path.empty()) {
        err << "error: an output path is required\n";
        return kExitInputError;
    }

    constexpr size_t kMethods = 4;
    const char *const names[kMethods] = {"classical", "grover-uniform", "ranking", "optimal"};
    size_t t_count = static_cast<size_t>(args.t_max - args.t_min + 1);

    // values[sample][t_index * kMethods + method]
    std::vector<std::vector<double>> values(args.samples, std::vector<double>(t_count * kMethods));
    std::vector<std::string> violations(args.samples);
    try {
        parallel_for(args.samples, [&](size_t s) {
            Prior p = injected ? *injected : sample_random_prior(n, args.seed ^ static_cast<uint64_t>(s));
            for (size_t ti = 0; ti < t_count; ti++) {
                int t = args.t_min + static_cast<int>(ti);
                double classical = top_k_mass(p, std::min(static_cast<size_t>(t), n));
                double uniform = esp(p, uniform_plan(n, t));
                double ranking = ranking_baseline(p, t).value;
                double optimal = optimize(p, t).esp;
                double *row = &values[s][ti * kMethods];
                row[0] = classical;
                row[1] = uniform;
                row[2] = ranking;
                row[3] = optimal;
                if (violations[s].empty() && (optimal < ranking - kOrderSlack || ranking < uniform - kOrderSlack ||
                                              optimal < classical - kOrderSlack)) {
                    std::ostringstream msg;
                    msg << "sample " << s << " (seed " << (args.seed ^ static_cast<uint64_t>(s)) << "), t=" << t
                        << ": classical=" << format_double(classical) << " grover-uniform=" << format_double(uniform)
                        << " ranking=" << format_double(ranking) << " optimal=" << format_double(optimal);
                    violations[s] = msg.str();
                }
            }
        });
    } catch (const NumericalFailure &e) {
        err << "error: " << e.what() << "\n";
        return kExitSolverFailure;
    }

    bool violated = false;
    for (const auto &v : violations) {
        if (!v.empty()) {
            err << "ordering violated: " << v << "\n";
            violated = true;
        }
    }
    if (violated) {
        return kExitPropertyFailure;
    }

    std::string csv = std::string(kCompareHeader) + "\n";
    for (size_t ti = 0; ti < t_count; ti++) {
        int t = args.t_min + static_cast<int>(ti);
        for (size_t m = 0; m < kMethods; m++) {
            double mean = 0;
            for (size_t s = 0; s < args.samples; s++) {
                mean += values[s][ti * kMethods + m];
            }
            mean /= static_cast<double>(args.samples);
            double var = 0;
            for (size_t s = 0; s < args.samples; s++) {
                double d = values[s][ti * kMethods + m] - mean;
                var += d * d;
            }
            double sd = std::sqrt(var / static_cast<double>(args.samples));
            csv += std::to_string(t) + "," + names[m] + "," + format_double(mean) + "," + format_double(sd) + "," +
                   std::to_string(args.samples) + "," + std::to_string(args.seed) + "\n";
        }
    }
    if (!write_file(args.out_path, csv, err)) {
        return kExitInputError;
    }
    out << "wrote " << t_count * kMethods << " rows to " << args.out_path << "\n";
    return kExitOk;
}

std::vector<CompareRow> read_compare_csv(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open " + path);
    }
    std::string line;
    if (!std::getline(in, line) || line != kCompareHeader) {
        throw InvalidInput("unexpected compare CSV header in " + path);
    }
    std::vector<CompareRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::stringstream ss(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ss, field, ',')) {
            fields.push_back(field);
        }
        if (fields.size() != 6) {
            throw InvalidInput("bad compare CSV row: " + line);
        }
        try {
            rows.push_back(CompareRow{
                std::stoi(fields[0]), fields[1], std::stod(fields[2]), std::stod(fields[3]),
                static_cast<size_t>(std::stoull(fields[4])), std::stoull(fields[5])});
        } catch (const std::logic_error &) {
            throw InvalidInput("bad compare CSV row: " + line);
        }
    }
    return rows;
}

int cmd_theta_table(const std::string &out_path, std::ostream &out, std::ostream &err) {
    if (out_path.empty()) {
        err << "error: an output path is required\n";
        return kExitInputError;
    }
    std::string csv = std::string(kThetaHeader) + "\n";
    bool ok = true;
    out << std::left << std::setw(8) << "sigma" << std::setw(22) << "theta" << std::setw(22) << "reference"
        << "abs_diff\n";
    for (int j = 1; j <= 8; j++) {
        double sigma = j / 80.0;
        double theta = 0;
        try {
            theta = theta_for_sigma(sigma);
        } catch (const NumericalFailure &e) {
            err << "error: " << e.what() << "\n";
            return kExitSolverFailure;
        }
        double reference = kReferenceThetas[j - 1];
        double diff = std::abs(theta - reference);
        ok = ok && diff <= 1e-3;
        csv += format_double(sigma) + "," + format_double(theta) + "," + format_double(reference) + "," +
               format_double(diff) + "\n";
        out << std::setw(8) << (std::to_string(j) + "/80") << std::setw(22) << format_double(theta) << std::setw(22)
            << format_double(reference) << format_double(diff) << "\n";
    }
    if (!write_file(out_path, csv, err)) {
        return kExitInputError;
    }
    if (!ok) {
        err << "theta table differs from the reference values by more than 1e-3\n";
        return kExitPropertyFailure;
    }
    return kExitOk;
}

namespace {

struct CheckOutcome {
    std::string name;
    int cases = 0;
    double worst = 0;
    double limit = 0;
    std::string counterexample;

    bool passed() const {
        return counterexample.empty();
    }
};

void record(CheckOutcome &check, double violation, const std::function<std::string()> &describe) {
    check.cases++;
    check.worst = std::max(check.worst, violation);
    if (violation > check.limit && check.counterexample.empty()) {
        check.counterexample = describe();
    }
}

std::string describe_prior(const Prior &p) {
    return "p=" + format_double_array(p.weights());
}

}  // namespace

int cmd_verify(const VerifyArgs &args, std::ostream &out, std::ostream &err) {
    if (args.trials <= 0) {
        err << "error: trials must be >= 1 (nothing verified is an error)\n";
        return kExitInputError;
    }
    if (args.n_max < 1 || args.n_max > kVerifyMaxItems || args.t_max < 0 || args.t_max > kVerifyMaxQueries) {
        err << "error: need 1 <= n_max <= " << kVerifyMaxItems << " and 0 <= t_max <= " << kVerifyMaxQueries << "\n";
        return kExitInputError;
    }

    std::mt19937_64 rng(args.seed);
    std::vector<CheckOutcome> checks;
    auto random_n = [&](size_t cap_n) {
        return static_cast<size_t>(uniform_int(rng, 1, static_cast<int64_t>(std::min(args.n_max, cap_n))));
    };
    auto random_t = [&](int cap_t) {
        return static_cast<int>(uniform_int(rng, 0, std::min(args.t_max, cap_t)));
    };

    try {
        CheckOutcome oracle{"oracle-equivalence", 0, 0, 1e-10, ""};
        IterationOptions options;
        options.skip_oracle = args.invert_oracle;
        for (int k = 0; k < args.trials; k++) {
            size_t n = random_n(kVerifyMaxItems);
            int t = random_t(kVerifyMaxQueries);
            AmplitudePlan plan = random_plan(rng, n, t);
            auto x = static_cast<size_t>(uniform_int(rng, 1, static_cast<int64_t>(n)));
            double simulated = run_iterations(plan, x, options);
            double analytic = success_prob_single(plan[x - 1], t);
            record(oracle, std::abs(simulated - analytic), [&] {
                return "q=" + format_double_array(plan.q()) + " t=" + std::to_string(t) + " x=" + std::to_string(x) +
                       " simulated=" + format_double(simulated) + " analytic=" + format_double(analytic);
            });
        }
        checks.push_back(oracle);

        CheckOutcome kkt{"kkt-certificate", 0, 0, 1e-9, ""};
        for (int k = 0; k < args.trials; k++) {
            Prior p = random_prior(rng, random_n(kVerifyMaxItems));
            int t = random_t(kVerifyMaxQueries);
            OptimalPlan solved = optimize(p, t);
            double infeasible = std::max(0.0, solved.plan.total() - 1);
            for (double qi : solved.plan.q()) {
                infeasible = std::max(infeasible, qi - cap(t));
            }
            record(kkt, std::max(solved.kkt_residual, infeasible), [&] {
                return describe_prior(p) + " t=" + std::to_string(t) + " residual=" + format_double(solved.kkt_residual);
            });
        }
        checks.push_back(kkt);

        CheckOutcome bound{"upper-bound-attained", 0, 0, 1e-6, ""};
        for (int k = 0; k < std::min(args.trials, 10); k++) {
            Prior p = random_prior(rng, random_n(kMaxBoundItems));
            int t = random_t(kMaxBoundQueries);
            OptimalPlan solved = optimize(p, t);
            BoundReport report = theorem_a2_bound(p, t, solved.plan);
            record(bound, std::abs(*report.residual), [&] {
                return describe_prior(p) + " t=" + std::to_string(t) + " bound=" + format_double(report.bound_value) +
                       " optimizer=" + format_double(solved.esp);
            });
        }
        checks.push_back(bound);

        CheckOutcome allocation{"equal-allocation", 0, 0, 0, ""};
        const double grid_step = 0.05;
        allocation.limit = 2 * grid_step;
        for (int k = 0; k < std::min(args.trials, 3); k++) {
            Prior p = random_prior(rng, random_n(kMaxAllocationItems));
            int steps = std::clamp(args.t_max, 1, 2);
            AllocationReport report = lemma_a1_search(p, steps, grid_step);
            record(allocation, report.gap, [&] {
                return describe_prior(p) + " steps=" + std::to_string(steps) + " gap=" + format_double(report.gap);
            });
        }
        checks.push_back(allocation);

        CheckOutcome robust{"robustness", 0, 0, 1e-9, ""};
        for (int k = 0; k < args.trials; k++) {
            size_t n = random_n(kVerifyMaxItems);
            int t = random_t(kVerifyMaxQueries);
            Prior p = random_prior(rng, n);
            Prior estimate = perturbed_prior(rng, p, 0.2);
            double eps = l1_distance(p, estimate);
            double exact = optimize(p, t).esp;
            double with_estimate = esp(p, optimize(estimate, t).plan);
            record(robust, (exact - 2 * eps) - with_estimate, [&] {
                return describe_prior(p) + " estimate " + describe_prior(estimate) + " t=" + std::to_string(t);
            });
        }
        checks.push_back(robust);

        CheckOutcome speedup{"quadratic-speedup", 0, 0, 1e-12, ""};
        for (int k = 0; k < args.trials; k++) {
            Prior p = random_prior(rng, random_n(kVerifyMaxItems));
            for (size_t classical : {1, 4, 9, 16}) {
                if (classical > p.size()) {
                    continue;
                }
                AmplitudePlan plan = speedup_plan(p, classical);
                double gap = std::abs(esp(p, plan) - top_k_mass(p, classical));
                double excess = plan.total() - std::numbers::pi * std::numbers::pi / 16;
                record(speedup, std::max(gap, excess), [&] {
                    return describe_prior(p) + " classical_queries=" + std::to_string(classical);
                });
            }
        }
        checks.push_back(speedup);
    } catch (const NumericalFailure &e) {
        err << "error: " << e.what() << "\n";
        return kExitSolverFailure;
    }

    bool all = true;
    out << std::left << std::setw(22) << "check" << std::setw(6) << "pass" << std::setw(7) << "cases" << std::setw(26)
        << "worst" << "limit\n";
    for (const auto &c : checks) {
        all = all && c.passed();
        out << std::setw(22) << c.name << std::setw(6) << (c.passed() ? "yes" : "NO") << std::setw(7) << c.cases
            << std::setw(26) << format_double(c.worst) << format_double(c.limit) << "\n";
    }
    for (const auto &c : checks) {
        if (!c.passed()) {
            err << c.name << " counterexample: " << c.counterexample << "\n";
        }
    }
    return all ? kExitOk : kExitPropertyFailure;
}

int cmd_emit(const EmitArgs &args, std::ostream &out, std::ostream &err) {
    if (args.out_path.empty()) {
        err << "error: an output path is required\n";
        return kExitInputError;
    }
    std::optional<HalfHalfSpec> spec;
    try {
        spec = HalfHalfSpec::make(args.sigma, args.solution);
    } catch (const InvalidInput &e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const NumericalFailure &e) {
        err << "error: " << e.what() << "\n";
        return kExitSolverFailure;
    }
    GateCircuit circuit = build_halfhalf_circuit(*spec);
    if (!write_file(args.out_path, emit_qasm(circuit), err)) {
        return kExitInputError;
    }
    if (!args.json_path.empty() && !write_file(args.json_path, circuit_to_json(circuit), err)) {
        return kExitInputError;
    }
    out << "theta " << format_double(spec->theta) << "\n";
    out << "predicted_success " << format_double(spec->predicted_success()) << "\n";
    return kExitOk;
}

}  // namespace qsearch::cli
