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

#include <iostream>

#include "CLI11.hpp"
#include "commands.h"

int main(int argc, char **argv) {
    using namespace qsearch::cli;

    CLI::App app{"Optimal-amplitude quantum search with a prior over solution locations"};
    app.require_subcommand(1);

    OptimizeArgs optimize_args;
    auto *optimize = app.add_subcommand("optimize", "Solve for the optimal amplitude plan of a prior");
    optimize->add_option("--prior", optimize_args.prior_path, "Prior JSON file {\"weights\": [...]}")->required();
    optimize->add_option("-t,--queries", optimize_args.t, "Oracle query budget")->required();
    optimize->add_option("--method", optimize_args.method, "waterfill or closed-t1")
        ->check(CLI::IsMember({"waterfill", "closed-t1"}));
    optimize->add_option("-o,--out", optimize_args.out_path, "Plan JSON output (stdout when omitted)");

    CompareArgs compare_args;
    auto *compare = app.add_subcommand("compare", "Compare classical, Grover, ranking and optimal ESP on random priors");
    compare->add_option("-n,--items", compare_args.n, "Items per prior");
    compare->add_option("--samples", compare_args.samples, "Priors per query budget");
    compare->add_option("--t-min", compare_args.t_min, "Smallest query budget");
    compare->add_option("--t-max", compare_args.t_max, "Largest query budget");
    compare->add_option("--seed", compare_args.seed, "Base seed; sample i uses seed ^ i");
    compare->add_option("--prior", compare_args.prior_path, "Use this prior for every sample");
    compare->add_option("-o,--out", compare_args.out_path, "CSV output")->required();

    std::string theta_out;
    auto *theta = app.add_subcommand("theta-table", "Recompute the half-half RY angles");
    theta->add_option("-o,--out", theta_out, "CSV output")->required();

    VerifyArgs verify_args;
    auto *verify = app.add_subcommand("verify", "Run the randomized property checks");
    verify->add_option("--n-max", verify_args.n_max, "Largest item count");
    verify->add_option("--t-max", verify_args.t_max, "Largest query budget");
    verify->add_option("--trials", verify_args.trials, "Random cases per check");
    verify->add_option("--seed", verify_args.seed, "Seed");
    verify->add_flag("--invert-oracle", verify_args.invert_oracle, "Test hook: break the simulated oracle");

    EmitArgs emit_args;
    auto *emit = app.add_subcommand("emit", "Write the one-query half-half circuit as OpenQASM 2.0");
    emit->add_option("--sigma", emit_args.sigma, "Deviation in [0, 1/8)")->required();
    emit->add_option("--solution", emit_args.solution, "3-bit solution string, e.g. 011")->required();
    emit->add_option("-o,--out", emit_args.out_path, "QASM output")->required();
    emit->add_option("--json", emit_args.json_path, "Optional circuit JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitInputError;
    }

    if (optimize->parsed()) {
        return cmd_optimize(optimize_args, std::cout, std::cerr);
    }
    if (compare->parsed()) {
        return cmd_compare(compare_args, std::cout, std::cerr);
    }
    if (theta->parsed()) {
        return cmd_theta_table(theta_out, std::cout, std::cerr);
    }
    if (verify->parsed()) {
        return cmd_verify(verify_args, std::cout, std::cerr);
    }
    if (emit->parsed()) {
        return cmd_emit(emit_args, std::cout, std::cerr);
    }
    return kExitInputError;
}
