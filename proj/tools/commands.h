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

#ifndef QSEARCH_TOOLS_COMMANDS_H
#define QSEARCH_TOOLS_COMMANDS_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qsearch::cli {

// Exit codes shared by every subcommand.
constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitSolverFailure = 3;
constexpr int kExitPropertyFailure = 4;

struct OptimizeArgs {
    std::string prior_path;
    int t = 1;
    /// "waterfill" or "closed-t1".
    std::string method = "waterfill";
    /// Plan JSON destination; empty writes the JSON to `out`.
    std::string out_path;
};

int cmd_optimize(const OptimizeArgs &args, std::ostream &out, std::ostream &err);

struct CompareArgs {
    size_t n = 512;
    size_t samples = 100;
    int t_min = 1;
    int t_max = 22;
    uint64_t seed = 42;
    std::string out_path;
    /// Optional prior file used for every sample instead of random draws; n is taken from it.
    std::string prior_path;
};

struct CompareRow {
    int t;
    std::string method;
    double mean_esp;
    double std_esp;
    size_t samples;
    uint64_t seed;
};

/// Writes `t,method,mean_esp,std_esp,samples,seed` rows for classical, grover-uniform, ranking and
/// optimal. Sample i uses seed ^ i. Any per-sample ordering violation (optimal >= ranking >=
/// grover-uniform, optimal >= classical, 1e-9 slack) aborts with kExitPropertyFailure and no file.
int cmd_compare(const CompareArgs &args, std::ostream &out, std::ostream &err);

/// Parses a CSV written by cmd_compare. Throws InvalidInput on schema mismatch.
std::vector<CompareRow> read_compare_csv(const std::string &path);

/// Writes `sigma,theta,paper_theta,abs_diff` for sigma = 1/80..8/80. kExitPropertyFailure if any
/// abs_diff exceeds 1e-3 (the file is still written).
int cmd_theta_table(const std::string &out_path, std::ostream &out, std::ostream &err);

struct VerifyArgs {
    size_t n_max = 16;
    int t_max = 4;
    int trials = 20;
    uint64_t seed = 1;
    /// Fault injection: the simulator's oracle does nothing, so oracle-equivalence must fail.
    bool invert_oracle = false;
};

constexpr size_t kVerifyMaxItems = 64;
constexpr int kVerifyMaxQueries = 8;

int cmd_verify(const VerifyArgs &args, std::ostream &out, std::ostream &err);

struct EmitArgs {
    double sigma = 0;
    std::string solution;
    std::string out_path;
    /// Optional circuit JSON mirror.
    std::string json_path;
};

int cmd_emit(const EmitArgs &args, std::ostream &out, std::ostream &err);

}  // namespace qsearch::cli

#endif
