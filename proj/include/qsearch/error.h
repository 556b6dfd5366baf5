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

#ifndef QSEARCH_ERROR_H
#define QSEARCH_ERROR_H

#include <stdexcept>
#include <string>

namespace qsearch {

/// Raised when caller-supplied data violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an iterative solve fails to reach its tolerance.
class NumericalFailure : public std::runtime_error {
   public:
    NumericalFailure(const std::string &message, double residual)
        : std::runtime_error(message + " (residual " + std::to_string(residual) + ")"), residual_(residual) {
    }
    double residual() const {
        return residual_;
    }

   private:
    double residual_;
};

/// Raised when a request exceeds the desk-scale size caps of an exhaustive routine.
class ResourceLimit : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace qsearch

#endif
