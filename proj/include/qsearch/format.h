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

#ifndef QSEARCH_FORMAT_H
#define QSEARCH_FORMAT_H

#include <span>
#include <string>

namespace qsearch {

/// Formats a double with 17 significant digits ("%.17g"), which round-trips every finite double.
std::string format_double(double value);

/// Formats a JSON array of doubles using format_double for each entry.
std::string format_double_array(std::span<const double> values);

/// Escapes a string for embedding inside a JSON string literal (quotes included).
std::string json_quote(const std::string &text);

}  // namespace qsearch

#endif
