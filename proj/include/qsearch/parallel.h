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

#ifndef QSEARCH_PARALLEL_H
#define QSEARCH_PARALLEL_H

#include <cstddef>
#include <functional>

namespace qsearch {

/// Worker count for parallel loops. Reads QSEARCH_THREADS when set, otherwise hardware concurrency.
size_t worker_count();

/// Runs body(i) for every i in [0, count) on up to worker_count() threads.
///
/// Each index is visited exactly once. Callers write results into per-index slots, so output order
/// never depends on scheduling. The first exception thrown by any body is rethrown after all workers
/// have joined.
void parallel_for(size_t count, const std::function<void(size_t)> &body);

}  // namespace qsearch

#endif
