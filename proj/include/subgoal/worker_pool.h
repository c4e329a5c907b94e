// Copyright 2026 The Subgoal Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUBGOAL_WORKER_POOL_H_
#define SUBGOAL_WORKER_POOL_H_

#include <cstddef>
#include <functional>

namespace subgoal {

// Runs task(i) for i in [0, count) on up to `workers` threads. Tasks are
// claimed in index order; results should be written to per-index slots so
// the reduction stays independent of scheduling. If tasks throw, the
// exception of the lowest failing index is rethrown after all threads
// have stopped; later indices may not run.
void ParallelFor(size_t count, int workers,
                 const std::function<void(size_t)> &task);

}  // namespace subgoal

#endif  // SUBGOAL_WORKER_POOL_H_
