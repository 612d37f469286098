// Copyright 2026 The cyclebound Authors
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


#ifndef CYCLEBOUND_PARALLEL_H_
#define CYCLEBOUND_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace cyclebound {

// CYCLEBOUND_THREADS if set to a positive integer, else the hardware
// concurrency (at least 1).
std::size_t default_worker_count();

// Runs body(i) for every i in [0, count) on up to `workers` threads
// (0 = default_worker_count()). Items are handed out in chunks of `grain`.
// The first exception thrown by a body is rethrown after all threads join.
void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)>& body, std::size_t grain = 1);

}  // namespace cyclebound

#endif  // CYCLEBOUND_PARALLEL_H_
