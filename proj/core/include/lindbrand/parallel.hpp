// Copyright 2026 The lindbrand Authors.
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

#pragma once

#include <cstddef>
#include <functional>

namespace lindbrand {

// Resolves a worker-count request: positive values pass through; zero or
// negative falls back to the LINDBRAND_WORKERS environment variable (if set
// to a positive integer) and then to the hardware concurrency (>= 1).
int resolve_worker_count(int requested);

// Runs body(0) .. body(n-1) on up to `n_workers` threads.
//
// Determinism contract: the scheduler only decides *which thread* runs an
// index, never what the index computes -- bodies must derive all randomness
// from their index (e.g. substream(seed, i)) and write only to slot i of a
// pre-sized result container.  Any reduction over the slots then happens
// sequentially in index order at the call site, making outputs bit-identical
// for every worker count.  The first exception thrown by a body is
// rethrown on the calling thread after all workers join.
void parallel_for(std::size_t n, int n_workers,
                  const std::function<void(std::size_t)>& body);

}  // namespace lindbrand
