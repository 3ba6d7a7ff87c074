// Copyright 2026 The qdelta Authors
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

namespace qdelta {

// Worker count used by parallel_for. Defaults to the QDELTA_THREADS
// environment variable when set, otherwise std::thread::hardware_concurrency.
unsigned thread_count();
void set_thread_count(unsigned threads);

// Runs body(i) for i in [0, count). Each index is processed exactly once and
// callers write results into per-index slots, so any reduction done afterwards
// in index order is independent of scheduling. Nested calls run serially.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace qdelta
