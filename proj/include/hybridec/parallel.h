// Copyright 2026 The hybridec Authors
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

#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace hybridec {

/// Runs fn(begin, end) over `jobs` contiguous chunks of [0, count). Callers
/// write into per-index slots and reduce afterwards in index order, so results
/// do not depend on the number of jobs.
template <typename Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
  jobs = std::max(1U, jobs);
  if (jobs == 1 || count < 2) {
    fn(std::size_t{0}, count);
    return;
  }
  const std::size_t chunks = std::min<std::size_t>(jobs, count);
  const std::size_t step = (count + chunks - 1) / chunks;
  std::vector<std::jthread> workers;
  workers.reserve(chunks);
  for (std::size_t begin = 0; begin < count; begin += step) {
    const std::size_t end = std::min(count, begin + step);
    workers.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
}

}  // namespace hybridec
