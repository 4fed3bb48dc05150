// Copyright 2026 The octolct Authors
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

#ifndef OCTOLCT_PARALLEL_HPP
#define OCTOLCT_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace octolct {

// Worker cap: min(hardware_concurrency, OCTOLCT_THREADS if set). Always >= 1.
std::size_t worker_count();

// Runs fn over [0, count) split into contiguous chunks, one worker each.
// Work items must write disjoint outputs; results are then independent of the
// worker count.
void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& fn);

// Same, but stays serial when count * work_per_item is too small to amortize
// thread startup. work_per_item is a rough operation count of one item.
void parallel_for(std::size_t count, std::size_t work_per_item,
                  const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace octolct

#endif  // OCTOLCT_PARALLEL_HPP
