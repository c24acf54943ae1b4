// Copyright 2026 The maxplus Authors
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

#ifndef MAXPLUS_PARALLEL_H_
#define MAXPLUS_PARALLEL_H_

#include <cstdint>
#include <functional>

namespace maxplus {

// Worker count used by the kernels that parallelize internally. Defaults to 1
// so that runs are reproducible unless a caller opts in.
void SetThreadCount(int threads);
int ThreadCount();

// Splits [0, n) into ThreadCount() contiguous chunks and runs
// body(chunk_index, begin, end) for each, joining before returning.
void ParallelChunks(int64_t n, const std::function<void(int, int64_t, int64_t)>& body);

}  // namespace maxplus

#endif  // MAXPLUS_PARALLEL_H_
