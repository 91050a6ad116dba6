// Copyright 2026 The hessaut Authors.
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

#ifndef HESSAUT_SEARCH_H_
#define HESSAUT_SEARCH_H_

// Exhaustive search of GL_3(F_q) for matrices A with
// (A (x) A)(v) in ker phi~_target for every v in a given span of tensors.
//
// Columns are assigned one at a time; after each assignment every tensor of
// the span supported on the assigned columns is tested, which prunes most
// of the q^9 candidates long before the last column.  The candidate space is
// sharded by the first assigned column and shards run on a thread pool;
// results are merged in shard order, so output does not depend on the
// thread count.

#include <cstdint>
#include <vector>

#include "hessaut/algebra.h"

namespace hessaut {

struct SearchOptions {
  // Stop at the first hit (the one in the lowest shard).
  bool first_only = false;
  // 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct SearchResult {
  std::vector<FMatrix> matrices;
  std::uint64_t shards = 0;
  // Candidates that reached the final column test.
  std::uint64_t full_tests = 0;
};

SearchResult search_gl3(const AlgebraData& target, const std::vector<KernelTensor>& span,
                        const SearchOptions& opts = {});

// (A (x) A)(v) lies in ker phi~_target for every v in the list.
bool maps_into_kernel(const AlgebraData& target, const FMatrix& A,
                      const std::vector<KernelTensor>& tensors);

}  // namespace hessaut

#endif  // HESSAUT_SEARCH_H_
