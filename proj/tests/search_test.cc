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

#include "hessaut/search.h"

#include <algorithm>

#include <gtest/gtest.h>

#include "hessaut/algebra.h"
#include "hessaut/ff.h"

namespace hessaut {
namespace {

TEST(SearchGL3, DiagonalAutomorphismsAtP5) {
  const FieldCtx k = make_field(5);
  const AlgebraData alg = AlgebraData::for_rep(k, 1, 1, k.one());
  const SearchResult res = search_gl3(alg, alg.kstar(), {.first_only = false, .threads = 1});
  EXPECT_EQ(res.matrices.size(), 16u);
  EXPECT_GT(res.shards, 0u);
  EXPECT_NE(std::find(res.matrices.begin(), res.matrices.end(), FMatrix::identity(k, 3)),
            res.matrices.end());
  for (const FMatrix& A : res.matrices) {
    EXPECT_FALSE(k.is_zero(det(k, A)));
    EXPECT_TRUE(maps_into_kernel(alg, A, alg.kstar()));
    EXPECT_TRUE(maps_into_kernel(alg, A, alg.kernel_basis()));
  }
}

TEST(SearchGL3, ThreadCountDoesNotChangeOutput) {
  const FieldCtx k = make_field(7);
  const AlgebraData alg = AlgebraData::for_rep(k, 2, 1, k.one());
  const SearchResult one = search_gl3(alg, alg.kstar(), {.first_only = false, .threads = 1});
  const SearchResult three = search_gl3(alg, alg.kstar(), {.first_only = false, .threads = 3});
  EXPECT_EQ(one.matrices, three.matrices);
  EXPECT_EQ(one.full_tests, three.full_tests);
  EXPECT_EQ(one.matrices.size(), 12u);

  const SearchResult first = search_gl3(alg, alg.kstar(), {.first_only = true, .threads = 3});
  ASSERT_EQ(first.matrices.size(), 1u);
  EXPECT_EQ(first.matrices.front(), one.matrices.front());
}

TEST(MapsIntoKernel, RejectsAGenericMatrix) {
  const FieldCtx k = make_field(7);
  const AlgebraData alg = AlgebraData::for_rep(k, 1, 1, k.one());
  FMatrix A = FMatrix::identity(k, 3);
  A(0, 1) = k.one();
  EXPECT_FALSE(maps_into_kernel(alg, A, alg.kstar()));
  EXPECT_TRUE(maps_into_kernel(alg, A, {}));
}

}  // namespace
}  // namespace hessaut
