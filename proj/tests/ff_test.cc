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

#include "hessaut/ff.h"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

namespace hessaut {
namespace {

TEST(FieldCtx, RejectsBadParameters) {
  EXPECT_THROW(make_field(4), std::invalid_argument);
  EXPECT_THROW(make_field(3), std::invalid_argument);
  EXPECT_THROW(make_field(5, 0), std::invalid_argument);
  EXPECT_THROW(make_field(5, 5), std::invalid_argument);
}

TEST(FieldCtx, PrimeFieldArithmetic) {
  const FieldCtx k = make_field(7);
  EXPECT_EQ(k.q(), 7u);
  EXPECT_EQ(k.mul(k.from_int(3), k.from_int(5)), k.from_int(1));
  EXPECT_EQ(k.inv(k.from_int(3)), k.from_int(5));
  EXPECT_EQ(k.from_int(-1), k.from_int(6));
  EXPECT_EQ(k.to_signed(k.from_int(6)), -1);
  EXPECT_EQ(k.render(k.from_int(9)), "2");
  EXPECT_THROW(k.inv(k.zero()), std::domain_error);
}

TEST(FieldCtx, LegendreAndSqrt) {
  const FieldCtx k = make_field(7);
  EXPECT_EQ(k.legendre(k.zero()), 0);
  EXPECT_EQ(k.legendre(k.from_int(2)), 1);
  EXPECT_EQ(k.legendre(k.from_int(3)), -1);
  const auto r = k.sqrt(k.from_int(2));
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->first, k.from_int(3));
  EXPECT_EQ(r->second, k.from_int(4));
  EXPECT_FALSE(k.sqrt(k.from_int(3)).has_value());
}

class ExtensionFieldTest : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(ExtensionFieldTest, FieldAxiomsOnAllElements) {
  const auto [p, f] = GetParam();
  const FieldCtx k = make_field(p, f);
  const auto elems = all_elements(k);
  ASSERT_EQ(elems.size(), k.q());
  std::set<std::uint64_t> seen;
  for (const FieldElem& a : elems) {
    EXPECT_EQ(k.from_index(k.index(a)), a);
    seen.insert(k.index(a));
    EXPECT_EQ(k.pow(a, k.q()), a);
    if (!k.is_zero(a)) {
      EXPECT_EQ(k.mul(a, k.inv(a)), k.one());
    }
    EXPECT_EQ(k.add(a, k.neg(a)), k.zero());
    EXPECT_EQ(k.in_prime_field(a), k.frobenius(a) == a);
    const auto r = k.sqrt(a);
    EXPECT_EQ(r.has_value(), k.legendre(a) >= 0);
    if (r) {
      EXPECT_EQ(k.mul(r->first, r->first), a);
      EXPECT_LE(r->first, r->second);
    }
  }
  EXPECT_EQ(seen.size(), k.q());
}

TEST_P(ExtensionFieldTest, FourthRootsOfUnity) {
  const auto [p, f] = GetParam();
  const FieldCtx k = make_field(p, f);
  const auto roots = fourth_roots_of_unity(k);
  EXPECT_EQ(roots.size(), (k.q() - 1) % 4 == 0 ? 4u : 2u);
  for (const FieldElem& w : roots) EXPECT_EQ(k.pow(w, 4), k.one());
  EXPECT_EQ(primitive_fourth_root(k).has_value(), roots.size() == 4);
}

INSTANTIATE_TEST_SUITE_P(SmallFields, ExtensionFieldTest,
                         ::testing::Values(std::pair{5, 1}, std::pair{7, 1}, std::pair{11, 1},
                                           std::pair{5, 2}, std::pair{7, 2}, std::pair{5, 3}));

TEST(UnivariateRoots, IntegerCoefficients) {
  const FieldCtx k = make_field(13);
  // x^4 - 1 splits over F_13.
  const std::int64_t quartic[] = {-1, 0, 0, 0, 1};
  auto roots = univariate_roots(k, std::span<const std::int64_t>(quartic));
  std::vector<std::int64_t> vals;
  for (const auto& r : roots) vals.push_back(k.to_signed(r) < 0 ? k.to_signed(r) + 13 : k.to_signed(r));
  std::sort(vals.begin(), vals.end());
  EXPECT_EQ(vals, (std::vector<std::int64_t>{1, 5, 8, 12}));
  // x^2 + 1 has no roots over F_7 but two over F_49.
  const std::int64_t q2[] = {1, 0, 1};
  EXPECT_TRUE(univariate_roots(make_field(7), std::span<const std::int64_t>(q2)).empty());
  EXPECT_EQ(univariate_roots(make_field(7, 2), std::span<const std::int64_t>(q2)).size(), 2u);
}

TEST(IsPrime, SmallValues) {
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(99991));
  EXPECT_FALSE(is_prime(99993));
}

}  // namespace
}  // namespace hessaut
