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

#include "hessaut/exact.h"

#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

namespace hessaut {
namespace {

TEST(SqrtRing, ArithmeticWithIrrationalRoot) {
  const SqrtRing r(3);
  EXPECT_FALSE(r.rational_root());
  const ExactCoef s = r.sqrt_S();
  EXPECT_EQ(r.mul(s, s), r.from_int(3));
  const ExactCoef x{mpq_class(1), mpq_class(2)};  // 1 + 2s
  EXPECT_EQ(r.mul(x, r.inv(x)), r.one());
  EXPECT_EQ(r.render(r.mul(r.from_int(72), s)), "72*sqrt(3)");
  EXPECT_EQ(r.render(r.neg(r.mul(r.from_int(72), s))), "-72*sqrt(3)");
  EXPECT_EQ(r.render(r.from_rational(mpq_class(-1, 2))), "-1/2");
  EXPECT_EQ(r.real_sign(r.sub(s, r.from_int(2))), -1);
  EXPECT_TRUE(r.greater(s, r.one()));
  EXPECT_THROW(r.inv(r.zero()), std::domain_error);
  EXPECT_THROW(SqrtRing(0), std::invalid_argument);
}

TEST(SqrtRing, PerfectSquareCollapsesToRationals) {
  const SqrtRing r(4);
  EXPECT_TRUE(r.rational_root());
  EXPECT_EQ(r.sqrt_S(), r.from_int(2));
  EXPECT_TRUE(r.is_rational(r.sqrt_S()));
}

TEST(SqrtRing, SquareRoots) {
  const SqrtRing r(3);
  const auto a = r.sqrt(r.from_int(12));
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(r.mul(*a, *a), r.from_int(12));
  EXPECT_FALSE(r.sqrt(r.from_int(2)).has_value());
}

TEST(ExactRoots, QuadraticOverSqrtRing) {
  const SqrtRing r(3);
  // x^2 - 3 = 0, roots ordered by real value descending.
  const std::vector<ExactCoef> poly{r.from_int(-3), r.zero(), r.one()};
  const auto roots = exact_roots(r, poly);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(roots[0], r.sqrt_S());
  EXPECT_EQ(roots[1], r.neg(r.sqrt_S()));
}

TEST(ExactRoots, RationalCubic) {
  const SqrtRing r(1);
  // (x - 1)(x - 2)(x + 3) = x^3 - 7x + 6.
  const std::vector<ExactCoef> poly{r.from_int(6), r.from_int(-7), r.zero(), r.one()};
  const auto roots = exact_roots(r, poly);
  ASSERT_EQ(roots.size(), 3u);
  EXPECT_EQ(roots[0], r.from_int(2));
  EXPECT_EQ(roots[1], r.from_int(1));
  EXPECT_EQ(roots[2], r.from_int(-3));
}

TEST(ExactRoots, RejectsZeroPolynomial) {
  const SqrtRing r(2);
  const std::vector<ExactCoef> poly{r.zero()};
  EXPECT_THROW(exact_roots(r, poly), std::invalid_argument);
}

TEST(Reduce, MapsIntoFiniteField) {
  const SqrtRing r(2);
  const FieldCtx k = make_field(7);
  const FieldElem s = k.from_int(3);  // 3^2 = 2 mod 7
  const ExactCoef x{mpq_class(1, 2), mpq_class(1)};
  EXPECT_EQ(reduce(k, x, s), k.add(k.inv(k.from_int(2)), s));
  EXPECT_THROW(reduce(k, r.from_rational(mpq_class(1, 7)), s), std::domain_error);
}

}  // namespace
}  // namespace hessaut
