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

#include "hessaut/detrep.h"

#include <stdexcept>

#include <gtest/gtest.h>

#include "hessaut/curve.h"
#include "hessaut/exact.h"
#include "hessaut/ff.h"

namespace hessaut {
namespace {

class ExactRepTest : public ::testing::TestWithParam<std::tuple<int, int>> {};

TEST_P(ExactRepTest, DeterminantIdentities) {
  const auto [i, S] = GetParam();
  const SqrtRing r(S);
  const auto rep = build_B(r, i, r.from_int(S), r.sqrt_S());
  const DetReport report = verify_det_identities(r, rep);
  EXPECT_TRUE(report.det_ok) << report.differing_monomial.value_or("");
  EXPECT_TRUE(report.symmetric);
}

INSTANTIATE_TEST_SUITE_P(Reps, ExactRepTest,
                         ::testing::Combine(::testing::Values(1, 2, 3),
                                            ::testing::Values(1, 2, 3, 4, -1, 5)));

TEST(BuildB, ArgumentChecks) {
  const SqrtRing r(3);
  EXPECT_THROW(build_B(r, 0, r.from_int(3), r.sqrt_S()), std::invalid_argument);
  EXPECT_THROW(build_B(r, 2, r.from_int(3), std::nullopt), std::invalid_argument);
  EXPECT_THROW(build_B(r, 2, r.from_int(3), std::optional<ExactCoef>(r.one())),
               std::invalid_argument);
  EXPECT_NO_THROW(build_B(r, 1, r.from_int(3), std::nullopt));
}

TEST(BuildB, SecondAndThirdDifferByRootSign) {
  const SqrtRing r(3);
  const auto b2 = build_B(r, 2, r.from_int(3), r.sqrt_S());
  const auto b3 = build_B(r, 3, r.from_int(3), r.sqrt_S());
  const auto b2neg = build_B(r, 2, r.from_int(3), r.neg(r.sqrt_S()));
  EXPECT_EQ(b3.B, b2neg.B);
  EXPECT_FALSE(b2.B == b3.B);
}

TEST(DetReport, NamesFirstDifferingMonomial) {
  const SqrtRing r(1);
  auto rep = build_B(r, 1, r.one(), std::nullopt);
  rep.B.coef[2][2][2] = r.from_int(2);
  const DetReport report = verify_det_identities(r, rep);
  EXPECT_FALSE(report.det_ok);
  ASSERT_TRUE(report.differing_monomial.has_value());
  EXPECT_EQ(*report.differing_monomial, "y1*y3^2");
}

// a f = Hes(b f + Hes f); reference solutions from an independent symbolic
// computation.
TEST(HessianEquation, ExactSolutionsForS3) {
  const SqrtRing r(3);
  const auto res = hessian_equation_solve(r, build_fS(r, r.from_int(3)));
  ASSERT_TRUE(res.smooth);
  ASSERT_EQ(res.solutions.size(), 3u);
  EXPECT_FALSE(res.partial);
  EXPECT_EQ(r.render(res.solutions[0].alpha), "80621568");
  EXPECT_EQ(r.render(res.solutions[0].beta), "0");
  EXPECT_EQ(r.render(res.solutions[1].alpha), "322486272");
  EXPECT_EQ(r.render(res.solutions[1].beta), "72*sqrt(3)");
  EXPECT_EQ(r.render(res.solutions[2].beta), "-72*sqrt(3)");
}

TEST(HessianEquation, RationalSolutionsForS1) {
  const SqrtRing r(1);
  const auto res = hessian_equation_solve(r, build_fS(r, r.one()));
  ASSERT_EQ(res.solutions.size(), 3u);
  EXPECT_EQ(res.solutions[0].alpha, r.from_int(110592));
  EXPECT_EQ(res.solutions[1].alpha, r.from_int(442368));
  EXPECT_EQ(res.solutions[1].beta, r.from_int(24));
  EXPECT_EQ(res.solutions[2].beta, r.from_int(-24));
}

TEST(HessianEquation, FieldImageAndPreferredRoot) {
  const FieldCtx k = make_field(7);
  const auto res = hessian_equation_solve(k, build_fS(k, k.one()), k.from_int(4));
  ASSERT_EQ(res.solutions.size(), 3u);
  EXPECT_EQ(res.solutions[0].beta, k.zero());
  EXPECT_EQ(res.solutions[0].alpha, k.from_int(110592));
  EXPECT_EQ(res.solutions[1].beta, k.from_int(4));
  EXPECT_EQ(res.solutions[2].beta, k.from_int(3));
}

TEST(HessianEquation, SingularCubicReportsNotSmooth) {
  const FieldCtx k = make_field(7);
  const auto res = hessian_equation_solve(k, make_cubic(k, {0, 0, 0, 0, 1, 0, 0, 0, 0, 0}));
  EXPECT_FALSE(res.smooth);
  EXPECT_TRUE(res.solutions.empty());
}

class LocusTest : public ::testing::TestWithParam<std::tuple<int, int, int, int>> {};

TEST_P(LocusTest, DegeneracyLocusIsTheCurve) {
  const auto [p, f, i, S] = GetParam();
  const FieldCtx k = make_field(p, f);
  const Curve E = Curve::family(k, S);
  ASSERT_TRUE(E.sqrt_S().has_value());
  const auto rep = build_B_field(k, i, S, E.sqrt_S());
  EXPECT_TRUE(degeneracy_locus_matches(k, rep.B, E));
  EXPECT_TRUE(verify_det_identities(k, rep).det_ok);
}

INSTANTIATE_TEST_SUITE_P(Fields, LocusTest,
                         ::testing::Values(std::tuple{5, 1, 1, 1}, std::tuple{7, 1, 2, 2},
                                           std::tuple{11, 1, 3, 3}, std::tuple{13, 1, 2, 1},
                                           std::tuple{5, 2, 3, 2}));

TEST(ProjectivePlane, SizeAndNormalization) {
  const FieldCtx k = make_field(5);
  const auto pts = projective_plane(k);
  EXPECT_EQ(pts.size(), 31u);
  for (const ProjPoint& v : pts) EXPECT_EQ(normalize(k, v), v);
  EXPECT_THROW(normalize(k, ProjPoint{}), std::invalid_argument);
}

}  // namespace
}  // namespace hessaut
