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

#include "hessaut/forms.h"

#include <array>
#include <random>

#include <gtest/gtest.h>

#include "hessaut/detrep.h"
#include "hessaut/exact.h"
#include "hessaut/ff.h"

namespace hessaut {
namespace {

TEST(Monomials, IndexingIsConsistent) {
  for (int k = 0; k < 10; ++k) EXPECT_EQ(cubic_index(kCubicMonomials[k]), k);
  for (int k = 0; k < 6; ++k) EXPECT_EQ(quadratic_index(kQuadraticMonomials[k]), k);
  EXPECT_EQ(cubic_index(0, 2, 2), cubic_index(Exponent{1, 0, 2}));
  EXPECT_EQ(monomial_name({1, 0, 2}), "y1*y3^2");
}

TEST(Hessian, FermatCubic) {
  const FieldCtx k = make_field(11);
  const auto f = make_cubic(k, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1});
  CubicForm<FieldCtx> want;
  want[{1, 1, 1}] = k.from_int(216);
  EXPECT_EQ(hessian_det(k, f), want);
}

TEST(Hessian, FamilyCubicOverRationals) {
  // Hes(y1^3 - S y1 y3^2 - S y2^2 y3)
  //   = 24 S^2 y1^2 y3 - 24 S^2 y1 y2^2 + 8 S^3 y3^3, worked by hand.
  const SqrtRing r(3);
  const auto f = build_fS(r, r.from_int(3));
  CubicForm<SqrtRing> want;
  want[{2, 0, 1}] = r.from_int(24 * 9);
  want[{1, 2, 0}] = r.from_int(-24 * 9);
  want[{0, 0, 3}] = r.from_int(8 * 27);
  EXPECT_EQ(hessian_det(r, f), want);
}

TEST(Render, FamilyCubic) {
  const SqrtRing r(1);
  EXPECT_EQ(render(r, build_fS(r, r.one())), "y1^3 - y1*y3^2 - y2^2*y3");
  EXPECT_EQ(render(r, CubicForm<SqrtRing>{}), "0");
}

TEST(Smoothness, DistinguishesSingularCubics) {
  const FieldCtx k = make_field(7);
  EXPECT_TRUE(is_smooth(k, build_fS(k, k.one())));
  EXPECT_FALSE(is_smooth(k, make_cubic(k, {0, 0, 0, 0, 1, 0, 0, 0, 0, 0})));  // y1 y2 y3
  EXPECT_FALSE(is_smooth(k, make_cubic(k, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0})));  // y1^3
  // Nodal cubic y2^2 y3 - y1^3 - y1^2 y3.
  EXPECT_FALSE(is_smooth(k, make_cubic(k, {-1, 0, -1, 0, 0, 0, 0, 1, 0, 0})));
}

TEST(Dual, SwapsTheRoles) {
  const FieldCtx k = make_field(13);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(0, 12);
  LinFormMatrix<FieldCtx> b;
  for (auto& m : b.coef) {
    for (auto& row : m) {
      for (auto& x : row) x = k.from_int(d(rng));
    }
  }
  for (int trial = 0; trial < 20; ++trial) {
    std::array<FieldElem, 3> x, y;
    for (int v = 0; v < 3; ++v) {
      x[v] = k.from_int(d(rng));
      y[v] = k.from_int(d(rng));
    }
    const auto lhs = matvec(k, evaluate(k, dual(b), x), std::vector<FieldElem>(y.begin(), y.end()));
    const auto rhs = matvec(k, evaluate(k, b, y), std::vector<FieldElem>(x.begin(), x.end()));
    EXPECT_EQ(lhs, rhs);
  }
  EXPECT_EQ(dual(dual(b)), b);
}

TEST(DetLinform, AgreesWithPointwiseDeterminant) {
  const FieldCtx k = make_field(5);
  const auto rep = build_B_field(k, 1, 1, std::nullopt);
  const auto d = det_linform(k, rep.B);
  for (const FieldElem& a : all_elements(k)) {
    for (const FieldElem& b : all_elements(k)) {
      const std::array<FieldElem, 3> u{a, b, k.one()};
      EXPECT_EQ(det(k, evaluate(k, rep.B, u)), evaluate(k, d, u));
    }
  }
}

TEST(RankProfile, RepresentationOverF7) {
  // y^2 = x^3 - x has 8 points over F_7, so 8 * 6 nonzero vectors lie on
  // the cone over the curve.
  const FieldCtx k = make_field(7);
  for (int i = 1; i <= 3; ++i) {
    const auto rep = build_B_field(k, i, 1, k.one());
    const RankProfile prof = rank_profile(k, rep.B);
    EXPECT_EQ(prof.violations, 0u) << "i=" << i;
    EXPECT_EQ(prof.det_mismatches, 0u);
    EXPECT_EQ(prof.histogram[0], 1u);
    EXPECT_EQ(prof.histogram[1], 0u);
    EXPECT_EQ(prof.histogram[2], 48u);
    EXPECT_EQ(prof.histogram[3], 343u - 49u);
  }
}

TEST(RankProfile, RejectsLargeFields) {
  const FieldCtx k = make_field(331);
  EXPECT_THROW(rank_profile(k, LinFormMatrix<FieldCtx>{}), std::invalid_argument);
}

}  // namespace
}  // namespace hessaut
