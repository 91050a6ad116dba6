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

#include "hessaut/aut.h"

#include <stdexcept>

#include <gtest/gtest.h>

#include "hessaut/curve.h"
#include "hessaut/ff.h"

namespace hessaut {
namespace {

mpz_class pow_ui(unsigned long b, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, e);
  return r;
}

FMatrix diag3(const FieldCtx& k, const FieldElem& a, const FieldElem& b, const FieldElem& c) {
  FMatrix m(k, 3, 3);
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

TEST(Formula, OrdersAtSmallPrimes) {
  EXPECT_EQ(lie_aut_order_formula(make_field(5), 1, 1).exact, 4 * 480 * pow_ui(5, 18));
  EXPECT_EQ(lie_aut_order_formula(make_field(7), 1, 1).exact, 2 * 2016 * pow_ui(7, 18));
  EXPECT_EQ(lie_aut_order_formula(make_field(11), 1, 1).exact, 2 * 13200 * pow_ui(11, 18) * 3);
  EXPECT_EQ(lie_aut_order_formula(make_field(5), 2, 1).exact, 2 * 480 * pow_ui(5, 18));
  const AutOrder lie = lie_aut_order_formula(make_field(7, 2), 1, 1);
  const AutOrder grp = group_aut_order_formula(make_field(7, 2), 1, 1);
  EXPECT_EQ(grp.exact, 2 * lie.exact);
  EXPECT_TRUE(grp.group);
  EXPECT_EQ(lie.factors.gcd_factor, 4u);
}

TEST(Formula, SmallHelpers) {
  EXPECT_EQ(ceil_four_over(1), 4);
  EXPECT_EQ(ceil_four_over(2), 2);
  EXPECT_EQ(ceil_four_over(3), 2);
  EXPECT_EQ(gcd_factor(7, 1), 2u);
  EXPECT_EQ(gcd_factor(13, 1), 4u);
  EXPECT_EQ(gcd_factor(13, 3), 2u);
}

TEST(MakeRep, ArgumentChecks) {
  const FieldCtx k = make_field(5);
  EXPECT_THROW(make_rep(k, 1, 5), std::invalid_argument);
  EXPECT_THROW(make_rep(k, 1, 2), std::invalid_argument);
  EXPECT_THROW(make_rep(k, 4, 1), std::invalid_argument);
  const RepContext plus = make_rep(k, 2, 4, 1);
  const RepContext minus = make_rep(k, 2, 4, -1);
  EXPECT_EQ(plus.sqrt_S, k.neg(minus.sqrt_S));
}

struct OracleCase {
  int p, i, S;
  std::uint64_t autVeq;
  std::uint64_t image;
};

class OracleTest : public ::testing::TestWithParam<OracleCase> {};

TEST_P(OracleTest, CountMatchesFormula) {
  const OracleCase c = GetParam();
  const FieldCtx k = make_field(c.p);
  const RepContext rep = make_rep(k, c.i, c.S);
  const AutVeq v = enumerate_autVeq(rep, {.threads = 0, .recheck_full_kernel = true});
  EXPECT_EQ(v.size, c.autVeq);
  ASSERT_TRUE(v.full_kernel_agrees.has_value());
  EXPECT_TRUE(*v.full_kernel_agrees);
  EXPECT_EQ(aut_order_from_oracle(rep, v.size).exact,
            lie_aut_order_formula(k, c.i, c.S).exact);

  const CbarImage img = image_of_cbar(rep, v);
  EXPECT_EQ(img.size, c.image);
  EXPECT_TRUE(img.closed);
  EXPECT_TRUE(img.scalar_kernel);
  EXPECT_TRUE(img.translations_in_E3);
}

INSTANTIATE_TEST_SUITE_P(SmallFields, OracleTest,
                         ::testing::Values(OracleCase{5, 1, 1, 16, 4}, OracleCase{5, 2, 1, 8, 2},
                                           OracleCase{5, 3, 4, 8, 2}, OracleCase{7, 1, 1, 12, 2},
                                           OracleCase{7, 2, 2, 12, 2}, OracleCase{7, 3, 1, 12, 2},
                                           OracleCase{11, 1, 1, 60, 6}));

TEST(OracleOrder, InexactDivisionThrows) {
  const RepContext rep = make_rep(make_field(5), 1, 1);
  EXPECT_THROW(aut_order_from_oracle(rep, 17), std::logic_error);
}

TEST(Cbar, IdentityAndSignChange) {
  const FieldCtx k = make_field(7);
  const RepContext rep = make_rep(k, 1, 1);
  EXPECT_EQ(cbar_decompose(rep, FMatrix::identity(k, 3)),
            (CurveAut{CurvePoint::at_infinity(), k.one()}));
  const FMatrix flip = diag3(k, k.one(), k.from_int(-1), k.one());
  EXPECT_TRUE(passes_kstar_test(rep, flip));
  EXPECT_EQ(cbar_decompose(rep, flip), (CurveAut{CurvePoint::at_infinity(), k.from_int(-1)}));
  FMatrix shear = FMatrix::identity(k, 3);
  shear(0, 2) = k.one();
  EXPECT_THROW(cbar_decompose(rep, shear), std::runtime_error);
}

TEST(Lifts, IsogenyNeedsOmegaToThePowerCeilFourOverI) {
  const FieldCtx k = make_field(13);
  const auto w = primitive_fourth_root(k);
  ASSERT_TRUE(w.has_value());
  const RepContext r1 = make_rep(k, 1, 1);
  const auto lift = lift_isogeny(r1, *w);
  ASSERT_TRUE(lift.has_value());
  EXPECT_EQ(*lift, diag3(k, k.pow(*w, 2), k.pow(*w, 3), k.one()));
  EXPECT_TRUE(passes_kstar_test(r1, *lift));
  EXPECT_EQ(cbar_decompose(r1, *lift), (CurveAut{CurvePoint::at_infinity(), *w}));
  EXPECT_FALSE(lift_isogeny(make_rep(k, 2, 1), *w).has_value());
  EXPECT_TRUE(lift_isogeny(make_rep(k, 2, 1), k.from_int(-1)).has_value());
}

TEST(Lifts, TranslationByThreeTorsionPoint) {
  const FieldCtx k = make_field(11);
  for (int i = 1; i <= 3; ++i) {
    const RepContext rep = make_rep(k, i, 1);
    for (const CurvePoint& Q : rep.curve.torsion_points(3)) {
      if (Q.infinity) {
        EXPECT_THROW(lift_translation(rep, Q), std::invalid_argument);
        continue;
      }
      const FMatrix A = lift_translation(rep, Q);
      EXPECT_FALSE(k.is_zero(det(k, A)));
      EXPECT_TRUE(passes_kstar_test(rep, A));
      EXPECT_EQ(cbar_decompose(rep, A), (CurveAut{Q, k.one()}));
    }
  }
  const RepContext rep = make_rep(k, 1, 1);
  EXPECT_THROW(lift_translation(rep, CurvePoint::affine(k.zero(), k.zero())),
               std::invalid_argument);
}

TEST(ThreeTorsion, EnumerationAndQuarticAgree) {
  for (std::uint64_t p : {5u, 7u, 11u, 13u, 23u, 37u, 73u, 97u}) {
    const Curve E = Curve::family(make_field(p), 1);
    EXPECT_EQ(three_torsion_order(E), E.torsion_count(3)) << "p=" << p;
  }
  // Beyond the enumeration limit the quartic route is taken.
  EXPECT_EQ(three_torsion_order(Curve::family(make_field(99991), 1)), 1u);
  EXPECT_EQ(three_torsion_order(Curve::family(make_field(99971), 1)), 3u);
}

TEST(Descendants, SmallPrimes) {
  EXPECT_EQ(descendants_n11(5), 12u);
  EXPECT_EQ(descendants_n11(7), 34u);
  EXPECT_EQ(descendants_n11(11), 30u);
}

}  // namespace
}  // namespace hessaut
