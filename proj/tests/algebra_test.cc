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

#include "hessaut/algebra.h"

#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "hessaut/aut.h"
#include "hessaut/curve.h"
#include "hessaut/detrep.h"
#include "hessaut/ff.h"

namespace hessaut {
namespace {

Vec3 unit(const FieldCtx& k, int n) {
  Vec3 v{};
  v[n] = k.one();
  return v;
}

FMatrix random_invertible(const FieldCtx& k, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> d(0, k.q() - 1);
  for (;;) {
    FMatrix m(k, n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m(r, c) = k.from_index(d(rng));
    }
    if (!k.is_zero(det(k, m))) return m;
  }
}

TEST(Bracket, BasisExamplesOverF7) {
  const FieldCtx k = make_field(7);
  const AlgebraData alg = AlgebraData::for_rep(k, 1, 1, k.one());
  const LieElem e1{unit(k, 0), {}, {}};
  const LieElem e2{unit(k, 1), {}, {}};
  const LieElem f3{{}, unit(k, 2), {}};
  EXPECT_EQ(alg.bracket(e1, f3), (LieElem{{}, {}, unit(k, 0)}));
  EXPECT_EQ(alg.bracket(e2, f3), LieElem{});
  EXPECT_EQ(alg.bracket(f3, e1), (LieElem{{}, {}, Vec3{k.from_int(-1), k.zero(), k.zero()}}));
}

TEST(Kernel, DistinguishedTensorsOverF7) {
  const FieldCtx k = make_field(7);
  const AlgebraData b1 = AlgebraData::for_rep(k, 1, 1, k.one());
  KernelTensor e2f3;
  e2f3.a[3 * 1 + 2] = k.one();
  EXPECT_TRUE(b1.in_kernel(e2f3));

  const AlgebraData b2 = AlgebraData::for_rep(k, 2, 1, k.one());
  KernelTensor v;
  v.a[3 * 0 + 2] = k.one();
  v.a[3 * 2 + 2] = k.one();
  EXPECT_TRUE(b2.in_kernel(v));

  for (const AlgebraData* alg : {&b1, &b2}) {
    EXPECT_EQ(alg->kernel_basis().size(), 6u);
    EXPECT_EQ(alg->kstar().size(), 3u);
    EXPECT_EQ(alg->kfull().size(), 6u);
    for (const auto& t : alg->kfull()) EXPECT_TRUE(alg->in_kernel(t));
  }
}

TEST(AlgebraData, RejectsAsymmetricOrDegenerateB) {
  const FieldCtx k = make_field(5);
  LinFormMatrix<FieldCtx> b;
  EXPECT_THROW(AlgebraData(k, b), std::invalid_argument);
  b.coef[0][0][1] = k.one();
  EXPECT_THROW(AlgebraData(k, b), std::invalid_argument);
}

TEST(Centralizer, DimensionsSixFourThree) {
  const FieldCtx k = make_field(7);
  for (int i = 1; i <= 3; ++i) {
    const AlgebraData alg = AlgebraData::for_rep(k, i, 1, k.one());
    const Curve E = Curve::family(k, 1);
    EXPECT_EQ(alg.centralizer_dim({}, {}), 6);
    const CurvePoint P = CurvePoint::affine(k.zero(), k.zero());
    const ProjPoint u = E.to_projective(P);
    EXPECT_EQ(alg.centralizer_dim(u, {}), 4) << "i=" << i;
    EXPECT_EQ(alg.centralizer_dim({}, u), 4) << "i=" << i;
    // (1, 0, 0) is off the cone: det B(e1) = 1.
    EXPECT_EQ(alg.centralizer_dim(unit(k, 0), {}), 3);
  }
}

TEST(Centralizer, DualFormulaAgreesEverywhereOverF5) {
  const FieldCtx k = make_field(5);
  for (int i = 1; i <= 3; ++i) {
    const AlgebraData alg = AlgebraData::for_rep(k, i, 1, k.one());
    std::mt19937_64 rng(i);
    for (int trial = 0; trial < 300; ++trial) {
      const Vec3 u = random_vec(k, rng);
      const Vec3 w = trial % 3 == 0 ? Vec3{} : random_vec(k, rng);
      EXPECT_EQ(alg.centralizer_dim(u, w), alg.centralizer_dim_via_dual(u, w));
    }
  }
}

class GroupLawTest : public ::testing::TestWithParam<std::tuple<int, int>> {};

TEST_P(GroupLawTest, ClassTwoExponentP) {
  const auto [p, i] = GetParam();
  const FieldCtx k = make_field(p);
  const AlgebraData alg = AlgebraData::for_rep(k, i, 1, k.one());
  std::mt19937_64 rng(p * 10 + i);
  for (int trial = 0; trial < 100; ++trial) {
    const GroupElem a = random_group_elem(k, rng);
    const GroupElem b = random_group_elem(k, rng);
    const GroupElem c = random_group_elem(k, rng);
    EXPECT_EQ(alg.mul(alg.mul(a, b), c), alg.mul(a, alg.mul(b, c)));
    EXPECT_EQ(alg.mul(a, alg.inv(a)), alg.identity());
    EXPECT_EQ(alg.pow(a, p), alg.identity());
    EXPECT_EQ(alg.mul(alg.pow(a, 2), alg.pow(a, 3)), alg.pow(a, 5));
    const GroupElem z = alg.comm(a, b);
    EXPECT_EQ(alg.mul(z, c), alg.mul(c, z));
    EXPECT_EQ(to_heisenberg(alg.mul(a, b)),
              heisenberg_mul(alg, to_heisenberg(a), to_heisenberg(b)));
  }
  const HeisenbergReport h = heisenberg_cross_check(alg, 200, 5);
  EXPECT_TRUE(h.identity_ok && h.products_ok && h.commutators_central);
}

INSTANTIATE_TEST_SUITE_P(SmallPrimes, GroupLawTest,
                         ::testing::Combine(::testing::Values(5, 7, 11), ::testing::Values(1, 2, 3)));

TEST(Presentation, G11RelationsHold) {
  for (int p : {5, 7, 11}) {
    const FieldCtx k = make_field(p);
    const AlgebraData alg = AlgebraData::for_rep(k, 1, 1, std::nullopt);
    const PresentationReport r = check_presentation_G11(alg, 200, p);
    EXPECT_TRUE(r.commutator_relations && r.u_abelian && r.w_abelian && r.class_two &&
                r.exponent_p)
        << "p=" << p << (r.failures.empty() ? "" : " " + r.failures.front());
  }
}

TEST(Psi, HomomorphismIntoAutomorphisms) {
  const FieldCtx k = make_field(7);
  const AlgebraData alg = AlgebraData::for_rep(k, 1, 1, k.one());
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const FMatrix M = random_invertible(k, 2, rng);
    const FMatrix N = random_invertible(k, 2, rng);
    EXPECT_TRUE(preserves_brackets(alg, alg, psi(k, M)));
    EXPECT_EQ(psi(k, matmul(k, M, N)), matmul(k, psi(k, M), psi(k, N)));
  }
  EXPECT_EQ(psi(k, FMatrix::identity(k, 2)), FMatrix::identity(k, 9));
  EXPECT_THROW(psi(k, FMatrix(k, 2, 2)), std::invalid_argument);
}

TEST(Psi, AntidiagonalSwapsUAndW) {
  const FieldCtx k = make_field(5);
  FMatrix M(k, 2, 2);
  M(0, 1) = k.one();
  M(1, 0) = k.one();
  const LieElem x{unit(k, 0), unit(k, 1), unit(k, 2)};
  const LieElem y = apply(k, psi(k, M), x);
  EXPECT_EQ(y.u, unit(k, 1));
  EXPECT_EQ(y.w, unit(k, 0));
  EXPECT_EQ(y.t, (Vec3{k.zero(), k.zero(), k.from_int(-1)}));
}

// D^T B^(k) = B^(k) D for all k exactly when {(D w, w)} is abelian.  The
// matrix side is checked directly; the subspace side through brackets.
TEST(SubspaceReduction, CommutationIffAbelian) {
  for (int p : {5, 7}) {
    const FieldCtx k = make_field(p);
    for (int i = 1; i <= 3; ++i) {
      const AlgebraData alg = AlgebraData::for_rep(k, i, 1, k.one());
      // Solutions of the linear system, so the positive side is exercised.
      FMatrix eqs(k, 27, 9);
      for (int kk = 0; kk < 3; ++kk) {
        for (int r = 0; r < 3; ++r) {
          for (int c = 0; c < 3; ++c) {
            // (D^T B)_{rc} - (B D)_{rc} = sum_m D_{mr} B_{mc} - B_{rm} D_{mc}.
            for (int m = 0; m < 3; ++m) {
              auto& x = eqs(9 * kk + 3 * r + c, 3 * m + r);
              x = k.add(x, alg.B().coef[kk][m][c]);
              auto& y = eqs(9 * kk + 3 * r + c, 3 * m + c);
              y = k.sub(y, alg.B().coef[kk][r][m]);
            }
          }
        }
      }
      const auto sols = nullspace(k, eqs);
      std::mt19937_64 rng(p * 3 + i);
      std::uniform_int_distribution<std::uint64_t> d(0, k.q() - 1);
      int positives = 0;
      for (int trial = 0; trial < 200; ++trial) {
        FMatrix D(k, 3, 3);
        if (trial % 2 == 0) {
          for (const auto& s : sols) {
            const FieldElem c = k.from_index(d(rng));
            for (int n = 0; n < 9; ++n) D(n / 3, n % 3) = k.add(D(n / 3, n % 3), k.mul(c, s[n]));
          }
        } else {
          D = random_invertible(k, 3, rng);
        }
        const FMatrix tD = transpose(k, D);
        bool commutes = true;
        for (int kk = 0; kk < 3 && commutes; ++kk) {
          FMatrix Bk(k, 3, 3);
          for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) Bk(r, c) = alg.B().coef[kk][r][c];
          }
          commutes = matmul(k, tD, Bk) == matmul(k, Bk, D);
        }
        bool abelian = true;
        for (int a = 0; a < 3 && abelian; ++a) {
          for (int b = 0; b < 3 && abelian; ++b) {
            const LieElem x{apply(k, D, unit(k, a)), unit(k, a), {}};
            const LieElem y{apply(k, D, unit(k, b)), unit(k, b), {}};
            abelian = alg.bracket(x, y) == LieElem{};
          }
        }
        EXPECT_EQ(commutes, abelian) << "p=" << p << " i=" << i;
        positives += commutes;
      }
      EXPECT_GT(positives, 0);
    }
  }
}

TEST(Tensors, ImageAndDual) {
  const FieldCtx k = make_field(11);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> d(0, 10);
  KernelTensor v;
  for (auto& x : v.a) x = k.from_index(d(rng));
  EXPECT_EQ(dual_tensor(dual_tensor(v)), v);
  EXPECT_EQ(tensor_image(k, FMatrix::identity(k, 3), v), v);
  const FMatrix A = random_invertible(k, 3, rng);
  const FMatrix B = random_invertible(k, 3, rng);
  EXPECT_EQ(tensor_image(k, matmul(k, A, B), v), tensor_image(k, A, tensor_image(k, B, v)));
  EXPECT_EQ(apply(k, A, unit(k, 1)), (Vec3{A(0, 1), A(1, 1), A(2, 1)}));
}

TEST(InducedAT, IdentityAndScalars) {
  const FieldCtx k = make_field(7);
  const AlgebraData alg = AlgebraData::for_rep(k, 2, 1, k.one());
  const auto at = induced_AT(alg, alg, FMatrix::identity(k, 3));
  ASSERT_TRUE(at.has_value());
  EXPECT_EQ(*at, FMatrix::identity(k, 3));
  FMatrix two = FMatrix::identity(k, 3);
  for (int n = 0; n < 3; ++n) two(n, n) = k.from_int(2);
  const auto at2 = induced_AT(alg, alg, two);
  ASSERT_TRUE(at2.has_value());
  EXPECT_EQ((*at2)(0, 0), k.from_int(4));
  EXPECT_TRUE(preserves_brackets(alg, alg, block_diagonal(k, two, *at2)));
}

TEST(AbelianSubspaces, ExactlyThePsiImagesAtP5) {
  const FieldCtx k = make_field(5);
  const AlgebraData alg = AlgebraData::for_rep(k, 1, 1, k.one());
  const AbelianScan scan = enumerate_abelian_3dim_in_V(alg);
  // Gaussian binomial [6 choose 3]_5.
  EXPECT_EQ(scan.subspaces_scanned, 2558556u);
  ASSERT_EQ(scan.abelian.size(), 6u);
  bool saw_U = false, saw_W = false;
  FMatrix U(k, 3, 6), W(k, 3, 6);
  for (int n = 0; n < 3; ++n) {
    U(n, n) = k.one();
    W(n, 3 + n) = k.one();
  }
  for (std::size_t n = 0; n < scan.abelian.size(); ++n) {
    ASSERT_TRUE(scan.psi_witness[n].has_value());
    EXPECT_EQ(psi_image_of_U(k, *scan.psi_witness[n]), scan.abelian[n]);
    saw_U = saw_U || scan.abelian[n] == U;
    saw_W = saw_W || scan.abelian[n] == W;
  }
  EXPECT_TRUE(saw_U);
  EXPECT_TRUE(saw_W);
}

}  // namespace
}  // namespace hessaut
