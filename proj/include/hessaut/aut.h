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

#ifndef HESSAUT_AUT_H_
#define HESSAUT_AUT_H_

// Orders of Aut(g_{i,S}(F_q)) and Aut(G_{i,S}(F_q)): the closed formula, the
// exhaustive count of the diagonal automorphisms diag(A, A, A_T), and the
// action of those automorphisms on the curve E_S.

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "hessaut/algebra.h"
#include "hessaut/curve.h"
#include "hessaut/ff.h"
#include "hessaut/search.h"

namespace hessaut {

// ceil(4 / i): 4, 2, 2.
int ceil_four_over(int i);

// B_{i,S} over a field together with its curve and algebra.  The root of S
// is `root_sign` times the smaller square root in the field.
struct RepContext {
  FieldCtx ctx;
  int i;
  std::int64_t S;
  FieldElem sqrt_S;
  Curve curve;
  AlgebraData alg;
};

// Throws std::invalid_argument when p divides 2S, i is out of range or S has
// no square root in the field.
RepContext make_rep(const FieldCtx& ctx, int i, std::int64_t S, int root_sign = 1);

struct AutFactors {
  int galois = 1;
  std::uint64_t gcd_factor = 1;
  mpz_class gl2;
  mpz_class q_pow18;
  std::uint64_t torsion = 1;
};

struct AutOrder {
  std::uint64_t p = 0;
  int f = 1;
  std::uint64_t q = 0;
  bool group = false;
  mpz_class exact;
  AutFactors factors;
};

// |E_S[3](F_q)|, by point enumeration for small q and by the 3-division
// quartic otherwise.
std::uint64_t three_torsion_order(const Curve& E);

std::uint64_t gcd_factor(std::uint64_t q, int i);

// gcd(q-1, ceil(4/i)) |GL_2(F_q)| q^18 |E_S[3](F_q)|.
AutOrder lie_aut_order_formula(const FieldCtx& ctx, int i, std::int64_t S);
// The Lie order times f.
AutOrder group_aut_order_formula(const FieldCtx& ctx, int i, std::int64_t S);

struct AutVeq {
  std::uint64_t size = 0;
  std::vector<FMatrix> representatives;
  // Present when the full six-tensor kernel test was also run.
  std::optional<bool> full_kernel_agrees;
};

struct OracleOptions {
  unsigned threads = 0;
  // Re-check every hit against the whole kernel, not only K*.
  bool recheck_full_kernel = false;
};

// Every A in GL_3(F_q) with (A (x) A)(K*) inside ker phi~.
AutVeq enumerate_autVeq(const RepContext& rep, const OracleOptions& opts = {});

// |Aut_V^=| |GL_2| q^18 / (q - 1).  Throws std::logic_error when the
// division or the factorization through the torsion order is inexact.
AutOrder aut_order_from_oracle(const RepContext& rep, std::uint64_t autVeq_size);

// (A (x) A)(K*_{i,S}) lies in ker phi~_{i,S}.
bool passes_kstar_test(const RepContext& rep, const FMatrix& A);

// The induced map on E_S written as tau_Q o [omega].  Throws
// std::runtime_error when A does not preserve the curve's points.
CurveAut cbar_decompose(const RepContext& rep, const FMatrix& A);

// diag(omega^2, omega^3, 1) when omega^ceil(4/i) = 1.
std::optional<FMatrix> lift_isogeny(const RepContext& rep, const FieldElem& omega);

// The translation lift for Q = (a, b) of order 3.  Throws
// std::invalid_argument unless 3Q = O and Q != O.
FMatrix lift_translation(const RepContext& rep, const CurvePoint& Q);

struct CbarImage {
  std::uint64_t size = 0;
  std::vector<CurveAut> elements;  // sorted
  bool closed = false;             // under composition
  bool scalar_kernel = false;      // only scalars act trivially
  bool translations_in_E3 = false;
};

CbarImage image_of_cbar(const RepContext& rep, const AutVeq& oracle);

// (p^2 + p + 2 - m + e(p - 5) + 5 m e) / (m e) with m = gcd(p - 1, 4) and
// e = |E_1[3](F_p)|.  Throws std::logic_error on a non-integral value.
std::uint64_t descendants_n11(std::uint64_t p);

}  // namespace hessaut

#endif  // HESSAUT_AUT_H_
