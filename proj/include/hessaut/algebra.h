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

#ifndef HESSAUT_ALGEBRA_H_
#define HESSAUT_ALGEBRA_H_

// The class-2 Lie algebra g_B = U + W + T and group G_B attached to a
// symmetric 3x3 matrix of linear forms B over F_q.  U, W, T carry the bases
// e_i, f_i, g_i; the bracket is [(u,w,t),(u',w',t')] = phi(u,w') - phi(u',w)
// with phi(u, w)_k = sum_ij u_i w_j B^(k)_ij.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hessaut/ff.h"
#include "hessaut/forms.h"
#include "hessaut/linalg.h"

namespace hessaut {

using Vec3 = std::array<FieldElem, 3>;
using FMatrix = Matrix<FieldCtx>;

struct LieElem {
  Vec3 u{}, w{}, t{};
  friend bool operator==(const LieElem&, const LieElem&) = default;
};

struct GroupElem {
  Vec3 u{}, w{}, t{};
  friend bool operator==(const GroupElem&, const GroupElem&) = default;
};

// sum_ij a[3i + j] e_i (x) f_j.
struct KernelTensor {
  std::array<FieldElem, 9> a{};
  friend bool operator==(const KernelTensor&, const KernelTensor&) = default;
};

class AlgebraData {
 public:
  // Throws std::invalid_argument unless B is symmetric and phi~ has rank 3.
  AlgebraData(const FieldCtx& ctx, const LinFormMatrix<FieldCtx>& B);

  // g_{i,S}(F) with the distinguished tensors K*_{i,S} and K_{i,S} attached
  // and checked against the computed kernel.
  static AlgebraData for_rep(const FieldCtx& ctx, int i, std::int64_t S,
                             const std::optional<FieldElem>& sqrt_S);

  const FieldCtx& ctx() const { return ctx_; }
  const LinFormMatrix<FieldCtx>& B() const { return B_; }
  // 3x9, column 3i + j is phi(e_i, f_j).
  const FMatrix& phi_tilde() const { return phi_tilde_; }
  const std::vector<KernelTensor>& kernel_basis() const { return kernel_; }
  // Empty unless built by for_rep.
  const std::vector<KernelTensor>& kstar() const { return kstar_; }
  const std::vector<KernelTensor>& kfull() const { return kfull_; }
  int rep_index() const { return rep_index_; }

  Vec3 phi(const Vec3& u, const Vec3& w) const;
  Vec3 phi_tilde(const KernelTensor& v) const;
  bool in_kernel(const KernelTensor& v) const;

  LieElem bracket(const LieElem& a, const LieElem& b) const;

  GroupElem mul(const GroupElem& a, const GroupElem& b) const;
  GroupElem inv(const GroupElem& a) const;
  GroupElem pow(const GroupElem& a, std::int64_t n) const;
  // a^{-1} b^{-1} a b.
  GroupElem comm(const GroupElem& a, const GroupElem& b) const;
  GroupElem identity() const { return {}; }

  // dim {v' in V : [v, v'] = 0} from the 3x6 matrix of v' -> [v, v'].
  int centralizer_dim(const Vec3& u, const Vec3& w) const;
  // 6 - rank of the 6x3 matrix stacking B.(u) over -B.(w).
  int centralizer_dim_via_dual(const Vec3& u, const Vec3& w) const;

 private:
  FieldCtx ctx_;
  LinFormMatrix<FieldCtx> B_;
  FMatrix phi_tilde_;
  std::vector<KernelTensor> kernel_;
  std::vector<KernelTensor> kstar_;
  std::vector<KernelTensor> kfull_;
  int rep_index_ = 0;
};

// The three tensors K*_{i,S} and the six of K_{i,S} (root s of S).
std::vector<KernelTensor> kstar_tensors(const FieldCtx& ctx, int i, const FieldElem& S,
                                        const FieldElem& s);
std::vector<KernelTensor> kfull_tensors(const FieldCtx& ctx, int i, const FieldElem& S,
                                        const FieldElem& s);

// (A (x) A) v, where A acts on coordinate columns: e_i -> sum_k A_ki e_k.
KernelTensor tensor_image(const FieldCtx& ctx, const FMatrix& A, const KernelTensor& v);

// The transposed tensor sum a_ij e_j (x) f_i.
KernelTensor dual_tensor(const KernelTensor& v);

Vec3 apply(const FieldCtx& ctx, const FMatrix& A, const Vec3& v);

// psi(M)(u, w, t) = (a u + b wbar, c ubar + d w, det(M) t) as a 9x9 matrix on
// coordinate columns (u, w, t).  Throws on singular M.
FMatrix psi(const FieldCtx& ctx, const FMatrix& M);
LieElem apply(const FieldCtx& ctx, const FMatrix& map9, const LieElem& x);

// diag(A, A, A_T).
FMatrix block_diagonal(const FieldCtx& ctx, const FMatrix& A, const FMatrix& AT);

// A_T with phi~_tgt((A (x) A) v) = A_T phi~_src(v) on a complement of the
// kernel; then [x, y] is checked on all basis pairs.  nullopt when the
// bracket check fails.
std::optional<FMatrix> induced_AT(const AlgebraData& src, const AlgebraData& tgt,
                                  const FMatrix& A);

// The 9x9 map preserves brackets on all 81 pairs of basis elements.
bool preserves_brackets(const AlgebraData& src, const AlgebraData& tgt, const FMatrix& map9);

// Unitriangular matrices [[1, a, c], [0, 1, b], [0, 0, 1]] over the
// commutative algebra A = span(g_1, g_2, g_3) with g_r g_s = B(g)_rs.
struct HeisenbergMatrix {
  Vec3 a{}, b{}, c{};
  friend bool operator==(const HeisenbergMatrix&, const HeisenbergMatrix&) = default;
};

HeisenbergMatrix to_heisenberg(const GroupElem& x);
HeisenbergMatrix heisenberg_mul(const AlgebraData& alg, const HeisenbergMatrix& x,
                                const HeisenbergMatrix& y);

struct HeisenbergReport {
  bool identity_ok = false;
  bool products_ok = false;
  bool commutators_central = false;
  std::uint64_t pairs = 0;
};

HeisenbergReport heisenberg_cross_check(const AlgebraData& alg, std::uint64_t samples,
                                        std::uint64_t seed);

GroupElem random_group_elem(const FieldCtx& ctx, std::mt19937_64& rng);
Vec3 random_vec(const FieldCtx& ctx, std::mt19937_64& rng);

struct PresentationReport {
  bool commutator_relations = false;  // [e_i, f_j] as listed
  bool u_abelian = false;
  bool w_abelian = false;
  bool class_two = false;
  bool exponent_p = false;  // over the sampled elements
  std::vector<std::string> failures;
};

// Relations of the presentation of G_{1,1}(F_p).
PresentationReport check_presentation_G11(const AlgebraData& alg, std::uint64_t samples,
                                          std::uint64_t seed);

// A 3-dim subspace of V = U + W as a 3x6 matrix in reduced row-echelon form.
using Subspace = FMatrix;

struct AbelianScan {
  std::uint64_t subspaces_scanned = 0;
  std::vector<Subspace> abelian;
  // For each abelian subspace, an M with psi(M)(U) equal to it.
  std::vector<std::optional<FMatrix>> psi_witness;
};

// Every 3-dim subspace of V with [X, X] = 0.  q must be at most 5.
AbelianScan enumerate_abelian_3dim_in_V(const AlgebraData& alg);

// RREF of psi(M)(U).
Subspace psi_image_of_U(const FieldCtx& ctx, const FMatrix& M);

}  // namespace hessaut

#endif  // HESSAUT_ALGEBRA_H_
