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

#include <stdexcept>

#include "hessaut/detrep.h"

namespace hessaut {
namespace {

KernelTensor tensor(const FieldCtx& ctx,
                    std::initializer_list<std::tuple<int, int, FieldElem>> terms) {
  KernelTensor v;
  for (const auto& [i, j, c] : terms) v.a[3 * i + j] = ctx.add(v.a[3 * i + j], c);
  return v;
}

Vec3 unit(const FieldCtx& ctx, int k) {
  Vec3 v{};
  v[k] = ctx.one();
  return v;
}

Vec3 vec_sub(const FieldCtx& ctx, const Vec3& x, const Vec3& y) {
  return {ctx.sub(x[0], y[0]), ctx.sub(x[1], y[1]), ctx.sub(x[2], y[2])};
}

Vec3 vec_add(const FieldCtx& ctx, const Vec3& x, const Vec3& y) {
  return {ctx.add(x[0], y[0]), ctx.add(x[1], y[1]), ctx.add(x[2], y[2])};
}

Vec3 vec_scale(const FieldCtx& ctx, const FieldElem& c, const Vec3& x) {
  return {ctx.mul(c, x[0]), ctx.mul(c, x[1]), ctx.mul(c, x[2])};
}

Vec3 vec_neg(const FieldCtx& ctx, const Vec3& x) {
  return {ctx.neg(x[0]), ctx.neg(x[1]), ctx.neg(x[2])};
}

bool is_zero_vec(const Vec3& v) { return v == Vec3{}; }

// Basis element number k of L = U + W + T.
LieElem basis_elem(const FieldCtx& ctx, int k) {
  LieElem x;
  if (k < 3) {
    x.u = unit(ctx, k);
  } else if (k < 6) {
    x.w = unit(ctx, k - 3);
  } else {
    x.t = unit(ctx, k - 6);
  }
  return x;
}

// Product in the algebra g_r g_s = B(g)_rs.
Vec3 algebra_product(const AlgebraData& alg, const Vec3& x, const Vec3& y) {
  const FieldCtx& ctx = alg.ctx();
  Vec3 out{};
  for (int r = 0; r < 3; ++r) {
    if (ctx.is_zero(x[r])) continue;
    for (int s = 0; s < 3; ++s) {
      const FieldElem xy = ctx.mul(x[r], y[s]);
      for (int k = 0; k < 3; ++k) {
        out[k] = ctx.add(out[k], ctx.mul(xy, alg.B().coef[k][r][s]));
      }
    }
  }
  return out;
}

HeisenbergMatrix heisenberg_inv(const AlgebraData& alg, const HeisenbergMatrix& x) {
  const FieldCtx& ctx = alg.ctx();
  return {vec_neg(ctx, x.a), vec_neg(ctx, x.b),
          vec_sub(ctx, algebra_product(alg, x.a, x.b), x.c)};
}

}  // namespace

AlgebraData::AlgebraData(const FieldCtx& ctx, const LinFormMatrix<FieldCtx>& B)
    : ctx_(ctx), B_(B), phi_tilde_(ctx, 3, 9) {
  if (!is_symmetric(B)) throw std::invalid_argument("B must be symmetric");
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) phi_tilde_(k, 3 * i + j) = B.coef[k][i][j];
    }
  }
  if (rank(ctx, phi_tilde_) != 3) throw std::invalid_argument("image of phi does not span T");
  for (auto& v : nullspace(ctx, phi_tilde_)) {
    KernelTensor t;
    for (int k = 0; k < 9; ++k) t.a[k] = v[k];
    kernel_.push_back(t);
  }
}

AlgebraData AlgebraData::for_rep(const FieldCtx& ctx, int i, std::int64_t S,
                                 const std::optional<FieldElem>& sqrt_S) {
  const HessianRep<FieldCtx> rep = build_B_field(ctx, i, S, sqrt_S);
  AlgebraData alg(ctx, rep.B);
  const FieldElem s = sqrt_S.value_or(ctx.one());
  alg.kstar_ = kstar_tensors(ctx, i, rep.S, s);
  alg.kfull_ = kfull_tensors(ctx, i, rep.S, s);
  alg.rep_index_ = i;
  FMatrix span(ctx, 6, 9);
  for (int r = 0; r < 6; ++r) {
    if (!alg.in_kernel(alg.kfull_[r])) {
      throw std::logic_error("listed kernel tensor is not annihilated by phi");
    }
    for (int k = 0; k < 9; ++k) span(r, k) = alg.kfull_[r].a[k];
  }
  if (rank(ctx, span) != 6) throw std::logic_error("listed kernel tensors do not span the kernel");
  return alg;
}

Vec3 AlgebraData::phi(const Vec3& u, const Vec3& w) const {
  Vec3 out{};
  for (int i = 0; i < 3; ++i) {
    if (ctx_.is_zero(u[i])) continue;
    for (int j = 0; j < 3; ++j) {
      if (ctx_.is_zero(w[j])) continue;
      const FieldElem uw = ctx_.mul(u[i], w[j]);
      for (int k = 0; k < 3; ++k) out[k] = ctx_.add(out[k], ctx_.mul(uw, B_.coef[k][i][j]));
    }
  }
  return out;
}

Vec3 AlgebraData::phi_tilde(const KernelTensor& v) const {
  Vec3 out{};
  for (int k = 0; k < 3; ++k) {
    for (int c = 0; c < 9; ++c) out[k] = ctx_.add(out[k], ctx_.mul(phi_tilde_(k, c), v.a[c]));
  }
  return out;
}

bool AlgebraData::in_kernel(const KernelTensor& v) const { return is_zero_vec(phi_tilde(v)); }

LieElem AlgebraData::bracket(const LieElem& a, const LieElem& b) const {
  LieElem out;
  out.t = vec_sub(ctx_, phi(a.u, b.w), phi(b.u, a.w));
  return out;
}

GroupElem AlgebraData::mul(const GroupElem& a, const GroupElem& b) const {
  return {vec_add(ctx_, a.u, b.u), vec_add(ctx_, a.w, b.w),
          vec_add(ctx_, vec_add(ctx_, a.t, b.t), phi(a.u, b.w))};
}

GroupElem AlgebraData::inv(const GroupElem& a) const {
  return {vec_neg(ctx_, a.u), vec_neg(ctx_, a.w), vec_sub(ctx_, phi(a.u, a.w), a.t)};
}

GroupElem AlgebraData::pow(const GroupElem& a, std::int64_t n) const {
  // (n u, n w, n t + C(n, 2) phi(u, w)), valid for negative n as well.
  const FieldElem nn = ctx_.from_int(n);
  const FieldElem binom = ctx_.div(ctx_.mul(nn, ctx_.from_int(n - 1)), ctx_.from_int(2));
  return {vec_scale(ctx_, nn, a.u), vec_scale(ctx_, nn, a.w),
          vec_add(ctx_, vec_scale(ctx_, nn, a.t), vec_scale(ctx_, binom, phi(a.u, a.w)))};
}

GroupElem AlgebraData::comm(const GroupElem& a, const GroupElem& b) const {
  return mul(mul(inv(a), inv(b)), mul(a, b));
}

int AlgebraData::centralizer_dim(const Vec3& u, const Vec3& w) const {
  FMatrix m(ctx_, 3, 6);
  for (int k = 0; k < 3; ++k) {
    // v' = e_k gives -phi(e_k, w); v' = f_k gives phi(u, f_k).
    const Vec3 cu = vec_neg(ctx_, phi(unit(ctx_, k), w));
    const Vec3 cw = phi(u, unit(ctx_, k));
    for (int r = 0; r < 3; ++r) {
      m(r, k) = cu[r];
      m(r, 3 + k) = cw[r];
    }
  }
  return 6 - static_cast<int>(rank(ctx_, m));
}

int AlgebraData::centralizer_dim_via_dual(const Vec3& u, const Vec3& w) const {
  const LinFormMatrix<FieldCtx> d = dual(B_);
  const FMatrix bu = evaluate(ctx_, d, u);
  const FMatrix bw = evaluate(ctx_, d, w);
  FMatrix m(ctx_, 6, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      m(i, j) = bu(i, j);
      m(3 + i, j) = ctx_.neg(bw(i, j));
    }
  }
  return 6 - static_cast<int>(rank(ctx_, m));
}

std::vector<KernelTensor> kstar_tensors(const FieldCtx& ctx, int i, const FieldElem& S,
                                        const FieldElem& s) {
  const FieldElem one = ctx.one();
  const FieldElem m1 = ctx.neg(one);
  switch (i) {
    case 1:
      return {tensor(ctx, {{1, 2, one}}), tensor(ctx, {{0, 0, S}, {2, 2, m1}}),
              tensor(ctx, {{0, 2, one}, {1, 1, one}})};
    case 2:
      return {tensor(ctx, {{0, 2, s}, {2, 2, one}}), tensor(ctx, {{1, 2, one}, {0, 1, ctx.neg(s)}}),
              tensor(ctx, {{0, 0, S}, {1, 1, ctx.add(s, s)}, {2, 2, one}})};
    case 3:
      return {tensor(ctx, {{0, 2, s}, {2, 2, m1}}), tensor(ctx, {{1, 2, one}, {0, 1, s}}),
              tensor(ctx, {{0, 0, S}, {1, 1, ctx.neg(ctx.add(s, s))}, {2, 2, one}})};
    default:
      throw std::invalid_argument("representation index must be 1, 2 or 3");
  }
}

std::vector<KernelTensor> kfull_tensors(const FieldCtx& ctx, int i, const FieldElem& S,
                                        const FieldElem& s) {
  std::vector<KernelTensor> out = kstar_tensors(ctx, i, S, s);
  const FieldElem one = ctx.one();
  const FieldElem m1 = ctx.neg(one);
  if (i == 1) {
    out.push_back(tensor(ctx, {{2, 1, one}}));
    out.push_back(tensor(ctx, {{0, 2, one}, {2, 0, m1}}));
    out.push_back(tensor(ctx, {{0, 1, one}, {1, 0, m1}}));
  } else {
    const FieldElem sign = i == 2 ? one : m1;
    out.push_back(tensor(ctx, {{2, 0, s}, {2, 2, sign}}));
    out.push_back(tensor(ctx, {{1, 0, s}, {2, 1, ctx.neg(sign)}}));
    out.push_back(tensor(ctx, {{1, 2, one}, {2, 1, m1}}));
  }
  return out;
}

KernelTensor tensor_image(const FieldCtx& ctx, const FMatrix& A, const KernelTensor& v) {
  // A V A^T with V_ij = a[3i + j].
  std::array<FieldElem, 9> av{};
  for (int k = 0; k < 3; ++k) {
    for (int j = 0; j < 3; ++j) {
      FieldElem acc{};
      for (int i = 0; i < 3; ++i) acc = ctx.add(acc, ctx.mul(A(k, i), v.a[3 * i + j]));
      av[3 * k + j] = acc;
    }
  }
  KernelTensor out;
  for (int k = 0; k < 3; ++k) {
    for (int l = 0; l < 3; ++l) {
      FieldElem acc{};
      for (int j = 0; j < 3; ++j) acc = ctx.add(acc, ctx.mul(av[3 * k + j], A(l, j)));
      out.a[3 * k + l] = acc;
    }
  }
  return out;
}

KernelTensor dual_tensor(const KernelTensor& v) {
  KernelTensor out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) out.a[3 * j + i] = v.a[3 * i + j];
  }
  return out;
}

Vec3 apply(const FieldCtx& ctx, const FMatrix& A, const Vec3& v) {
  Vec3 out{};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) out[r] = ctx.add(out[r], ctx.mul(A(r, c), v[c]));
  }
  return out;
}

FMatrix psi(const FieldCtx& ctx, const FMatrix& M) {
  const FieldElem d = ctx.sub(ctx.mul(M(0, 0), M(1, 1)), ctx.mul(M(0, 1), M(1, 0)));
  if (ctx.is_zero(d)) throw std::invalid_argument("psi needs an invertible 2x2 matrix");
  FMatrix out(ctx, 9, 9);
  for (int k = 0; k < 3; ++k) {
    out(k, k) = M(0, 0);
    out(k, 3 + k) = M(0, 1);
    out(3 + k, k) = M(1, 0);
    out(3 + k, 3 + k) = M(1, 1);
    out(6 + k, 6 + k) = d;
  }
  return out;
}

LieElem apply(const FieldCtx& ctx, const FMatrix& map9, const LieElem& x) {
  std::array<FieldElem, 9> in{};
  for (int k = 0; k < 3; ++k) {
    in[k] = x.u[k];
    in[3 + k] = x.w[k];
    in[6 + k] = x.t[k];
  }
  LieElem out;
  for (int r = 0; r < 9; ++r) {
    FieldElem acc{};
    for (int c = 0; c < 9; ++c) acc = ctx.add(acc, ctx.mul(map9(r, c), in[c]));
    if (r < 3) {
      out.u[r] = acc;
    } else if (r < 6) {
      out.w[r - 3] = acc;
    } else {
      out.t[r - 6] = acc;
    }
  }
  return out;
}

FMatrix block_diagonal(const FieldCtx& ctx, const FMatrix& A, const FMatrix& AT) {
  FMatrix out(ctx, 9, 9);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      out(r, c) = A(r, c);
      out(3 + r, 3 + c) = A(r, c);
      out(6 + r, 6 + c) = AT(r, c);
    }
  }
  return out;
}

bool preserves_brackets(const AlgebraData& src, const AlgebraData& tgt, const FMatrix& map9) {
  const FieldCtx& ctx = src.ctx();
  if (ctx.is_zero(det(ctx, map9))) return false;
  std::array<LieElem, 9> images;
  for (int k = 0; k < 9; ++k) images[k] = apply(ctx, map9, basis_elem(ctx, k));
  for (int a = 0; a < 9; ++a) {
    for (int b = 0; b < 9; ++b) {
      const LieElem lhs = apply(ctx, map9, src.bracket(basis_elem(ctx, a), basis_elem(ctx, b)));
      if (!(lhs == tgt.bracket(images[a], images[b]))) return false;
    }
  }
  return true;
}

std::optional<FMatrix> induced_AT(const AlgebraData& src, const AlgebraData& tgt,
                                  const FMatrix& A) {
  const FieldCtx& ctx = src.ctx();
  // Three basis tensors whose images span T give preimages of g_1, g_2, g_3.
  for (int c0 = 0; c0 < 9; ++c0) {
    for (int c1 = c0 + 1; c1 < 9; ++c1) {
      for (int c2 = c1 + 1; c2 < 9; ++c2) {
        const std::array<int, 3> cols{c0, c1, c2};
        FMatrix sub(ctx, 3, 3);
        for (int r = 0; r < 3; ++r) {
          for (int m = 0; m < 3; ++m) sub(r, m) = src.phi_tilde()(r, cols[m]);
        }
        const auto sub_inv = inverse(ctx, sub);
        if (!sub_inv) continue;
        FMatrix AT(ctx, 3, 3);
        for (int j = 0; j < 3; ++j) {
          KernelTensor v;
          for (int m = 0; m < 3; ++m) v.a[cols[m]] = (*sub_inv)(m, j);
          const Vec3 img = tgt.phi_tilde(tensor_image(ctx, A, v));
          for (int r = 0; r < 3; ++r) AT(r, j) = img[r];
        }
        if (!preserves_brackets(src, tgt, block_diagonal(ctx, A, AT))) return std::nullopt;
        return AT;
      }
    }
  }
  return std::nullopt;
}

HeisenbergMatrix to_heisenberg(const GroupElem& x) { return {x.u, x.w, x.t}; }

HeisenbergMatrix heisenberg_mul(const AlgebraData& alg, const HeisenbergMatrix& x,
                                const HeisenbergMatrix& y) {
  const FieldCtx& ctx = alg.ctx();
  return {vec_add(ctx, x.a, y.a), vec_add(ctx, x.b, y.b),
          vec_add(ctx, vec_add(ctx, x.c, y.c), algebra_product(alg, x.a, y.b))};
}

Vec3 random_vec(const FieldCtx& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, ctx.q() - 1);
  return {ctx.from_index(dist(rng)), ctx.from_index(dist(rng)), ctx.from_index(dist(rng))};
}

GroupElem random_group_elem(const FieldCtx& ctx, std::mt19937_64& rng) {
  GroupElem g;
  g.u = random_vec(ctx, rng);
  g.w = random_vec(ctx, rng);
  g.t = random_vec(ctx, rng);
  return g;
}

HeisenbergReport heisenberg_cross_check(const AlgebraData& alg, std::uint64_t samples,
                                        std::uint64_t seed) {
  const FieldCtx& ctx = alg.ctx();
  std::mt19937_64 rng(seed);
  HeisenbergReport rep;
  rep.identity_ok = to_heisenberg(alg.identity()) == HeisenbergMatrix{};
  rep.products_ok = true;
  rep.commutators_central = true;
  for (std::uint64_t n = 0; n < samples; ++n) {
    const GroupElem x = random_group_elem(ctx, rng);
    const GroupElem y = random_group_elem(ctx, rng);
    const HeisenbergMatrix hx = to_heisenberg(x);
    const HeisenbergMatrix hy = to_heisenberg(y);
    if (!(heisenberg_mul(alg, hx, hy) == to_heisenberg(alg.mul(x, y)))) rep.products_ok = false;
    const HeisenbergMatrix c =
        heisenberg_mul(alg, heisenberg_mul(alg, heisenberg_inv(alg, hx), heisenberg_inv(alg, hy)),
                       heisenberg_mul(alg, hx, hy));
    const LieElem br = alg.bracket({x.u, x.w, x.t}, {y.u, y.w, y.t});
    if (!is_zero_vec(c.a) || !is_zero_vec(c.b) || !(c.c == br.t)) rep.commutators_central = false;
    ++rep.pairs;
  }
  return rep;
}

PresentationReport check_presentation_G11(const AlgebraData& alg, std::uint64_t samples,
                                          std::uint64_t seed) {
  const FieldCtx& ctx = alg.ctx();
  PresentationReport rep;
  // [e_i, f_j] as a signed generator g_k; k < 0 means the identity.
  struct Rel {
    int i, j, k, sign;
  };
  static constexpr Rel kRelations[] = {
      {0, 0, 2, 1},  {2, 2, 2, 1},  {0, 1, 1, -1}, {1, 0, 1, -1}, {0, 2, 0, 1},
      {1, 1, 0, -1}, {2, 0, 0, 1},  {1, 2, -1, 0}, {2, 1, -1, 0},
  };
  rep.commutator_relations = true;
  for (const Rel& r : kRelations) {
    GroupElem e, f;
    e.u = unit(ctx, r.i);
    f.w = unit(ctx, r.j);
    GroupElem want;
    if (r.k >= 0) want.t[r.k] = ctx.from_int(r.sign);
    if (!(alg.comm(e, f) == want)) {
      rep.commutator_relations = false;
      rep.failures.push_back("[e" + std::to_string(r.i + 1) + ",f" + std::to_string(r.j + 1) + "]");
    }
  }
  rep.u_abelian = true;
  rep.w_abelian = true;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      GroupElem a, b, c, d;
      a.u = unit(ctx, i);
      b.u = unit(ctx, j);
      c.w = unit(ctx, i);
      d.w = unit(ctx, j);
      if (!(alg.comm(a, b) == alg.identity())) rep.u_abelian = false;
      if (!(alg.comm(c, d) == alg.identity())) rep.w_abelian = false;
    }
  }
  std::mt19937_64 rng(seed);
  rep.class_two = true;
  rep.exponent_p = true;
  for (std::uint64_t n = 0; n < samples; ++n) {
    const GroupElem x = random_group_elem(ctx, rng);
    const GroupElem y = random_group_elem(ctx, rng);
    const GroupElem z = random_group_elem(ctx, rng);
    if (!(alg.comm(alg.comm(x, y), z) == alg.identity())) rep.class_two = false;
    if (!(alg.pow(x, ctx.p()) == alg.identity())) rep.exponent_p = false;
  }
  if (!rep.u_abelian) rep.failures.push_back("<e> not abelian");
  if (!rep.w_abelian) rep.failures.push_back("<f> not abelian");
  if (!rep.class_two) rep.failures.push_back("class above 2");
  if (!rep.exponent_p) rep.failures.push_back("exponent differs from p");
  return rep;
}

Subspace psi_image_of_U(const FieldCtx& ctx, const FMatrix& M) {
  Subspace X(ctx, 3, 6);
  for (int k = 0; k < 3; ++k) {
    X(k, k) = M(0, 0);
    X(k, 3 + k) = M(1, 0);
  }
  rref(ctx, X);
  return X;
}

AbelianScan enumerate_abelian_3dim_in_V(const AlgebraData& alg) {
  const FieldCtx& ctx = alg.ctx();
  if (ctx.q() > 5) throw std::invalid_argument("Grassmannian scan limited to q <= 5");
  const std::uint64_t q = ctx.q();
  AbelianScan out;

  // Candidate psi(M)(U): one per point (a : c) of P^1.
  std::vector<std::pair<FMatrix, Subspace>> candidates;
  for (std::uint64_t n = 0; n <= q; ++n) {
    FMatrix M(ctx, 2, 2);
    if (n < q) {
      M(0, 0) = ctx.one();
      M(1, 0) = ctx.from_index(n);
      M(1, 1) = ctx.one();
    } else {
      M(0, 1) = ctx.one();
      M(1, 0) = ctx.one();
    }
    candidates.emplace_back(M, psi_image_of_U(ctx, M));
  }

  for (int p0 = 0; p0 < 6; ++p0) {
    for (int p1 = p0 + 1; p1 < 6; ++p1) {
      for (int p2 = p1 + 1; p2 < 6; ++p2) {
        const std::array<int, 3> piv{p0, p1, p2};
        // Free slots: row r, column c > piv[r] with c not a pivot.
        std::vector<std::pair<int, int>> free;
        for (int r = 0; r < 3; ++r) {
          for (int c = piv[r] + 1; c < 6; ++c) {
            if (c != p0 && c != p1 && c != p2) free.emplace_back(r, c);
          }
        }
        std::uint64_t total = 1;
        for (std::size_t k = 0; k < free.size(); ++k) total *= q;
        for (std::uint64_t code = 0; code < total; ++code) {
          Subspace X(ctx, 3, 6);
          for (int r = 0; r < 3; ++r) X(r, piv[r]) = ctx.one();
          std::uint64_t rest = code;
          for (const auto& [r, c] : free) {
            X(r, c) = ctx.from_index(rest % q);
            rest /= q;
          }
          ++out.subspaces_scanned;
          bool abelian = true;
          for (int a = 0; a < 3 && abelian; ++a) {
            for (int b = a + 1; b < 3 && abelian; ++b) {
              LieElem xa, xb;
              for (int k = 0; k < 3; ++k) {
                xa.u[k] = X(a, k);
                xa.w[k] = X(a, 3 + k);
                xb.u[k] = X(b, k);
                xb.w[k] = X(b, 3 + k);
              }
              abelian = is_zero_vec(alg.bracket(xa, xb).t);
            }
          }
          if (!abelian) continue;
          std::optional<FMatrix> witness;
          for (const auto& [M, image] : candidates) {
            if (image == X) {
              witness = M;
              break;
            }
          }
          out.abelian.push_back(X);
          out.psi_witness.push_back(witness);
        }
      }
    }
  }
  return out;
}

}  // namespace hessaut
