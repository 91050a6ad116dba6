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

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace hessaut {
namespace {

FieldElem square_root_of(const FieldCtx& ctx, std::int64_t S, int root_sign) {
  const auto r = ctx.sqrt(ctx.from_int(S));
  if (!r) throw std::invalid_argument("S has no square root in the field");
  return root_sign >= 0 ? r->first : r->second;
}

void check_order_inputs(const FieldCtx& ctx, int i, std::int64_t S) {
  if (i < 1 || i > 3) throw std::invalid_argument("representation index must be 1, 2 or 3");
  if (ctx.is_zero(ctx.from_int(S))) throw std::invalid_argument("the characteristic divides 2S");
  if (!ctx.sqrt(ctx.from_int(S))) throw std::invalid_argument("S has no square root in the field");
}

mpz_class gl2_order(std::uint64_t q) {
  const mpz_class Q(std::to_string(q));
  return (Q * Q - 1) * (Q * Q - Q);
}

mpz_class power18(std::uint64_t q) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), q, 18);
  return out;
}

FieldElem embed(const FieldCtx& from, const FieldCtx& to, const FieldElem& x) {
  return to.from_int(from.to_signed(x));
}

// Candidates omega for which tau_{-Q} o A agrees with [omega] on every
// rational point.
std::vector<FieldElem> matching_omegas(const Curve& E, const FMatrix& A, CurvePoint& Q) {
  const FieldCtx& k = E.ctx();
  auto image = [&](const CurvePoint& P) {
    const ProjPoint v = E.to_projective(P);
    ProjPoint w{};
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) w[r] = k.add(w[r], k.mul(A(r, c), v[c]));
    }
    const auto out = E.from_projective(w);
    if (!out) throw std::runtime_error("the matrix does not preserve the curve");
    return *out;
  };
  Q = image(CurvePoint::at_infinity());
  const CurvePoint minus_Q = E.neg(Q);
  std::vector<CurvePoint> pts = E.enumerate_points();
  std::vector<CurvePoint> moved;
  moved.reserve(pts.size());
  for (const CurvePoint& P : pts) moved.push_back(E.add(minus_Q, image(P)));
  std::vector<FieldElem> out;
  for (const FieldElem& w : fourth_roots_of_unity(k)) {
    const CurveAut iso{CurvePoint::at_infinity(), w};
    bool ok = true;
    for (std::size_t n = 0; n < pts.size() && ok; ++n) ok = apply(E, iso, pts[n]) == moved[n];
    if (ok) out.push_back(w);
  }
  return out;
}

}  // namespace

int ceil_four_over(int i) {
  if (i < 1 || i > 3) throw std::invalid_argument("representation index must be 1, 2 or 3");
  return (4 + i - 1) / i;
}

RepContext make_rep(const FieldCtx& ctx, int i, std::int64_t S, int root_sign) {
  check_order_inputs(ctx, i, S);
  const FieldElem s = square_root_of(ctx, S, root_sign);
  return RepContext{ctx, i, S, s, Curve::family(ctx, S, s), AlgebraData::for_rep(ctx, i, S, s)};
}

std::uint64_t three_torsion_order(const Curve& E) {
  if (E.ctx().q() <= 10000) return E.torsion_count(3);
  return three_torsion_via_quartic(E);
}

std::uint64_t gcd_factor(std::uint64_t q, int i) {
  return std::gcd(q - 1, static_cast<std::uint64_t>(ceil_four_over(i)));
}

AutOrder lie_aut_order_formula(const FieldCtx& ctx, int i, std::int64_t S) {
  check_order_inputs(ctx, i, S);
  AutOrder out;
  out.p = ctx.p();
  out.f = ctx.degree();
  out.q = ctx.q();
  out.factors.galois = ctx.degree();
  out.factors.gcd_factor = gcd_factor(ctx.q(), i);
  out.factors.gl2 = gl2_order(ctx.q());
  out.factors.q_pow18 = power18(ctx.q());
  out.factors.torsion = three_torsion_order(Curve::family(ctx, S));
  out.exact = mpz_class(std::to_string(out.factors.gcd_factor)) * out.factors.gl2 *
              out.factors.q_pow18 * mpz_class(std::to_string(out.factors.torsion));
  return out;
}

AutOrder group_aut_order_formula(const FieldCtx& ctx, int i, std::int64_t S) {
  AutOrder out = lie_aut_order_formula(ctx, i, S);
  out.group = true;
  out.exact *= out.factors.galois;
  return out;
}

bool passes_kstar_test(const RepContext& rep, const FMatrix& A) {
  return maps_into_kernel(rep.alg, A, rep.alg.kstar());
}

AutVeq enumerate_autVeq(const RepContext& rep, const OracleOptions& opts) {
  SearchOptions so;
  so.threads = opts.threads;
  SearchResult found = search_gl3(rep.alg, rep.alg.kstar(), so);
  AutVeq out;
  out.size = found.matrices.size();
  out.representatives = std::move(found.matrices);
  if (opts.recheck_full_kernel) {
    out.full_kernel_agrees = std::all_of(
        out.representatives.begin(), out.representatives.end(),
        [&](const FMatrix& A) { return maps_into_kernel(rep.alg, A, rep.alg.kernel_basis()); });
  }
  return out;
}

AutOrder aut_order_from_oracle(const RepContext& rep, std::uint64_t autVeq_size) {
  const std::uint64_t q = rep.ctx.q();
  AutOrder out;
  out.p = rep.ctx.p();
  out.f = rep.ctx.degree();
  out.q = q;
  out.factors.galois = rep.ctx.degree();
  out.factors.gl2 = gl2_order(q);
  out.factors.q_pow18 = power18(q);
  out.factors.torsion = three_torsion_order(rep.curve);
  const mpz_class numerator = mpz_class(std::to_string(autVeq_size)) * out.factors.gl2 *
                              out.factors.q_pow18;
  const mpz_class qm1(std::to_string(q - 1));
  if (numerator % qm1 != 0) throw std::logic_error("oracle count not divisible by q - 1");
  out.exact = numerator / qm1;
  const std::uint64_t per_scalar = (q - 1) * out.factors.torsion;
  if (autVeq_size % per_scalar != 0) {
    throw std::logic_error("oracle count not divisible by (q - 1)|E[3]|");
  }
  out.factors.gcd_factor = autVeq_size / per_scalar;
  return out;
}

CurveAut cbar_decompose(const RepContext& rep, const FMatrix& A) {
  CurvePoint Q;
  std::vector<FieldElem> omegas = matching_omegas(rep.curve, A, Q);
  if (omegas.size() == 1) return {Q, omegas.front()};
  if (omegas.empty()) throw std::runtime_error("induced curve map is not tau_Q o [omega]");
  if (rep.ctx.degree() != 1) throw std::runtime_error("ambiguous isogeny over an extension");
  // Too few rational points to separate the candidates: redo over F_{p^2}.
  const FieldCtx ext(rep.ctx.p(), 2);
  const Curve E2 = Curve::family(ext, rep.S, embed(rep.ctx, ext, rep.sqrt_S));
  FMatrix A2(ext, 3, 3);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) A2(r, c) = embed(rep.ctx, ext, A(r, c));
  }
  CurvePoint Q2;
  const std::vector<FieldElem> ext_omegas = matching_omegas(E2, A2, Q2);
  std::vector<FieldElem> kept;
  for (const FieldElem& w : omegas) {
    if (std::find(ext_omegas.begin(), ext_omegas.end(), embed(rep.ctx, ext, w)) !=
        ext_omegas.end()) {
      kept.push_back(w);
    }
  }
  if (kept.size() != 1) throw std::runtime_error("isogeny part not determined");
  return {Q, kept.front()};
}

std::optional<FMatrix> lift_isogeny(const RepContext& rep, const FieldElem& omega) {
  const FieldCtx& k = rep.ctx;
  if (k.pow(omega, 4) != k.one()) throw std::invalid_argument("omega is not a fourth root of unity");
  if (k.pow(omega, ceil_four_over(rep.i)) != k.one()) return std::nullopt;
  FMatrix A(k, 3, 3);
  A(0, 0) = k.mul(omega, omega);
  A(1, 1) = k.mul(A(0, 0), omega);
  A(2, 2) = k.one();
  return A;
}

FMatrix lift_translation(const RepContext& rep, const CurvePoint& Q) {
  const FieldCtx& k = rep.ctx;
  const Curve& E = rep.curve;
  if (Q.infinity || !E.contains(Q) || !E.scalar_mul(3, Q).infinity) {
    throw std::invalid_argument("translation lift needs a point of order 3");
  }
  const FieldElem S = E.S();
  const FieldElem a = Q.x;
  const FieldElem b = Q.y;
  const FieldElem denom = k.add(k.mul(S, k.mul(a, a)), k.one());
  if (k.is_zero(denom)) throw std::logic_error("S a^2 + 1 vanishes at a 3-torsion point");
  const FieldElem nu = k.neg(k.div(S, denom));
  const FieldElem two = k.from_int(2);
  const FieldElem aa = k.mul(a, a);
  const FieldElem ab = k.mul(a, b);
  const FieldElem Sab = k.mul(S, ab);
  const FieldElem two_nu = k.mul(two, nu);
  FMatrix A(k, 3, 3);
  A(0, 0) = k.add(Sab, k.mul(two_nu, ab));
  A(0, 1) = k.mul(S, aa);
  A(0, 2) = k.neg(k.mul(k.mul(two_nu, S), k.mul(aa, b)));
  A(1, 0) = k.mul(k.sub(k.mul(k.from_int(-3), S), two_nu), k.mul(b, b));
  A(1, 1) = Sab;
  A(1, 2) = k.mul(k.mul(two_nu, Sab), b);
  A(2, 0) = k.mul(k.sub(k.one(), k.mul(two_nu, aa)), b);
  A(2, 1) = a;
  A(2, 2) = k.mul(k.mul(two_nu, S), k.mul(k.mul(aa, a), b));
  return A;
}

CbarImage image_of_cbar(const RepContext& rep, const AutVeq& oracle) {
  const Curve& E = rep.curve;
  std::set<CurveAut> seen;
  std::uint64_t trivial = 0;
  bool trivial_are_scalars = true;
  const CurveAut id = identity_aut(rep.ctx);
  for (const FMatrix& A : oracle.representatives) {
    const CurveAut g = cbar_decompose(rep, A);
    seen.insert(g);
    if (g == id) {
      ++trivial;
      const bool scalar = A(0, 1) == FieldElem{} && A(0, 2) == FieldElem{} &&
                          A(1, 0) == FieldElem{} && A(1, 2) == FieldElem{} &&
                          A(2, 0) == FieldElem{} && A(2, 1) == FieldElem{} &&
                          A(0, 0) == A(1, 1) && A(1, 1) == A(2, 2);
      if (!scalar) trivial_are_scalars = false;
    }
  }
  CbarImage out;
  out.elements.assign(seen.begin(), seen.end());
  out.size = out.elements.size();
  out.scalar_kernel = trivial_are_scalars && trivial == rep.ctx.q() - 1 &&
                      out.size * (rep.ctx.q() - 1) == oracle.size;
  out.closed = true;
  for (const CurveAut& g : out.elements) {
    for (const CurveAut& h : out.elements) {
      if (!seen.count(compose(E, g, h))) out.closed = false;
    }
  }
  out.translations_in_E3 = std::all_of(out.elements.begin(), out.elements.end(),
                                       [&](const CurveAut& g) {
                                         return E.scalar_mul(3, g.translation).infinity;
                                       });
  return out;
}

std::uint64_t descendants_n11(std::uint64_t p) {
  if (p <= 3 || !is_prime(p)) throw std::invalid_argument("descendants formula needs a prime p > 3");
  const std::uint64_t m = std::gcd(p - 1, std::uint64_t{4});
  const std::uint64_t e = three_torsion_order(Curve::family(make_field(p), 1));
  // p^2 + p + 2 - m + e (p - 5) + 5 m e, every term but -m nonnegative.
  const std::uint64_t num = p * p + p + 2 + e * (p - 5) + 5 * m * e - m;
  if (num % (m * e) != 0) {
    throw std::logic_error("descendants formula is not integral at p = " + std::to_string(p));
  }
  return num / (m * e);
}

}  // namespace hessaut
