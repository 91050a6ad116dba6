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

#include "hessaut/curve.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hessaut/forms.h"

namespace hessaut {
namespace {

// Points (a, b) with b^2 = a^3 + c a and quartic(a) = 0.
std::vector<CurvePoint> points_over_quartic_roots(const FieldCtx& ctx, const FieldElem& c,
                                                  const std::vector<FieldElem>& quartic) {
  std::vector<CurvePoint> out;
  for (const FieldElem& a : univariate_roots(ctx, quartic)) {
    const FieldElem rhs = ctx.add(ctx.mul(ctx.mul(a, a), a), ctx.mul(c, a));
    if (auto r = ctx.sqrt(rhs)) {
      out.push_back(CurvePoint::affine(a, r->first));
      if (r->second != r->first) out.push_back(CurvePoint::affine(a, r->second));
    }
  }
  return out;
}

}  // namespace

Curve Curve::family(const FieldCtx& ctx, std::int64_t S, std::optional<FieldElem> sqrt_s) {
  const FieldElem s = ctx.from_int(S);
  if (ctx.is_zero(s)) throw std::invalid_argument("the characteristic divides S");
  Curve E(ctx);
  E.S_ = s;
  E.S_int_ = S;
  E.S_inv_ = ctx.inv(s);
  E.a4_ = ctx.neg(E.S_inv_);
  if (sqrt_s) {
    if (ctx.mul(*sqrt_s, *sqrt_s) != s) throw std::invalid_argument("sqrtS does not square to S");
    E.sqrt_s_ = sqrt_s;
  } else if (auto r = ctx.sqrt(s)) {
    E.sqrt_s_ = r->first;
  }
  return E;
}

Curve Curve::weierstrass(const FieldCtx& ctx, const FieldElem& a4, const FieldElem& a6) {
  // 4 a4^3 + 27 a6^2 != 0.
  const FieldElem disc = ctx.add(ctx.mul(ctx.from_int(4), ctx.pow(a4, 3)),
                                 ctx.mul(ctx.from_int(27), ctx.mul(a6, a6)));
  if (ctx.is_zero(disc)) throw std::invalid_argument("singular Weierstrass curve");
  Curve E(ctx);
  E.a4_ = a4;
  E.a6_ = a6;
  return E;
}

const FieldElem& Curve::S() const {
  if (!S_) throw std::logic_error("curve is not of the form E_S");
  return *S_;
}

const FieldElem& Curve::S_inv() const {
  if (!S_) throw std::logic_error("curve is not of the form E_S");
  return S_inv_;
}

bool Curve::contains(const CurvePoint& P) const {
  if (P.infinity) return true;
  const FieldElem lhs = ctx_.mul(P.y, P.y);
  const FieldElem rhs =
      ctx_.add(ctx_.mul(ctx_.add(ctx_.mul(P.x, P.x), a4_), P.x), a6_);
  return lhs == rhs;
}

CurvePoint Curve::neg(const CurvePoint& P) const {
  if (P.infinity) return P;
  return CurvePoint::affine(P.x, ctx_.neg(P.y));
}

CurvePoint Curve::add(const CurvePoint& P, const CurvePoint& Q) const {
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  FieldElem lambda;
  if (P.x == Q.x) {
    if (ctx_.is_zero(ctx_.add(P.y, Q.y))) return CurvePoint::at_infinity();
    const FieldElem num = ctx_.add(ctx_.mul(ctx_.from_int(3), ctx_.mul(P.x, P.x)), a4_);
    lambda = ctx_.div(num, ctx_.add(P.y, P.y));
  } else {
    lambda = ctx_.div(ctx_.sub(Q.y, P.y), ctx_.sub(Q.x, P.x));
  }
  const FieldElem x3 = ctx_.sub(ctx_.sub(ctx_.mul(lambda, lambda), P.x), Q.x);
  const FieldElem y3 = ctx_.sub(ctx_.mul(lambda, ctx_.sub(P.x, x3)), P.y);
  return CurvePoint::affine(x3, y3);
}

CurvePoint Curve::scalar_mul(std::int64_t n, const CurvePoint& P) const {
  CurvePoint base = n < 0 ? neg(P) : P;
  std::uint64_t k = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  CurvePoint acc = CurvePoint::at_infinity();
  while (k > 0) {
    if (k & 1U) acc = add(acc, base);
    k >>= 1U;
    if (k > 0) base = add(base, base);
  }
  return acc;
}

std::vector<CurvePoint> Curve::enumerate_points() const {
  if (ctx_.q() > 10000000) throw std::invalid_argument("field too large to enumerate");
  std::vector<CurvePoint> out{CurvePoint::at_infinity()};
  for (std::uint64_t n = 0; n < ctx_.q(); ++n) {
    const FieldElem x = ctx_.from_index(n);
    const FieldElem rhs = ctx_.add(ctx_.mul(ctx_.add(ctx_.mul(x, x), a4_), x), a6_);
    if (auto r = ctx_.sqrt(rhs)) {
      out.push_back(CurvePoint::affine(x, r->first));
      if (r->second != r->first) out.push_back(CurvePoint::affine(x, r->second));
    }
  }
  std::sort(out.begin() + 1, out.end());
  return out;
}

std::vector<CurvePoint> Curve::torsion_points(int n) const {
  std::vector<CurvePoint> out;
  for (const CurvePoint& P : enumerate_points()) {
    if (scalar_mul(n, P).infinity) out.push_back(P);
  }
  return out;
}

ProjPoint Curve::to_projective(const CurvePoint& P) const {
  if (P.infinity) return {ctx_.zero(), ctx_.one(), ctx_.zero()};
  return {P.x, P.y, S_inv()};
}

FieldElem Curve::projective_equation(const ProjPoint& v) const {
  const FieldCtx& k = ctx_;
  const FieldElem x3 = k.mul(k.mul(v[0], v[0]), v[0]);
  const FieldElem xz2 = k.mul(v[0], k.mul(v[2], v[2]));
  const FieldElem y2z = k.mul(k.mul(v[1], v[1]), v[2]);
  return k.sub(x3, k.mul(S(), k.add(xz2, y2z)));
}

std::optional<CurvePoint> Curve::from_projective(const ProjPoint& v) const {
  if (!ctx_.is_zero(projective_equation(v))) return std::nullopt;
  if (ctx_.is_zero(v[2])) {
    // On the curve z = 0 forces x = 0, the point O.
    if (ctx_.is_zero(v[1])) return std::nullopt;
    return CurvePoint::at_infinity();
  }
  const FieldElem scale = ctx_.div(S_inv(), v[2]);
  return CurvePoint::affine(ctx_.mul(v[0], scale), ctx_.mul(v[1], scale));
}

std::vector<CurvePoint> Curve::two_torsion_in_order() const {
  std::vector<CurvePoint> out{CurvePoint::at_infinity(),
                              CurvePoint::affine(ctx_.zero(), ctx_.zero())};
  if (sqrt_s_) {
    const FieldElem r = ctx_.inv(*sqrt_s_);
    out.push_back(CurvePoint::affine(r, ctx_.zero()));
    out.push_back(CurvePoint::affine(ctx_.neg(r), ctx_.zero()));
  }
  return out;
}

std::uint64_t three_torsion_via_quartic(const Curve& E) {
  const FieldCtx& k = E.ctx();
  const FieldElem S = E.S();
  // 3 S^2 a^4 - 6 S a^2 - 1.
  const std::vector<FieldElem> quartic{k.from_int(-1), k.zero(), k.mul(k.from_int(-6), S),
                                       k.zero(), k.mul(k.from_int(3), k.mul(S, S))};
  return 1 + points_over_quartic_roots(k, k.neg(E.S_inv()), quartic).size();
}

std::vector<CurvePoint> flex_points(const Curve& E) {
  const FieldCtx& k = E.ctx();
  CubicForm<FieldCtx> f;
  f[{3, 0, 0}] = k.one();
  f[{1, 0, 2}] = k.neg(E.S());
  f[{0, 2, 1}] = k.neg(E.S());
  const CubicForm<FieldCtx> h = hessian_det(k, f);
  std::vector<CurvePoint> out;
  for (const CurvePoint& P : E.enumerate_points()) {
    if (k.is_zero(evaluate(k, h, E.to_projective(P)))) out.push_back(P);
  }
  return out;
}

CurvePoint apply(const Curve& E, const CurveAut& g, const CurvePoint& P) {
  const FieldCtx& k = E.ctx();
  CurvePoint image = P;
  if (!P.infinity) {
    const FieldElem w2 = k.mul(g.omega, g.omega);
    image = CurvePoint::affine(k.mul(w2, P.x), k.mul(k.mul(w2, g.omega), P.y));
  }
  return E.add(g.translation, image);
}

CurveAut compose(const Curve& E, const CurveAut& g, const CurveAut& h) {
  // Q1 + w1 (Q2 + w2 P) = (Q1 + w1 Q2) + w1 w2 P.
  const CurveAut rot{CurvePoint::at_infinity(), g.omega};
  return {E.add(g.translation, apply(E, rot, h.translation)), E.ctx().mul(g.omega, h.omega)};
}

CurveAut identity_aut(const FieldCtx& ctx) { return {CurvePoint::at_infinity(), ctx.one()}; }

std::vector<CurveAut> aut_O(const Curve& E) {
  std::vector<CurveAut> out;
  for (const FieldElem& w : fourth_roots_of_unity(E.ctx())) {
    out.push_back({CurvePoint::at_infinity(), w});
  }
  return out;
}

TorsionSetSizes torsion_set_bijections(const Curve& E) {
  const FieldCtx& k = E.ctx();
  const FieldElem S = E.S();
  std::optional<FieldElem> eps;
  for (const FieldElem& x : all_elements(k)) {
    if (k.pow(x, 4) == S) {
      eps = x;
      break;
    }
  }
  if (!eps) throw std::invalid_argument("S is not a fourth power in the field");

  const FieldElem m1 = k.from_int(-1);
  const auto s1S = points_over_quartic_roots(
      k, k.neg(E.S_inv()),
      {m1, k.zero(), k.mul(k.from_int(-6), S), k.zero(), k.mul(k.from_int(3), k.mul(S, S))});
  const auto s1 = points_over_quartic_roots(
      k, m1, {m1, k.zero(), k.from_int(-6), k.zero(), k.from_int(3)});
  const auto s0 = points_over_quartic_roots(
      k, m1, {k.from_int(-3), k.zero(), k.from_int(6), k.zero(), k.one()});

  TorsionSetSizes out{s0.size(), s1.size(), s1S.size(), false};

  // S_{1,S} -> S_1 by (a, b) -> (e^2 a, e^3 b).
  const FieldElem e2 = k.mul(*eps, *eps);
  const FieldElem e3 = k.mul(e2, *eps);
  std::set<CurvePoint> s1_set(s1.begin(), s1.end());
  std::set<CurvePoint> image;
  for (const CurvePoint& P : s1S) image.insert(CurvePoint::affine(k.mul(e2, P.x), k.mul(e3, P.y)));
  bool ok = image == s1_set;

  // S_1 -> S_2 by (a, b) -> (-1/a, b/a), inverted by (a, b) -> (-1/a, -b/a).
  for (const CurvePoint& P : s1) {
    const FieldElem ia = k.inv(P.x);
    const FieldElem a = k.neg(ia);
    const FieldElem b = k.mul(P.y, ia);
    const FieldElem eq1 = k.add(k.sub(k.one(), k.mul(a, a)), k.mul(a, k.mul(b, b)));
    const FieldElem a2 = k.mul(a, a);
    const FieldElem eq2 = k.add(k.add(k.mul(a2, a2), k.mul(k.from_int(6), a2)), k.from_int(-3));
    const FieldElem inv_a = k.inv(a);
    const CurvePoint back = CurvePoint::affine(k.neg(inv_a), k.neg(k.mul(b, inv_a)));
    ok = ok && k.is_zero(eq1) && k.is_zero(eq2) && back == P;
  }
  out.maps_verified = ok;
  return out;
}

bool within_hasse(std::uint64_t q, std::uint64_t n) {
  const long double d = static_cast<long double>(n) - static_cast<long double>(q) - 1.0L;
  return d * d <= 4.0L * static_cast<long double>(q);
}

}  // namespace hessaut
