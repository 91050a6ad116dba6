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

#ifndef HESSAUT_DETREP_H_
#define HESSAUT_DETREP_H_

// The cubic f_S = y1^3 - S y1 y3^2 - S y2^2 y3, its three symmetric
// determinantal representations B_{i,S}, and the Hessian equation
// a f = Hes(b f + Hes f).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "hessaut/curve.h"
#include "hessaut/exact.h"
#include "hessaut/ff.h"
#include "hessaut/forms.h"
#include "hessaut/upoly.h"

namespace hessaut {

template <class R>
CubicForm<R> build_fS(const R& ring, const typename R::Elem& S) {
  if (ring.is_zero(S)) throw std::invalid_argument("S must be nonzero");
  CubicForm<R> f;
  f[{3, 0, 0}] = ring.one();
  f[{1, 0, 2}] = ring.neg(S);
  f[{0, 2, 1}] = ring.neg(S);
  return f;
}

template <class R>
struct HessianRep {
  int i = 1;
  typename R::Elem S{};
  std::optional<typename R::Elem> sqrt_S;
  LinFormMatrix<R> B;
};

// Entries as written out for B_{i,S}; B_3 is B_2 with the root negated.
template <class R>
LinFormMatrix<R> closed_form_B(const R& ring, int i, const typename R::Elem& S,
                               const typename R::Elem& s) {
  using E = typename R::Elem;
  const E z = ring.zero();
  const E one = ring.one();
  const E m1 = ring.neg(one);
  LinFormMatrix<R> b;
  auto put = [&](int r, int c, E c1, E c2, E c3) {
    b.set_entry(r, c, LinForm<R>{{c1, c2, c3}});
    b.set_entry(c, r, LinForm<R>{{c1, c2, c3}});
  };
  if (i == 1) {
    put(0, 0, z, z, one);
    put(0, 1, z, m1, z);
    put(0, 2, one, z, z);
    put(1, 1, m1, z, z);
    put(1, 2, z, z, z);
    put(2, 2, z, z, S);
    return b;
  }
  const E r = i == 2 ? s : ring.neg(s);
  const E mr = ring.neg(r);
  put(0, 0, ring.mul(ring.from_int(3), ring.inv(r)), z, one);
  put(0, 1, z, m1, z);
  put(0, 2, one, z, mr);
  put(1, 1, m1, z, mr);
  put(1, 2, z, mr, z);
  put(2, 2, mr, z, S);
  return b;
}

// HM(c f_S + Hes f_S) / (48 S^2) with c = 0, +24 S s, -24 S s for i = 1, 2, 3.
template <class R>
LinFormMatrix<R> hessian_formula_B(const R& ring, int i, const typename R::Elem& S,
                                   const typename R::Elem& s) {
  const CubicForm<R> f = build_fS(ring, S);
  CubicForm<R> g = hessian_det(ring, f);
  if (i != 1) {
    auto c = ring.mul(ring.from_int(24), ring.mul(S, s));
    if (i == 3) c = ring.neg(c);
    g = add(ring, g, scale(ring, c, f));
  }
  LinFormMatrix<R> h = hessian_matrix(ring, g);
  const auto d = ring.inv(ring.mul(ring.from_int(48), ring.mul(S, S)));
  for (auto& m : h.coef) {
    for (auto& row : m) {
      for (auto& x : row) x = ring.mul(x, d);
    }
  }
  return h;
}

// Builds B_{i,S} both ways and insists they agree.  The root is ignored for
// i = 1 and required (with square S) otherwise.
template <class R>
HessianRep<R> build_B(const R& ring, int i, const typename R::Elem& S,
                      const std::optional<typename R::Elem>& sqrt_S) {
  if (i < 1 || i > 3) throw std::invalid_argument("representation index must be 1, 2 or 3");
  if (ring.is_zero(S)) throw std::invalid_argument("S must be nonzero");
  if (i != 1 && !sqrt_S) throw std::invalid_argument("a square root of S is required");
  if (sqrt_S && !ring.eq(ring.mul(*sqrt_S, *sqrt_S), S)) {
    throw std::invalid_argument("the given root does not square to S");
  }
  const auto s = sqrt_S.value_or(ring.one());
  HessianRep<R> rep{i, S, sqrt_S, closed_form_B(ring, i, S, s)};
  if (!(rep.B == hessian_formula_B(ring, i, S, s))) {
    throw std::logic_error("closed form and Hessian construction disagree");
  }
  return rep;
}

struct DetReport {
  bool det_ok = false;
  std::optional<std::string> differing_monomial;
  bool symmetric = false;
  bool self_dual = false;
};

// det B_{1,S} = f_S and det B_{2,S} = det B_{3,S} = 4 f_S.
template <class R>
DetReport verify_det_identities(const R& ring, const HessianRep<R>& rep) {
  DetReport out;
  CubicForm<R> want = build_fS(ring, rep.S);
  if (rep.i != 1) want = scale(ring, ring.from_int(4), want);
  const auto diff = first_difference(ring, det_linform(ring, rep.B), want);
  out.det_ok = !diff.has_value();
  if (diff) out.differing_monomial = monomial_name(kCubicMonomials[*diff]);
  out.symmetric = is_symmetric(rep.B);
  out.self_dual = dual(rep.B) == rep.B;
  return out;
}

template <class R>
struct HessianSolution {
  typename R::Elem alpha;
  typename R::Elem beta;
};

template <class R>
struct HessianSolveResult {
  bool smooth = false;
  std::vector<HessianSolution<R>> solutions;
  // Fewer than three solutions exist in the ring.
  bool partial = false;
};

namespace detrep_detail {

template <class R>
std::vector<typename R::Elem> ring_roots(const R& ring, const upoly::Poly<R>& g) {
  if constexpr (std::is_same_v<R, SqrtRing>) {
    return exact_roots(ring, g);
  } else {
    return univariate_roots(ring, g);
  }
}

}  // namespace detrep_detail

// All (a, b) with a f = Hes(b f + Hes f).  The coefficients of
// Hes(b f + Hes f) are cubics in b; interpolating at b = 0..3 recovers them
// and proportionality to f cuts out b.  Solutions list b = 0 first, then
// `preferred` when present, then the rest (descending real value for the
// exact ring, lexicographic over finite fields).
template <class R>
HessianSolveResult<R> hessian_equation_solve(
    const R& ring, const CubicForm<R>& f,
    const std::optional<typename R::Elem>& preferred = std::nullopt) {
  using E = typename R::Elem;
  HessianSolveResult<R> out;
  out.smooth = is_smooth(ring, f);
  if (!out.smooth) return out;

  const CubicForm<R> h = hessian_det(ring, f);
  std::array<CubicForm<R>, 4> vals;
  for (int t = 0; t < 4; ++t) {
    vals[t] = hessian_det(ring, add(ring, scale(ring, ring.from_int(t), f), h));
  }
  // Inverse Vandermonde on nodes 0, 1, 2, 3.
  const E inv2 = ring.inv(ring.from_int(2));
  const E inv6 = ring.inv(ring.from_int(6));
  auto combo = [&](int k, std::array<int, 4> w) {
    E acc = ring.zero();
    for (int t = 0; t < 4; ++t) acc = ring.add(acc, ring.mul(ring.from_int(w[t]), vals[t].c[k]));
    return acc;
  };
  std::array<upoly::Poly<R>, 10> coeff_poly;
  for (int k = 0; k < 10; ++k) {
    coeff_poly[k] = {vals[0].c[k], ring.mul(combo(k, {-11, 18, -9, 2}), inv6),
                     ring.mul(combo(k, {2, -5, 4, -1}), inv2),
                     ring.mul(combo(k, {-1, 3, -3, 1}), inv6)};
    upoly::trim(ring, coeff_poly[k]);
  }

  int pivot = cubic_index(Exponent{3, 0, 0});
  if (ring.is_zero(f.c[pivot])) {
    pivot = 0;
    while (ring.is_zero(f.c[pivot])) ++pivot;
  }
  upoly::Poly<R> g;
  for (int k = 0; k < 10; ++k) {
    auto c = upoly::sub(ring, upoly::scale(ring, f.c[pivot], coeff_poly[k]),
                        upoly::scale(ring, f.c[k], coeff_poly[pivot]));
    g = upoly::gcd(ring, g, c);
  }
  if (g.empty()) throw std::logic_error("Hessian equation degenerate for every beta");

  std::vector<E> betas = detrep_detail::ring_roots(ring, g);
  std::stable_partition(betas.begin(), betas.end(), [&](const E& b) { return ring.is_zero(b); });
  if (preferred) {
    auto it = std::find(betas.begin(), betas.end(), *preferred);
    if (it != betas.end()) {
      const auto first_nonzero = std::find_if(betas.begin(), betas.end(),
                                              [&](const E& b) { return !ring.is_zero(b); });
      if (first_nonzero != betas.end() && it > first_nonzero) std::rotate(first_nonzero, it, it + 1);
    }
  }
  for (const E& b : betas) {
    const E alpha = ring.div(upoly::eval(ring, coeff_poly[pivot], b), f.c[pivot]);
    const CubicForm<R> rhs = hessian_det(ring, add(ring, scale(ring, b, f), h));
    if (is_zero_form(ring, sub(ring, scale(ring, alpha, f), rhs))) {
      out.solutions.push_back({alpha, b});
    }
  }
  out.partial = out.solutions.size() < 3;
  return out;
}

// Field image of B_{i,S} for an integer S and a root in the field.
HessianRep<FieldCtx> build_B_field(const FieldCtx& ctx, int i, std::int64_t S,
                                   const std::optional<FieldElem>& sqrt_S);

// Projective zero set of det B equals the curve's point set.
bool degeneracy_locus_matches(const FieldCtx& ctx, const LinFormMatrix<FieldCtx>& b,
                              const Curve& E);

// Canonical representatives of P^2(F_q): last nonzero coordinate equal to 1.
std::vector<ProjPoint> projective_plane(const FieldCtx& ctx);
ProjPoint normalize(const FieldCtx& ctx, const ProjPoint& v);

}  // namespace hessaut

#endif  // HESSAUT_DETREP_H_
