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

#include <set>

namespace hessaut {

HessianRep<FieldCtx> build_B_field(const FieldCtx& ctx, int i, std::int64_t S,
                                   const std::optional<FieldElem>& sqrt_S) {
  const FieldElem s = ctx.from_int(S);
  if (ctx.is_zero(s)) throw std::invalid_argument("the characteristic divides S");
  return build_B(ctx, i, s, sqrt_S);
}

ProjPoint normalize(const FieldCtx& ctx, const ProjPoint& v) {
  for (int k = 2; k >= 0; --k) {
    if (ctx.is_zero(v[k])) continue;
    const FieldElem inv = ctx.inv(v[k]);
    return {ctx.mul(v[0], inv), ctx.mul(v[1], inv), ctx.mul(v[2], inv)};
  }
  throw std::invalid_argument("zero vector is not a projective point");
}

std::vector<ProjPoint> projective_plane(const FieldCtx& ctx) {
  std::vector<ProjPoint> out;
  const auto elems = all_elements(ctx);
  const FieldElem one = ctx.one();
  const FieldElem zero = ctx.zero();
  for (const auto& x : elems) {
    for (const auto& y : elems) out.push_back({x, y, one});
  }
  for (const auto& x : elems) out.push_back({x, one, zero});
  out.push_back({one, zero, zero});
  return out;
}

bool degeneracy_locus_matches(const FieldCtx& ctx, const LinFormMatrix<FieldCtx>& b,
                              const Curve& E) {
  const CubicForm<FieldCtx> d = det_linform(ctx, b);
  std::set<ProjPoint> locus;
  for (const ProjPoint& v : projective_plane(ctx)) {
    if (ctx.is_zero(evaluate(ctx, d, v))) locus.insert(v);
  }
  std::set<ProjPoint> curve;
  for (const CurvePoint& P : E.enumerate_points()) curve.insert(normalize(ctx, E.to_projective(P)));
  return locus == curve;
}

}  // namespace hessaut
