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

#include <stdexcept>

namespace hessaut {

std::string monomial_name(const Exponent& e) {
  std::string out;
  for (int v = 0; v < 3; ++v) {
    if (e[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += "y" + std::to_string(v + 1);
    if (e[v] > 1) out += "^" + std::to_string(e[v]);
  }
  return out.empty() ? "1" : out;
}

RankProfile rank_profile(const FieldCtx& ctx, const LinFormMatrix<FieldCtx>& b) {
  const std::uint64_t q = ctx.q();
  if (q * q * q > 20000000ULL) throw std::invalid_argument("field too large for a full rank scan");
  const CubicForm<FieldCtx> d = det_linform(ctx, b);
  RankProfile prof;
  for (std::uint64_t n0 = 0; n0 < q; ++n0) {
    for (std::uint64_t n1 = 0; n1 < q; ++n1) {
      for (std::uint64_t n2 = 0; n2 < q; ++n2) {
        const std::array<FieldElem, 3> u{ctx.from_index(n0), ctx.from_index(n1),
                                         ctx.from_index(n2)};
        const Matrix<FieldCtx> m = evaluate(ctx, b, u);
        const int r = static_cast<int>(rank(ctx, m));
        const FieldElem dv = evaluate(ctx, d, u);
        if (!(det(ctx, m) == dv)) ++prof.det_mismatches;
        ++prof.histogram[r];
        const bool is_origin = n0 == 0 && n1 == 0 && n2 == 0;
        const bool on_locus = ctx.is_zero(dv);
        const int expected = is_origin ? 0 : (on_locus ? 2 : 3);
        if (r != expected) {
          ++prof.violations;
          if (prof.examples.size() < 8) prof.examples.push_back({{n0, n1, n2}, r, on_locus});
        }
      }
    }
  }
  return prof;
}

}  // namespace hessaut
