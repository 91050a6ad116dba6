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

#include "hessaut/iso.h"

#include <stdexcept>

namespace hessaut {
namespace {

std::optional<FMatrix> certify(const IsoQuery& q, const FMatrix& A) {
  const auto AT = induced_AT(q.src.alg, q.tgt.alg, A);
  if (!AT) return std::nullopt;
  return block_diagonal(q.src.ctx, A, *AT);
}

std::string rule_for(const IsoQuery& q) {
  const FieldCtx& k = q.src.ctx;
  if (k.from_int(q.src.S) != k.from_int(q.tgt.S)) return "none";
  const int i = q.src.i;
  const int j = q.tgt.i;
  const bool same_root = q.src.sqrt_S == q.tgt.sqrt_S;
  const bool has_i4 = k.q() % 4 == 1;
  if (i == 1 && j == 1) return "1";
  if (i == 1 || j == 1) return "none";
  if (i == j) {
    if (same_root) return "1.a";
    return has_i4 ? "1.b" : "none";
  }
  if (!same_root) return "2.a";
  return has_i4 ? "2.b" : "none";
}

}  // namespace

IsoQuery make_iso_query(const FieldCtx& ctx, int i, std::int64_t S, int sign_i, int j,
                        std::int64_t S2, int sign_j) {
  return {make_rep(ctx, i, S, sign_i), make_rep(ctx, j, S2, sign_j)};
}

std::optional<FMatrix> iso_witness_explicit(const IsoQuery& q) {
  const std::string rule = rule_for(q);
  if (rule == "none") throw std::invalid_argument("no isomorphism to witness");
  const FieldCtx& k = q.src.ctx;
  if (rule == "1" || rule == "1.a" || rule == "2.a") {
    return certify(q, FMatrix::identity(k, 3));
  }
  // diag(-1, -+omega, 1) with omega a primitive fourth root of unity.
  for (const FieldElem& w : fourth_roots_of_unity(k)) {
    if (k.mul(w, w) != k.from_int(-1)) continue;
    FMatrix A(k, 3, 3);
    A(0, 0) = k.from_int(-1);
    A(1, 1) = k.neg(w);
    A(2, 2) = k.one();
    if (auto m = certify(q, A)) return m;
  }
  return std::nullopt;
}

IsoVerdict iso_classify(const IsoQuery& q) {
  IsoVerdict out;
  out.rule = rule_for(q);
  out.isomorphic = out.rule != "none";
  if (out.isomorphic) out.witness = iso_witness_explicit(q);
  return out;
}

IsoVerdict iso_classify_twisted(const IsoQuery& q) {
  IsoVerdict out = iso_classify(q);
  if (out.isomorphic) return out;
  const FieldCtx& k = q.src.ctx;
  const FieldElem ratio = k.div(k.from_int(q.src.S), k.from_int(q.tgt.S));
  const std::vector<FieldElem> quartic{k.neg(ratio), k.zero(), k.zero(), k.zero(), k.one()};
  const int i = q.src.i;
  const int j = q.tgt.i;
  if ((i == 1) != (j == 1)) return out;
  for (const FieldElem& e : univariate_roots(k, quartic)) {
    const FieldElem e2 = k.mul(e, e);
    const FieldElem reduced = k.div(q.src.sqrt_S, e2);
    const bool ok = i == 1 || (i == j ? reduced == q.tgt.sqrt_S : reduced == k.neg(q.tgt.sqrt_S));
    if (!ok) continue;
    FMatrix A(k, 3, 3);
    A(0, 0) = e2;
    A(1, 1) = k.mul(e2, e);
    A(2, 2) = k.mul(e2, e2);
    out.isomorphic = true;
    out.rule = "twist";
    out.witness = certify(q, A);
    return out;
  }
  return out;
}

std::optional<FMatrix> iso_oracle(const IsoQuery& q, unsigned threads) {
  SearchOptions opts;
  opts.first_only = true;
  opts.threads = threads;
  const SearchResult found = search_gl3(q.tgt.alg, q.src.alg.kernel_basis(), opts);
  if (found.matrices.empty()) return std::nullopt;
  auto m = certify(q, found.matrices.front());
  if (!m) throw std::logic_error("kernel-compatible matrix failed the bracket check");
  return m;
}

}  // namespace hessaut
