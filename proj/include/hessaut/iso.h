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

#ifndef HESSAUT_ISO_H_
#define HESSAUT_ISO_H_

// Isomorphism between g_{i,S}(F) and g_{j,S'}(F): the case analysis on
// (i, j, S, S', roots, q mod 4), an exhaustive search for block-diagonal
// witnesses, and closed-form witnesses.

#include <optional>
#include <string>

#include "hessaut/aut.h"

namespace hessaut {

struct IsoQuery {
  RepContext src;
  RepContext tgt;
};

// Both sides over the same field.  Root signs pick +/- the smaller root.
IsoQuery make_iso_query(const FieldCtx& ctx, int i, std::int64_t S, int sign_i, int j,
                        std::int64_t S2, int sign_j);

struct IsoVerdict {
  bool isomorphic = false;
  // "1" (i = j = 1), "1.a", "1.b", "2.a", "2.b" or "none".
  std::string rule = "none";
  // diag(A, A, A_T).
  std::optional<FMatrix> witness;
};

// Verdict from the case analysis; the witness is filled in when a
// closed-form one is available.
IsoVerdict iso_classify(const IsoQuery& q);

// The same case analysis after a twist: isomorphic iff some e in F has
// e^4 = S / S' and the pair (i, S' , sqrtS / e^2), (j, S', sqrtS') passes the
// equal-S rules.  The twist (x, y) -> (e^2 x, e^3 y) of the curves lifts to
// diag(e^2, e^3, e^4) because the embedding puts z = 1/S.  Agrees with
// iso_classify whenever S = S'.  Rule "twist" marks verdicts that need
// S != S'.
IsoVerdict iso_classify_twisted(const IsoQuery& q);

// A in GL_3 with (A (x) A)(ker phi~_src) inside ker phi~_tgt, returned as the
// bracket-checked 9x9 map; nullopt after an exhaustive search.
std::optional<FMatrix> iso_oracle(const IsoQuery& q, unsigned threads = 0);

// Closed-form witness for a positive verdict.  Throws std::invalid_argument
// when the classifier says the algebras are not isomorphic.
std::optional<FMatrix> iso_witness_explicit(const IsoQuery& q);

}  // namespace hessaut

#endif  // HESSAUT_ISO_H_
