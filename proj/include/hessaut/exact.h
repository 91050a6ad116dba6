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

#ifndef HESSAUT_EXACT_H_
#define HESSAUT_EXACT_H_

// Exact arithmetic in Q(s), s^2 = S for a nonzero integer S.  When S is a
// perfect square, s is the positive integer root and the ring is Q.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hessaut/ff.h"

namespace hessaut {

// a + b*s.
struct ExactCoef {
  mpq_class a;
  mpq_class b;

  friend bool operator==(const ExactCoef& x, const ExactCoef& y) {
    return x.a == y.a && x.b == y.b;
  }
};

class SqrtRing {
 public:
  using Elem = ExactCoef;

  // Throws std::invalid_argument for S = 0.
  explicit SqrtRing(std::int64_t S);

  std::int64_t S() const { return S_; }
  // Whether S is a perfect square, so that s is rational.
  bool rational_root() const { return root_.has_value(); }

  Elem zero() const { return {}; }
  Elem one() const { return {mpq_class(1), mpq_class(0)}; }
  Elem from_int(std::int64_t v) const { return {mpq_class(static_cast<long>(v)), mpq_class(0)}; }
  Elem from_rational(const mpq_class& v) const { return {v, mpq_class(0)}; }
  // The fixed root s of S.
  Elem sqrt_S() const;

  bool is_zero(const Elem& x) const { return x.a == 0 && x.b == 0; }
  bool eq(const Elem& x, const Elem& y) const { return x == y; }
  bool is_rational(const Elem& x) const { return x.b == 0; }

  Elem add(const Elem& x, const Elem& y) const { return {x.a + y.a, x.b + y.b}; }
  Elem sub(const Elem& x, const Elem& y) const { return {x.a - y.a, x.b - y.b}; }
  Elem neg(const Elem& x) const { return {-x.a, -x.b}; }
  Elem mul(const Elem& x, const Elem& y) const;
  // Throws std::domain_error on zero.
  Elem inv(const Elem& x) const;
  Elem div(const Elem& x, const Elem& y) const { return mul(x, inv(y)); }
  Elem pow(Elem x, unsigned e) const;

  // Some root r with r^2 = x, if one exists in the ring.
  std::optional<Elem> sqrt(const Elem& x) const;

  // Sign of the real number obtained by mapping s to +sqrt(S); S > 0 only.
  int real_sign(const Elem& x) const;
  // Total order: by real value when S > 0, else lexicographic on (a, b).
  bool greater(const Elem& x, const Elem& y) const;

  // Denominators of a and b divide a power of S.
  bool is_S_integral(const Elem& x) const;

  // "5308416", "-1/2", "72*sqrt(3)", "1+2*sqrt(5)".
  std::string render(const Elem& x) const;

 private:
  std::int64_t S_;
  std::optional<mpz_class> root_;
};

// Distinct roots in the ring of the polynomial with low-to-high coefficients,
// ordered by SqrtRing::greater descending.  Handles degree <= 2 in general
// and degree 3 with rational coefficients; throws std::domain_error
// ("unsupported") otherwise and std::invalid_argument for zero.
std::vector<ExactCoef> exact_roots(const SqrtRing& ring, std::span<const ExactCoef> poly);

// Image of x in a finite field where S has the chosen root sqrt_s.  Throws
// std::domain_error if a denominator vanishes mod p.
FieldElem reduce(const FieldCtx& ctx, const ExactCoef& x, const FieldElem& sqrt_s);

}  // namespace hessaut

#endif  // HESSAUT_EXACT_H_
