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

#ifndef HESSAUT_FF_H_
#define HESSAUT_FF_H_

// Finite fields F_q, q = p^f with p >= 5 and f <= 4.  Elements are residue
// vectors modulo a fixed monic irreducible polynomial of degree f.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hessaut {

inline constexpr int kMaxExtensionDegree = 4;

// Coefficients of the representative polynomial, low degree first.  Unused
// slots (index >= f) are always zero, so the defaulted comparison is the
// lexicographic order on the coefficient vector.
struct FieldElem {
  std::array<std::uint32_t, kMaxExtensionDegree> c{};

  friend bool operator==(const FieldElem&, const FieldElem&) = default;
  friend auto operator<=>(const FieldElem&, const FieldElem&) = default;
};

class FieldCtx {
 public:
  using Elem = FieldElem;

  // Throws std::invalid_argument unless p is a prime >= 5 and 1 <= f <= 4
  // with p^f < 2^62.
  FieldCtx(std::uint64_t p, int f);

  std::uint32_t p() const { return p_; }
  int degree() const { return f_; }
  std::uint64_t q() const { return q_; }
  // Monic modulus, f + 1 coefficients low degree first.
  std::vector<std::uint32_t> modulus() const;

  Elem zero() const { return {}; }
  Elem one() const { return from_int(1); }
  Elem from_int(std::int64_t v) const;
  // Element with the given low-to-high coefficients (reduced mod p).
  Elem from_coeffs(std::span<const std::int64_t> coeffs) const;
  // The generator class of x in F_p[x]/(modulus).
  Elem generator() const;

  bool is_zero(const Elem& a) const { return a == Elem{}; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool in_prime_field(const Elem& a) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  // Throws std::domain_error on zero.
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  Elem frobenius(const Elem& a) const { return pow(a, p_); }

  // Quadratic character: 0 for zero, otherwise +1 or -1.
  int legendre(const Elem& a) const;

  // {r, -r} with r the lexicographically smaller root; {0, 0} for zero.
  std::optional<std::pair<Elem, Elem>> sqrt(const Elem& a) const;

  // Bijection with [0, q): sum of c_k p^k.
  std::uint64_t index(const Elem& a) const;
  Elem from_index(std::uint64_t n) const;

  // "3" over a prime field; "2+3a+a^2" style otherwise, a the generator.
  std::string render(const Elem& a) const;
  // Residue as a signed integer in (-p/2, p/2] for prime-field elements.
  std::int64_t to_signed(const Elem& a) const;

  friend bool operator==(const FieldCtx& x, const FieldCtx& y) {
    return x.p_ == y.p_ && x.f_ == y.f_;
  }

 private:
  std::uint32_t p_ = 0;
  int f_ = 0;
  std::uint64_t q_ = 0;
  std::array<std::uint32_t, kMaxExtensionDegree + 1> modulus_{};
};

FieldCtx make_field(std::uint64_t p, int f = 1);

bool is_prime(std::uint64_t n);

// All w with w^4 = 1, sorted; the count is gcd(q - 1, 4).
std::vector<FieldElem> fourth_roots_of_unity(const FieldCtx& ctx);

// A primitive 4th root of unity when q = 1 mod 4, the smaller of the two.
std::optional<FieldElem> primitive_fourth_root(const FieldCtx& ctx);

// Distinct roots of the polynomial with low-to-high coefficients, sorted.
// Throws std::invalid_argument for the zero polynomial.
std::vector<FieldElem> univariate_roots(const FieldCtx& ctx,
                                        std::span<const FieldElem> poly);
std::vector<FieldElem> univariate_roots(const FieldCtx& ctx,
                                        std::span<const std::int64_t> poly);

// Every element of the field in index order.  q must be at most 10^7.
std::vector<FieldElem> all_elements(const FieldCtx& ctx);

}  // namespace hessaut

#endif  // HESSAUT_FF_H_
