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

#ifndef HESSAUT_CURVE_H_
#define HESSAUT_CURVE_H_

// The curves E_S : y^2 = x^3 - S^{-1} x over F_q, embedded in the plane as
// x^3 - S x z^2 - S y^2 z = 0 via (x, y) -> (x : y : S^{-1}).  General short
// Weierstrass curves are accepted for point counting only.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "hessaut/ff.h"

namespace hessaut {

struct CurvePoint {
  bool infinity = true;
  FieldElem x{};
  FieldElem y{};

  static CurvePoint at_infinity() { return {}; }
  static CurvePoint affine(const FieldElem& x, const FieldElem& y) { return {false, x, y}; }

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
  friend auto operator<=>(const CurvePoint&, const CurvePoint&) = default;
};

using ProjPoint = std::array<FieldElem, 3>;

class Curve {
 public:
  // E_S.  Throws std::invalid_argument when p divides S.  The fixed square
  // root of S defaults to the smaller root in the field, if any.
  static Curve family(const FieldCtx& ctx, std::int64_t S,
                      std::optional<FieldElem> sqrt_s = std::nullopt);
  // y^2 = x^3 + a4 x + a6; throws on a singular curve.
  static Curve weierstrass(const FieldCtx& ctx, const FieldElem& a4, const FieldElem& a6);

  const FieldCtx& ctx() const { return ctx_; }
  bool in_family() const { return S_.has_value(); }
  std::int64_t S_int() const { return S_int_; }
  // Throw std::logic_error outside the family.
  const FieldElem& S() const;
  const FieldElem& S_inv() const;
  const std::optional<FieldElem>& sqrt_S() const { return sqrt_s_; }
  const FieldElem& a4() const { return a4_; }
  const FieldElem& a6() const { return a6_; }

  bool contains(const CurvePoint& P) const;
  CurvePoint add(const CurvePoint& P, const CurvePoint& Q) const;
  CurvePoint neg(const CurvePoint& P) const;
  CurvePoint scalar_mul(std::int64_t n, const CurvePoint& P) const;

  // Sorted, O first.  q must be at most 10^7.
  std::vector<CurvePoint> enumerate_points() const;
  std::vector<CurvePoint> torsion_points(int n) const;
  std::uint64_t torsion_count(int n) const { return torsion_points(n).size(); }

  // Family only.
  ProjPoint to_projective(const CurvePoint& P) const;
  // Rescales to z = S^{-1}; nullopt when the point is off the curve.
  std::optional<CurvePoint> from_projective(const ProjPoint& v) const;
  // Value of x^3 - S x z^2 - S y^2 z.
  FieldElem projective_equation(const ProjPoint& v) const;

  // Family only: O, P1 = (0, 0), P2 = (1/sqrtS, 0), P3 = (-1/sqrtS, 0); only
  // the points defined over the field are listed.
  std::vector<CurvePoint> two_torsion_in_order() const;

 private:
  Curve(const FieldCtx& ctx) : ctx_(ctx) {}

  FieldCtx ctx_;
  FieldElem a4_{};
  FieldElem a6_{};
  std::optional<FieldElem> S_;
  FieldElem S_inv_{};
  std::int64_t S_int_ = 0;
  std::optional<FieldElem> sqrt_s_;
};

// 1 + #{(a, b) on E : 3 S^2 a^4 - 6 S a^2 - 1 = 0}.
std::uint64_t three_torsion_via_quartic(const Curve& E);

// Curve points at which the Hessian of x^3 - S x z^2 - S y^2 z vanishes.
std::vector<CurvePoint> flex_points(const Curve& E);

// tau_Q composed with (x, y) -> (w^2 x, w^3 y).
struct CurveAut {
  CurvePoint translation;
  FieldElem omega;

  friend bool operator==(const CurveAut&, const CurveAut&) = default;
  friend auto operator<=>(const CurveAut&, const CurveAut&) = default;
};

CurvePoint apply(const Curve& E, const CurveAut& g, const CurvePoint& P);
// The map (g o h).
CurveAut compose(const Curve& E, const CurveAut& g, const CurveAut& h);
CurveAut identity_aut(const FieldCtx& ctx);

// One isogeny per fourth root of unity, in the order of fourth_roots_of_unity.
std::vector<CurveAut> aut_O(const Curve& E);

struct TorsionSetSizes {
  std::uint64_t s0 = 0;
  std::uint64_t s1 = 0;
  std::uint64_t s1S = 0;
  // The maps S_{1,S} -> S_1 (isogeny) and S_1 -> S_2 -> S_1 are bijections.
  bool maps_verified = false;
};

// Requires S to be a fourth power in the field (std::invalid_argument).
TorsionSetSizes torsion_set_bijections(const Curve& E);

// (N - q - 1)^2 <= 4 q.
bool within_hasse(std::uint64_t q, std::uint64_t n);

}  // namespace hessaut

#endif  // HESSAUT_CURVE_H_
