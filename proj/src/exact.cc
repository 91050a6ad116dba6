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

#include "hessaut/exact.h"

#include <algorithm>
#include <stdexcept>

#include "hessaut/upoly.h"

namespace hessaut {
namespace {

int sgn(const mpq_class& x) { return ::sgn(x); }
int sgn(const mpz_class& x) { return ::sgn(x); }

std::optional<mpq_class> rational_sqrt(const mpq_class& x) {
  if (sgn(x) < 0) return std::nullopt;
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpq_class r(sqrt(num), sqrt(den));
  r.canonicalize();
  return r;
}

mpz_class eval_int(const std::vector<mpz_class>& c, const mpz_class& t) {
  mpz_class acc = 0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * t + c[k];
  return acc;
}

// Integer root of a function monotone on [lo, hi], if any.
std::optional<mpz_class> bisect(const std::vector<mpz_class>& c, mpz_class lo, mpz_class hi) {
  if (lo > hi) return std::nullopt;
  const int slo = sgn(eval_int(c, lo));
  const int shi = sgn(eval_int(c, hi));
  if (slo == 0) return lo;
  if (shi == 0) return hi;
  if (slo == shi) return std::nullopt;
  while (hi - lo > 1) {
    mpz_class mid;
    mpz_fdiv_q_2exp(mid.get_mpz_t(), mpz_class(lo + hi).get_mpz_t(), 1);
    const int sm = sgn(eval_int(c, mid));
    if (sm == 0) return mid;
    if (sm == slo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::nullopt;
}

mpz_class floor_div(const mpz_class& a, long b) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), mpz_class(b).get_mpz_t());
  return r;
}

// All integer roots of the monic cubic t^3 + c2 t^2 + c1 t + c0.
std::vector<mpz_class> integer_roots_monic_cubic(const std::vector<mpz_class>& c) {
  mpz_class bound = 1;
  for (int k = 0; k < 3; ++k) bound = std::max(bound, mpz_class(abs(c[k]) + 1));
  std::vector<mpz_class> roots;
  auto consider = [&](const std::optional<mpz_class>& t) {
    if (t && std::find(roots.begin(), roots.end(), *t) == roots.end()) roots.push_back(*t);
  };
  // Critical points of the cubic are (-c2 +- sqrt(c2^2 - 3 c1)) / 3.
  const mpz_class disc = c[2] * c[2] - 3 * c[1];
  if (sgn(disc) <= 0) {
    consider(bisect(c, -bound, bound));
    return roots;
  }
  const mpz_class r = sqrt(disc);
  const mpz_class k1 = floor_div(-c[2] - r, 3);
  const mpz_class k2 = floor_div(-c[2] + r, 3);
  for (const mpz_class& k : {k1, k2}) {
    for (mpz_class t = k - 2; t <= k + 2; ++t) {
      if (sgn(eval_int(c, t)) == 0) consider(t);
    }
  }
  consider(bisect(c, -bound, k1 - 3));
  consider(bisect(c, k1 + 3, k2 - 3));
  consider(bisect(c, k2 + 3, bound));
  return roots;
}

std::vector<ExactCoef> quadratic_roots(const SqrtRing& ring, const ExactCoef& c0,
                                       const ExactCoef& c1, const ExactCoef& c2) {
  const auto disc = ring.sub(ring.mul(c1, c1), ring.mul(ring.from_int(4), ring.mul(c0, c2)));
  const auto r = ring.sqrt(disc);
  if (!r) return {};
  const auto denom = ring.inv(ring.mul(ring.from_int(2), c2));
  std::vector<ExactCoef> out{ring.mul(ring.sub(*r, c1), denom)};
  if (!ring.is_zero(*r)) out.push_back(ring.mul(ring.sub(ring.neg(*r), c1), denom));
  return out;
}

}  // namespace

SqrtRing::SqrtRing(std::int64_t S) : S_(S) {
  if (S == 0) throw std::invalid_argument("S must be nonzero");
  if (S > 0) {
    const mpz_class z(static_cast<long>(S));
    if (mpz_perfect_square_p(z.get_mpz_t())) root_ = ::sqrt(z);
  }
}

ExactCoef SqrtRing::sqrt_S() const {
  if (root_) return {mpq_class(*root_), mpq_class(0)};
  return {mpq_class(0), mpq_class(1)};
}

ExactCoef SqrtRing::mul(const Elem& x, const Elem& y) const {
  const mpq_class S(static_cast<long>(S_));
  return {x.a * y.a + S * x.b * y.b, x.a * y.b + x.b * y.a};
}

ExactCoef SqrtRing::inv(const Elem& x) const {
  if (is_zero(x)) throw std::domain_error("inverse of zero");
  const mpq_class S(static_cast<long>(S_));
  if (x.b == 0) return {1 / x.a, mpq_class(0)};
  const mpq_class norm = x.a * x.a - S * x.b * x.b;
  if (norm == 0) throw std::domain_error("zero divisor");
  return {x.a / norm, -x.b / norm};
}

ExactCoef SqrtRing::pow(Elem x, unsigned e) const {
  Elem r = one();
  while (e > 0) {
    if (e & 1U) r = mul(r, x);
    e >>= 1U;
    if (e > 0) x = mul(x, x);
  }
  return r;
}

std::optional<ExactCoef> SqrtRing::sqrt(const Elem& x) const {
  const mpq_class S(static_cast<long>(S_));
  if (x.b == 0) {
    if (auto r = rational_sqrt(x.a)) return Elem{*r, mpq_class(0)};
    if (root_) return std::nullopt;
    if (auto v = rational_sqrt(x.a / S)) return Elem{mpq_class(0), *v};
    return std::nullopt;
  }
  // (u + v s)^2 = x  iff  u^2 + S v^2 = a and 2 u v = b.
  const auto n = rational_sqrt(x.a * x.a - S * x.b * x.b);
  if (!n) return std::nullopt;
  for (const mpq_class& cand : {mpq_class((x.a + *n) / 2), mpq_class((x.a - *n) / 2)}) {
    auto u = rational_sqrt(cand);
    if (!u || *u == 0) continue;
    return Elem{*u, x.b / (2 * *u)};
  }
  return std::nullopt;
}

int SqrtRing::real_sign(const Elem& x) const {
  if (S_ < 0) throw std::domain_error("no real embedding for negative S");
  if (root_) return sgn(mpq_class(x.a + x.b * *root_));
  const int sa = sgn(x.a);
  const int sb = sgn(x.b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const mpq_class diff = x.a * x.a - mpq_class(static_cast<long>(S_)) * x.b * x.b;
  return sgn(diff) > 0 ? sa : sb;
}

bool SqrtRing::greater(const Elem& x, const Elem& y) const {
  if (S_ > 0) return real_sign(sub(x, y)) > 0;
  if (x.a != y.a) return x.a > y.a;
  return x.b > y.b;
}

bool SqrtRing::is_S_integral(const Elem& x) const {
  const mpz_class S = abs(mpz_class(static_cast<long>(S_)));
  for (const mpq_class* v : {&x.a, &x.b}) {
    mpz_class den = v->get_den();
    for (mpz_class g = gcd(den, S); g > 1; g = gcd(den, S)) den /= g;
    if (den != 1) return false;
  }
  return true;
}

std::string SqrtRing::render(const Elem& x) const {
  const std::string root = "sqrt(" + std::to_string(S_) + ")";
  if (x.b == 0) return x.a.get_str();
  std::string tail;
  if (x.b == 1) {
    tail = root;
  } else if (x.b == -1) {
    tail = "-" + root;
  } else {
    tail = x.b.get_str() + "*" + root;
  }
  if (x.a == 0) return tail;
  return x.a.get_str() + (sgn(x.b) > 0 ? "+" : "") + tail;
}

std::vector<ExactCoef> exact_roots(const SqrtRing& ring, std::span<const ExactCoef> poly) {
  upoly::Poly<SqrtRing> g(poly.begin(), poly.end());
  upoly::trim(ring, g);
  if (g.empty()) throw std::invalid_argument("zero polynomial has no finite root set");
  const int deg = upoly::degree<SqrtRing>(g);
  std::vector<ExactCoef> roots;
  if (deg == 1) {
    roots.push_back(ring.neg(ring.div(g[0], g[1])));
  } else if (deg == 2) {
    roots = quadratic_roots(ring, g[0], g[1], g[2]);
  } else if (deg == 3) {
    if (!std::all_of(g.begin(), g.end(), [&](const ExactCoef& c) { return ring.is_rational(c); })) {
      throw std::domain_error("unsupported: cubic with irrational coefficients");
    }
    // Clear denominators, then substitute t = a3 * x to get a monic integer
    // cubic whose integer roots are the rational roots scaled by a3.
    mpz_class lcm = 1;
    for (const auto& c : g) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.a.get_den_mpz_t());
    std::vector<mpz_class> a(4);
    for (int k = 0; k < 4; ++k) a[k] = mpq_class(g[k].a * lcm).get_num();
    const std::vector<mpz_class> monic{a[0] * a[3] * a[3], a[1] * a[3], a[2], mpz_class(1)};
    const auto ts = integer_roots_monic_cubic(monic);
    if (!ts.empty()) {
      mpq_class root(ts.front(), a[3]);
      root.canonicalize();
      const ExactCoef r0 = ring.from_rational(root);
      roots.push_back(r0);
      // Deflate by (x - r0).
      auto [quo, rem] = upoly::divmod(ring, g, upoly::Poly<SqrtRing>{ring.neg(r0), ring.one()});
      for (auto& r : quadratic_roots(ring, quo[0], quo[1], quo[2])) roots.push_back(r);
    }
  } else if (deg > 3) {
    throw std::domain_error("unsupported: degree above 3");
  }
  std::vector<ExactCoef> distinct;
  for (auto& r : roots) {
    if (std::find(distinct.begin(), distinct.end(), r) == distinct.end()) distinct.push_back(r);
  }
  std::sort(distinct.begin(), distinct.end(),
            [&](const ExactCoef& x, const ExactCoef& y) { return ring.greater(x, y); });
  return distinct;
}

FieldElem reduce(const FieldCtx& ctx, const ExactCoef& x, const FieldElem& sqrt_s) {
  auto part = [&](const mpq_class& v) {
    const unsigned long p = ctx.p();
    const unsigned long den = mpz_fdiv_ui(v.get_den_mpz_t(), p);
    if (den == 0) throw std::domain_error("denominator vanishes modulo p");
    const unsigned long num = mpz_fdiv_ui(v.get_num_mpz_t(), p);
    return ctx.div(ctx.from_int(static_cast<std::int64_t>(num)),
                   ctx.from_int(static_cast<std::int64_t>(den)));
  };
  return ctx.add(part(x.a), ctx.mul(part(x.b), sqrt_s));
}

}  // namespace hessaut
