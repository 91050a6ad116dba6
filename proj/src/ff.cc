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

#include "hessaut/ff.h"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "hessaut/upoly.h"

namespace hessaut {
namespace {

// F_p as a coefficient ring for the modulus search.
struct PrimeRing {
  using Elem = std::uint64_t;
  std::uint64_t p;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t v) const {
    const auto m = static_cast<std::int64_t>(p);
    return static_cast<Elem>(((v % m) + m) % m);
  }
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const { return (a + b) % p; }
  Elem sub(Elem a, Elem b) const { return (a + p - b) % p; }
  Elem neg(Elem a) const { return (p - a) % p; }
  Elem mul(Elem a, Elem b) const { return a * b % p; }
  Elem inv(Elem a) const {
    Elem r = 1;
    Elem e = p - 2;
    while (e > 0) {
      if (e & 1U) r = mul(r, a);
      a = mul(a, a);
      e >>= 1U;
    }
    return r;
  }
};

// Rabin's test for degree <= 4: x^(p^f) = x mod g and, for each prime r | f,
// gcd(x^(p^(f/r)) - x, g) = 1.
bool rabin_irreducible(const PrimeRing& ring, const std::vector<std::uint64_t>& g) {
  using upoly::Poly;
  const int f = static_cast<int>(g.size()) - 1;
  if (f == 1) return true;
  const Poly<PrimeRing> x{0, 1};
  auto frob_power = [&](int k) {
    Poly<PrimeRing> r = x;
    for (int i = 0; i < k; ++i) r = upoly::powmod(ring, r, ring.p, g);
    return r;
  };
  if (upoly::sub(ring, frob_power(f), upoly::mod(ring, x, g)).size() != 0) return false;
  for (int r : {2, 3}) {
    if (f % r != 0) continue;
    auto h = upoly::sub(ring, frob_power(f / r), x);
    if (upoly::degree<PrimeRing>(upoly::gcd(ring, g, h)) != 0) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldCtx::FieldCtx(std::uint64_t p, int f) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (p < 5) throw std::invalid_argument("characteristic 2 and 3 are not supported");
  if (p >= (1ULL << 31U)) throw std::invalid_argument("characteristic too large");
  if (f < 1 || f > kMaxExtensionDegree) {
    throw std::invalid_argument("extension degree must lie in [1, 4]");
  }
  std::uint64_t q = 1;
  for (int k = 0; k < f; ++k) {
    if (q > (1ULL << 62U) / p) throw std::invalid_argument("field too large");
    q *= p;
  }
  p_ = static_cast<std::uint32_t>(p);
  f_ = f;
  q_ = q;

  // Smallest monic irreducible, ordering tails (c0, ..., c_{f-1})
  // lexicographically with c0 most significant.
  const PrimeRing ring{p};
  for (std::uint64_t n = 0; n < q; ++n) {
    std::vector<std::uint64_t> g(f + 1, 0);
    std::uint64_t rest = n;
    for (int k = f - 1; k >= 0; --k) {
      g[k] = rest % p;
      rest /= p;
    }
    g[f] = 1;
    if (f > 1 && g[0] == 0) continue;
    if (rabin_irreducible(ring, g)) {
      for (int k = 0; k <= f; ++k) modulus_[k] = static_cast<std::uint32_t>(g[k]);
      break;
    }
  }
}

std::vector<std::uint32_t> FieldCtx::modulus() const {
  return {modulus_.begin(), modulus_.begin() + f_ + 1};
}

FieldElem FieldCtx::from_int(std::int64_t v) const {
  const auto m = static_cast<std::int64_t>(p_);
  Elem r;
  r.c[0] = static_cast<std::uint32_t>(((v % m) + m) % m);
  return r;
}

FieldElem FieldCtx::from_coeffs(std::span<const std::int64_t> coeffs) const {
  // Reduce through the modulus so that longer inputs are accepted.
  Elem r;
  Elem xk = one();
  const Elem x = generator();
  for (std::int64_t c : coeffs) {
    r = add(r, mul(from_int(c), xk));
    xk = mul(xk, x);
  }
  return r;
}

FieldElem FieldCtx::generator() const {
  Elem r;
  if (f_ == 1) {
    // x reduces to -c0 modulo a linear modulus x + c0.
    r.c[0] = (p_ - modulus_[0]) % p_;
  } else {
    r.c[1] = 1;
  }
  return r;
}

bool FieldCtx::in_prime_field(const Elem& a) const {
  for (int k = 1; k < f_; ++k) {
    if (a.c[k] != 0) return false;
  }
  return true;
}

FieldElem FieldCtx::add(const Elem& a, const Elem& b) const {
  Elem r;
  for (int k = 0; k < f_; ++k) {
    std::uint32_t s = a.c[k] + b.c[k];
    if (s >= p_) s -= p_;
    r.c[k] = s;
  }
  return r;
}

FieldElem FieldCtx::sub(const Elem& a, const Elem& b) const {
  Elem r;
  for (int k = 0; k < f_; ++k) {
    r.c[k] = a.c[k] >= b.c[k] ? a.c[k] - b.c[k] : a.c[k] + p_ - b.c[k];
  }
  return r;
}

FieldElem FieldCtx::neg(const Elem& a) const {
  Elem r;
  for (int k = 0; k < f_; ++k) r.c[k] = a.c[k] == 0 ? 0 : p_ - a.c[k];
  return r;
}

FieldElem FieldCtx::mul(const Elem& a, const Elem& b) const {
  const std::uint64_t p = p_;
  Elem r;
  if (f_ == 1) {
    r.c[0] = static_cast<std::uint32_t>(std::uint64_t{a.c[0]} * b.c[0] % p);
    return r;
  }
  std::array<std::uint64_t, 2 * kMaxExtensionDegree - 1> t{};
  for (int i = 0; i < f_; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < f_; ++j) {
      t[i + j] = (t[i + j] + std::uint64_t{a.c[i]} * b.c[j]) % p;
    }
  }
  for (int k = 2 * f_ - 2; k >= f_; --k) {
    const std::uint64_t c = t[k];
    if (c == 0) continue;
    for (int j = 0; j < f_; ++j) {
      t[k - f_ + j] = (t[k - f_ + j] + (p - c) * modulus_[j]) % p;
    }
  }
  for (int k = 0; k < f_; ++k) r.c[k] = static_cast<std::uint32_t>(t[k]);
  return r;
}

FieldElem FieldCtx::inv(const Elem& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero");
  if (f_ == 1) {
    // Extended Euclid on residues.
    std::int64_t r0 = p_, r1 = a.c[0], s0 = 0, s1 = 1;
    while (r1 != 0) {
      const std::int64_t quo = r0 / r1;
      std::tie(r0, r1) = std::make_pair(r1, r0 - quo * r1);
      std::tie(s0, s1) = std::make_pair(s1, s0 - quo * s1);
    }
    return from_int(s0);
  }
  return pow(a, q_ - 2);
}

FieldElem FieldCtx::pow(Elem a, std::uint64_t e) const {
  Elem r = one();
  while (e > 0) {
    if (e & 1U) r = mul(r, a);
    e >>= 1U;
    if (e > 0) a = mul(a, a);
  }
  return r;
}

int FieldCtx::legendre(const Elem& a) const {
  if (is_zero(a)) return 0;
  return pow(a, (q_ - 1) / 2) == one() ? 1 : -1;
}

std::optional<std::pair<FieldElem, FieldElem>> FieldCtx::sqrt(const Elem& a) const {
  if (is_zero(a)) return std::make_pair(a, a);
  if (legendre(a) != 1) return std::nullopt;

  // Tonelli-Shanks with q - 1 = 2^s * t, t odd.
  std::uint64_t t = q_ - 1;
  int s = 0;
  while ((t & 1U) == 0) {
    t >>= 1U;
    ++s;
  }
  Elem z;
  for (std::uint64_t n = 2; n < q_; ++n) {
    z = from_index(n);
    if (legendre(z) == -1) break;
  }
  Elem x = pow(a, (t + 1) / 2);
  Elem b = pow(a, t);
  Elem g = pow(z, t);
  int r = s;
  while (b != one()) {
    int m = 0;
    for (Elem bb = b; bb != one(); bb = mul(bb, bb)) ++m;
    Elem w = g;
    for (int k = 0; k < r - m - 1; ++k) w = mul(w, w);
    x = mul(x, w);
    g = mul(w, w);
    b = mul(b, g);
    r = m;
  }
  Elem y = neg(x);
  if (y < x) std::swap(x, y);
  return std::make_pair(x, y);
}

std::uint64_t FieldCtx::index(const Elem& a) const {
  std::uint64_t n = 0;
  for (int k = f_ - 1; k >= 0; --k) n = n * p_ + a.c[k];
  return n;
}

FieldElem FieldCtx::from_index(std::uint64_t n) const {
  Elem r;
  for (int k = 0; k < f_; ++k) {
    r.c[k] = static_cast<std::uint32_t>(n % p_);
    n /= p_;
  }
  return r;
}

std::string FieldCtx::render(const Elem& a) const {
  if (f_ == 1) return std::to_string(a.c[0]);
  std::string out;
  for (int k = 0; k < f_; ++k) {
    if (a.c[k] == 0) continue;
    if (!out.empty()) out += '+';
    if (k == 0 || a.c[k] != 1) out += std::to_string(a.c[k]);
    if (k >= 1) out += 'a';
    if (k >= 2) out += '^' + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

std::int64_t FieldCtx::to_signed(const Elem& a) const {
  const std::int64_t v = a.c[0];
  return 2 * v > static_cast<std::int64_t>(p_) ? v - p_ : v;
}

FieldCtx make_field(std::uint64_t p, int f) { return FieldCtx(p, f); }

std::vector<FieldElem> fourth_roots_of_unity(const FieldCtx& ctx) {
  std::vector<FieldElem> out;
  const FieldElem one = ctx.one();
  out.push_back(one);
  out.push_back(ctx.neg(one));
  if (auto w = primitive_fourth_root(ctx)) {
    out.push_back(*w);
    out.push_back(ctx.neg(*w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<FieldElem> primitive_fourth_root(const FieldCtx& ctx) {
  auto r = ctx.sqrt(ctx.neg(ctx.one()));
  if (!r) return std::nullopt;
  return r->first;
}

std::vector<FieldElem> univariate_roots(const FieldCtx& ctx,
                                        std::span<const FieldElem> poly) {
  upoly::Poly<FieldCtx> g(poly.begin(), poly.end());
  upoly::trim(ctx, g);
  if (g.empty()) throw std::invalid_argument("zero polynomial has no finite root set");
  std::vector<FieldElem> roots;
  if (ctx.q() <= 10000) {
    for (std::uint64_t n = 0; n < ctx.q(); ++n) {
      const FieldElem x = ctx.from_index(n);
      if (ctx.is_zero(upoly::eval(ctx, g, x))) roots.push_back(x);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
  }

  // Distinct-root part, then equal-degree splitting with shifts x + d taken
  // in index order (deterministic).
  g = upoly::monic(ctx, g);
  const upoly::Poly<FieldCtx> x{ctx.zero(), ctx.one()};
  auto xq = upoly::powmod(ctx, x, ctx.q(), g);
  g = upoly::gcd(ctx, g, upoly::sub(ctx, xq, x));
  std::vector<upoly::Poly<FieldCtx>> stack{g};
  while (!stack.empty()) {
    auto h = std::move(stack.back());
    stack.pop_back();
    const int d = upoly::degree<FieldCtx>(h);
    if (d <= 0) continue;
    if (d == 1) {
      roots.push_back(ctx.neg(ctx.div(h[0], h[1])));
      continue;
    }
    for (std::uint64_t n = 0; n < ctx.q(); ++n) {
      const upoly::Poly<FieldCtx> shift{ctx.from_index(n), ctx.one()};
      auto pw = upoly::powmod(ctx, shift, (ctx.q() - 1) / 2, h);
      auto split = upoly::gcd(ctx, h, upoly::sub(ctx, pw, {ctx.one()}));
      const int ds = upoly::degree<FieldCtx>(split);
      if (ds > 0 && ds < d) {
        stack.push_back(upoly::divmod(ctx, h, split).first);
        stack.push_back(std::move(split));
        break;
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<FieldElem> univariate_roots(const FieldCtx& ctx,
                                        std::span<const std::int64_t> poly) {
  std::vector<FieldElem> g;
  g.reserve(poly.size());
  for (std::int64_t c : poly) g.push_back(ctx.from_int(c));
  return univariate_roots(ctx, g);
}

std::vector<FieldElem> all_elements(const FieldCtx& ctx) {
  if (ctx.q() > 10000000) throw std::invalid_argument("field too large to enumerate");
  std::vector<FieldElem> out;
  out.reserve(ctx.q());
  for (std::uint64_t n = 0; n < ctx.q(); ++n) out.push_back(ctx.from_index(n));
  return out;
}

}  // namespace hessaut
