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

#ifndef HESSAUT_UPOLY_H_
#define HESSAUT_UPOLY_H_

// Dense univariate polynomials over a coefficient field R.  Coefficients are
// stored low degree first; the zero polynomial is the empty vector.  R must
// provide zero(), one(), add, sub, mul, neg, inv and is_zero.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hessaut::upoly {

template <class R>
using Poly = std::vector<typename R::Elem>;

template <class R>
void trim(const R& ring, Poly<R>& a) {
  while (!a.empty() && ring.is_zero(a.back())) a.pop_back();
}

// Degree of a trimmed polynomial; -1 for zero.
template <class R>
int degree(const Poly<R>& a) {
  return static_cast<int>(a.size()) - 1;
}

template <class R>
Poly<R> add(const R& ring, const Poly<R>& a, const Poly<R>& b) {
  Poly<R> r(std::max(a.size(), b.size()), ring.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = ring.add(r[i], b[i]);
  trim(ring, r);
  return r;
}

template <class R>
Poly<R> sub(const R& ring, const Poly<R>& a, const Poly<R>& b) {
  Poly<R> r(std::max(a.size(), b.size()), ring.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = ring.sub(r[i], b[i]);
  trim(ring, r);
  return r;
}

template <class R>
Poly<R> mul(const R& ring, const Poly<R>& a, const Poly<R>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<R> r(a.size() + b.size() - 1, ring.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (ring.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = ring.add(r[i + j], ring.mul(a[i], b[j]));
    }
  }
  trim(ring, r);
  return r;
}

template <class R>
Poly<R> scale(const R& ring, const typename R::Elem& c, const Poly<R>& a) {
  Poly<R> r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(ring.mul(c, x));
  trim(ring, r);
  return r;
}

// Quotient and remainder of a by a nonzero b.
template <class R>
std::pair<Poly<R>, Poly<R>> divmod(const R& ring, Poly<R> a, const Poly<R>& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  trim(ring, a);
  const int db = degree<R>(b);
  const auto lead_inv = ring.inv(b.back());
  if (degree<R>(a) < db) return {{}, a};
  Poly<R> q(a.size() - b.size() + 1, ring.zero());
  for (int k = degree<R>(a); k >= db; --k) {
    const auto c = ring.mul(a[k], lead_inv);
    q[k - db] = c;
    if (ring.is_zero(c)) continue;
    for (int j = 0; j <= db; ++j) {
      a[k - db + j] = ring.sub(a[k - db + j], ring.mul(c, b[j]));
    }
  }
  a.resize(db);
  trim(ring, a);
  trim(ring, q);
  return {q, a};
}

template <class R>
Poly<R> mod(const R& ring, const Poly<R>& a, const Poly<R>& b) {
  return divmod(ring, a, b).second;
}

template <class R>
Poly<R> monic(const R& ring, const Poly<R>& a) {
  if (a.empty()) return a;
  return scale(ring, ring.inv(a.back()), a);
}

// Monic gcd; gcd(0, 0) = 0.
template <class R>
Poly<R> gcd(const R& ring, Poly<R> a, Poly<R> b) {
  trim(ring, a);
  trim(ring, b);
  while (!b.empty()) {
    auto r = mod(ring, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(ring, a);
}

template <class R>
typename R::Elem eval(const R& ring, const Poly<R>& a, const typename R::Elem& x) {
  auto acc = ring.zero();
  for (std::size_t k = a.size(); k-- > 0;) acc = ring.add(ring.mul(acc, x), a[k]);
  return acc;
}

template <class R>
Poly<R> derivative(const R& ring, const Poly<R>& a) {
  Poly<R> r;
  for (std::size_t k = 1; k < a.size(); ++k) {
    r.push_back(ring.mul(ring.from_int(static_cast<std::int64_t>(k)), a[k]));
  }
  trim(ring, r);
  return r;
}

// base^e mod m, with e given as a 64-bit exponent.
template <class R>
Poly<R> powmod(const R& ring, Poly<R> base, std::uint64_t e, const Poly<R>& m) {
  Poly<R> result{ring.one()};
  result = mod(ring, result, m);
  base = mod(ring, base, m);
  while (e > 0) {
    if (e & 1U) result = mod(ring, mul(ring, result, base), m);
    e >>= 1U;
    if (e > 0) base = mod(ring, mul(ring, base, base), m);
  }
  return result;
}

}  // namespace hessaut::upoly

#endif  // HESSAUT_UPOLY_H_
