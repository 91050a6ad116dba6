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

#ifndef HESSAUT_FORMS_H_
#define HESSAUT_FORMS_H_

// Ternary cubic forms and 3x3 matrices of linear forms in y1, y2, y3 over a
// coefficient field R.  R::Elem must value-initialize to zero.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hessaut/ff.h"
#include "hessaut/linalg.h"

namespace hessaut {

using Exponent = std::array<int, 3>;

// Graded-lex order: y1^3, y1^2 y2, y1^2 y3, y1 y2^2, y1 y2 y3, y1 y3^2,
// y2^3, y2^2 y3, y2 y3^2, y3^3.
inline constexpr std::array<Exponent, 10> kCubicMonomials{{
    {3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1},
    {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3},
}};

inline constexpr std::array<Exponent, 6> kQuadraticMonomials{{
    {2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2},
}};

constexpr int cubic_index(const Exponent& e) {
  for (int k = 0; k < 10; ++k) {
    if (kCubicMonomials[k] == e) return k;
  }
  return -1;
}

constexpr int quadratic_index(const Exponent& e) {
  for (int k = 0; k < 6; ++k) {
    if (kQuadraticMonomials[k] == e) return k;
  }
  return -1;
}

// Index of y_a y_b y_c.
constexpr int cubic_index(int a, int b, int c) {
  Exponent e{0, 0, 0};
  ++e[a];
  ++e[b];
  ++e[c];
  return cubic_index(e);
}

// "y1^2*y3" and friends.
std::string monomial_name(const Exponent& e);

template <class R>
struct CubicForm {
  std::array<typename R::Elem, 10> c{};

  friend bool operator==(const CubicForm&, const CubicForm&) = default;

  typename R::Elem& operator[](const Exponent& e) { return c[cubic_index(e)]; }
  const typename R::Elem& operator[](const Exponent& e) const { return c[cubic_index(e)]; }
};

template <class R>
struct LinForm {
  std::array<typename R::Elem, 3> c{};

  friend bool operator==(const LinForm&, const LinForm&) = default;
};

// B(y) = sum_k coef[k] y_k, each coef[k] a 3x3 matrix.
template <class R>
struct LinFormMatrix {
  std::array<std::array<std::array<typename R::Elem, 3>, 3>, 3> coef{};

  friend bool operator==(const LinFormMatrix&, const LinFormMatrix&) = default;

  LinForm<R> entry(int i, int j) const {
    return {{coef[0][i][j], coef[1][i][j], coef[2][i][j]}};
  }
  void set_entry(int i, int j, const LinForm<R>& l) {
    for (int k = 0; k < 3; ++k) coef[k][i][j] = l.c[k];
  }
};

namespace forms_detail {

inline int factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace forms_detail

template <class R>
bool is_zero_form(const R& ring, const CubicForm<R>& f) {
  for (const auto& x : f.c) {
    if (!ring.is_zero(x)) return false;
  }
  return true;
}

template <class R>
CubicForm<R> add(const R& ring, const CubicForm<R>& f, const CubicForm<R>& g) {
  CubicForm<R> h;
  for (int k = 0; k < 10; ++k) h.c[k] = ring.add(f.c[k], g.c[k]);
  return h;
}

template <class R>
CubicForm<R> sub(const R& ring, const CubicForm<R>& f, const CubicForm<R>& g) {
  CubicForm<R> h;
  for (int k = 0; k < 10; ++k) h.c[k] = ring.sub(f.c[k], g.c[k]);
  return h;
}

template <class R>
CubicForm<R> scale(const R& ring, const typename R::Elem& a, const CubicForm<R>& f) {
  CubicForm<R> h;
  for (int k = 0; k < 10; ++k) h.c[k] = ring.mul(a, f.c[k]);
  return h;
}

template <class R>
typename R::Elem evaluate(const R& ring, const CubicForm<R>& f,
                          const std::array<typename R::Elem, 3>& y) {
  auto acc = ring.zero();
  for (int k = 0; k < 10; ++k) {
    if (ring.is_zero(f.c[k])) continue;
    auto term = f.c[k];
    for (int v = 0; v < 3; ++v) {
      for (int e = 0; e < kCubicMonomials[k][v]; ++e) term = ring.mul(term, y[v]);
    }
    acc = ring.add(acc, term);
  }
  return acc;
}

// Coefficients of df/dy_v in the quadratic monomial basis.
template <class R>
std::array<typename R::Elem, 6> partial(const R& ring, const CubicForm<R>& f, int v) {
  std::array<typename R::Elem, 6> out{};
  for (int k = 0; k < 10; ++k) {
    Exponent e = kCubicMonomials[k];
    if (e[v] == 0) continue;
    const int mult = e[v];
    --e[v];
    const int idx = quadratic_index(e);
    out[idx] = ring.add(out[idx], ring.mul(ring.from_int(mult), f.c[k]));
  }
  return out;
}

// Cubic form from its coefficients in graded-lex order.
template <class R>
CubicForm<R> make_cubic(const R& ring, const std::array<std::int64_t, 10>& coeffs) {
  CubicForm<R> f;
  for (int k = 0; k < 10; ++k) f.c[k] = ring.from_int(coeffs[k]);
  return f;
}

// Matrix of second partials.  Entry (i, j) has y_k-coefficient
// d^3 f / dy_i dy_j dy_k, which is c_e * e1! e2! e3! for e = e_i + e_j + e_k.
template <class R>
LinFormMatrix<R> hessian_matrix(const R& ring, const CubicForm<R>& f) {
  LinFormMatrix<R> h;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        const int idx = cubic_index(i, j, k);
        const Exponent& e = kCubicMonomials[idx];
        const int mult = forms_detail::factorial(e[0]) * forms_detail::factorial(e[1]) *
                         forms_detail::factorial(e[2]);
        h.coef[k][i][j] = ring.mul(ring.from_int(mult), f.c[idx]);
      }
    }
  }
  return h;
}

// Product of three linear forms as a cubic.
template <class R>
CubicForm<R> product(const R& ring, const LinForm<R>& a, const LinForm<R>& b,
                     const LinForm<R>& c) {
  CubicForm<R> out;
  for (int x = 0; x < 3; ++x) {
    if (ring.is_zero(a.c[x])) continue;
    for (int y = 0; y < 3; ++y) {
      if (ring.is_zero(b.c[y])) continue;
      const auto ab = ring.mul(a.c[x], b.c[y]);
      for (int z = 0; z < 3; ++z) {
        const int idx = cubic_index(x, y, z);
        out.c[idx] = ring.add(out.c[idx], ring.mul(ab, c.c[z]));
      }
    }
  }
  return out;
}

template <class R>
CubicForm<R> det_linform(const R& ring, const LinFormMatrix<R>& b) {
  static constexpr std::array<std::array<int, 3>, 6> kPerms{
      {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}}};
  CubicForm<R> out;
  for (int s = 0; s < 6; ++s) {
    const auto& pi = kPerms[s];
    auto term = product(ring, b.entry(0, pi[0]), b.entry(1, pi[1]), b.entry(2, pi[2]));
    out = s < 3 ? add(ring, out, term) : sub(ring, out, term);
  }
  return out;
}

template <class R>
CubicForm<R> hessian_det(const R& ring, const CubicForm<R>& f) {
  return det_linform(ring, hessian_matrix(ring, f));
}

// B.(x)_{i k} = sum_j B^(k)_{ij} x_j, so B.(x) y^T = B(y) x^T.
template <class R>
LinFormMatrix<R> dual(const LinFormMatrix<R>& b) {
  LinFormMatrix<R> d;
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) d.coef[j][i][k] = b.coef[k][i][j];
    }
  }
  return d;
}

template <class R>
bool is_symmetric(const LinFormMatrix<R>& b) {
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < i; ++j) {
        if (!(b.coef[k][i][j] == b.coef[k][j][i])) return false;
      }
    }
  }
  return true;
}

template <class R>
Matrix<R> evaluate(const R& ring, const LinFormMatrix<R>& b,
                   const std::array<typename R::Elem, 3>& u) {
  Matrix<R> m(ring, 3, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      auto acc = ring.zero();
      for (int k = 0; k < 3; ++k) acc = ring.add(acc, ring.mul(b.coef[k][i][j], u[k]));
      m(i, j) = acc;
    }
  }
  return m;
}

// Smooth iff the partials of f and of its Hessian cubic span all quadrics,
// i.e. the curve and its Hessian share no point where all partials vanish.
template <class R>
bool is_smooth(const R& ring, const CubicForm<R>& f) {
  const CubicForm<R> h = hessian_det(ring, f);
  Matrix<R> m(ring, 6, 6);
  for (int v = 0; v < 3; ++v) {
    const auto pf = partial(ring, f, v);
    const auto ph = partial(ring, h, v);
    for (int k = 0; k < 6; ++k) {
      m(v, k) = pf[k];
      m(3 + v, k) = ph[k];
    }
  }
  return !ring.is_zero(det(ring, m));
}

// Monomials in graded-lex order, e.g. "y1^3 - y1*y3^2 - y2^2*y3".
template <class R>
std::string render(const R& ring, const CubicForm<R>& f) {
  std::string out;
  for (int k = 0; k < 10; ++k) {
    if (ring.is_zero(f.c[k])) continue;
    std::string coef = ring.render(f.c[k]);
    bool negative = false;
    if (coef.size() > 1 && coef[0] == '-' &&
        coef.find_first_of("+-", 1) == std::string::npos) {
      negative = true;
      coef.erase(0, 1);
    }
    if (coef.find_first_of("+-", 1) != std::string::npos) coef = "(" + coef + ")";
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (coef != "1") out += coef + "*";
    out += monomial_name(kCubicMonomials[k]);
  }
  return out.empty() ? "0" : out;
}

// First monomial (graded-lex) where f and g differ.
template <class R>
std::optional<int> first_difference(const R& ring, const CubicForm<R>& f, const CubicForm<R>& g) {
  for (int k = 0; k < 10; ++k) {
    if (!ring.eq(f.c[k], g.c[k])) return k;
  }
  return std::nullopt;
}

struct Violation {
  std::array<std::uint64_t, 3> u;  // field indices of the coordinates
  int rank;
  bool det_zero;
};

struct RankProfile {
  std::array<std::uint64_t, 4> histogram{};
  std::uint64_t violations = 0;
  // Cases where det(B(u)) differs from det B evaluated at u.
  std::uint64_t det_mismatches = 0;
  std::vector<Violation> examples;  // first few violations
};

// Full scan of F_q^3: rank 0 iff u = 0, rank 2 iff u != 0 on the locus,
// rank 3 otherwise.  q^3 must be at most 2*10^7.
RankProfile rank_profile(const FieldCtx& ctx, const LinFormMatrix<FieldCtx>& b);

// Coefficient-wise image of an exact form in a finite field.
template <class R>
CubicForm<FieldCtx> to_field(const CubicForm<R>& f, const auto& reduce_fn) {
  CubicForm<FieldCtx> out;
  for (int k = 0; k < 10; ++k) out.c[k] = reduce_fn(f.c[k]);
  return out;
}

template <class R>
LinFormMatrix<FieldCtx> to_field(const LinFormMatrix<R>& b, const auto& reduce_fn) {
  LinFormMatrix<FieldCtx> out;
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) out.coef[k][i][j] = reduce_fn(b.coef[k][i][j]);
    }
  }
  return out;
}

}  // namespace hessaut

#endif  // HESSAUT_FORMS_H_
