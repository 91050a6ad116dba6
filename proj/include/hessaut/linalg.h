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

#ifndef HESSAUT_LINALG_H_
#define HESSAUT_LINALG_H_

// Dense matrices over a field R (FieldCtx or an exact field) with Gaussian
// elimination.  Row-major storage.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hessaut {

template <class R>
class Matrix {
 public:
  using Elem = typename R::Elem;

  Matrix() = default;
  Matrix(const R& ring, std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, ring.zero()) {}

  static Matrix identity(const R& ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Elem& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Elem> row(std::size_t i) const {
    return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_};
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

template <class R>
Matrix<R> matmul(const R& ring, const Matrix<R>& a, const Matrix<R>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  Matrix<R> c(ring, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (ring.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        c(i, j) = ring.add(c(i, j), ring.mul(a(i, k), b(k, j)));
      }
    }
  }
  return c;
}

template <class R>
Matrix<R> transpose(const R& ring, const Matrix<R>& a) {
  Matrix<R> t(ring, a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  }
  return t;
}

template <class R>
std::vector<typename R::Elem> matvec(const R& ring, const Matrix<R>& a,
                                     const std::vector<typename R::Elem>& v) {
  std::vector<typename R::Elem> out(a.rows(), ring.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out[i] = ring.add(out[i], ring.mul(a(i, j), v[j]));
    }
  }
  return out;
}

// Reduced row-echelon form in place; returns the pivot columns.
template <class R>
std::vector<std::size_t> rref(const R& ring, Matrix<R>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && ring.is_zero(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    }
    const auto inv = ring.inv(m(r, c));
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = ring.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || ring.is_zero(m(i, c))) continue;
      const auto factor = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) {
        m(i, j) = ring.sub(m(i, j), ring.mul(factor, m(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class R>
std::size_t rank(const R& ring, Matrix<R> m) {
  return rref(ring, m).size();
}

// Basis of {x : m x = 0}, one vector per free column.
template <class R>
std::vector<std::vector<typename R::Elem>> nullspace(const R& ring, Matrix<R> m) {
  const auto pivots = rref(ring, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<typename R::Elem>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename R::Elem> v(m.cols(), ring.zero());
    v[free] = ring.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = ring.neg(m(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class R>
typename R::Elem det(const R& ring, Matrix<R> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  auto d = ring.one();
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && ring.is_zero(m(piv, c))) ++piv;
    if (piv == n) return ring.zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      d = ring.neg(d);
    }
    d = ring.mul(d, m(c, c));
    const auto inv = ring.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (ring.is_zero(m(i, c))) continue;
      const auto factor = ring.mul(m(i, c), inv);
      for (std::size_t j = c; j < n; ++j) {
        m(i, j) = ring.sub(m(i, j), ring.mul(factor, m(c, j)));
      }
    }
  }
  return d;
}

template <class R>
std::optional<Matrix<R>> inverse(const R& ring, const Matrix<R>& m) {
  const std::size_t n = m.rows();
  Matrix<R> aug(ring, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = ring.one();
  }
  const auto pivots = rref(ring, aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<R> out(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  }
  return out;
}

}  // namespace hessaut

#endif  // HESSAUT_LINALG_H_
