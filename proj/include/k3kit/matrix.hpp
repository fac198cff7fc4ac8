// Copyright 2026 The k3kit Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Dense exact matrices, Bareiss determinants, Smith and Hermite normal forms.

#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "k3kit/bigint.hpp"
#include "k3kit/errors.hpp"
#include "k3kit/poly.hpp"

namespace k3kit {

template <class T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(size_t rows, size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(size_t rows, size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {}

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  Matrix operator*(const Matrix& o) const {
    Matrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == T(0)) continue;
        for (size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    Matrix r = *this;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    Matrix r = *this;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
  }

  Matrix scaled(const T& s) const {
    Matrix r = *this;
    for (auto& v : r.data_) v *= s;
    return r;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  Matrix submatrix(size_t nrows, size_t ncols) const {
    Matrix r(nrows, ncols);
    for (size_t i = 0; i < nrows; ++i)
      for (size_t j = 0; j < ncols; ++j) r(i, j) = (*this)(i, j);
    return r;
  }

  template <class U>
  Matrix<U> cast() const {
    Matrix<U> r(rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r(i, j) = U((*this)(i, j));
    return r;
  }

 private:
  size_t rows_, cols_;
  std::vector<T> data_;
};

// Nearest-integer division; remainder magnitude at most |b|/2.
inline BigInt round_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  BigInt r = a - q * b;
  if (2 * abs_of(r) > abs_of(b)) q += (sign_of(r) == sign_of(b)) ? 1 : -1;
  return q;
}

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (q * b != a && (sign_of(a) != sign_of(b))) --q;
  return q;
}

// Fraction-free Bareiss determinant with row pivoting. div must perform the
// (exact) division of the Bareiss recurrence.
template <class T, class Div>
T bareiss_det(Matrix<T> a, Div div) {
  size_t n = a.rows();
  if (n != a.cols()) fail(errc::invalid_argument, "determinant needs a square matrix");
  if (n == 0) return T(1);
  T prev(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == T(0)) {
      size_t pivot = k;
      for (size_t i = k + 1; i < n; ++i)
        if (a(i, k) != T(0)) { pivot = i; break; }
      if (pivot == k) return T(0);
      for (size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        a(i, j) = div(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
    prev = a(k, k);
  }
  T d = a(n - 1, n - 1);
  return sign > 0 ? d : T(0) - d;
}

inline BigInt det(const Matrix<BigInt>& a) {
  return bareiss_det(a, [](const BigInt& x, const BigInt& y) { return BigInt(x / y); });
}

inline BigRat det(const Matrix<BigRat>& a) {
  return bareiss_det(a, [](const BigRat& x, const BigRat& y) { return BigRat(x / y); });
}

struct SmithDecomposition {
  Matrix<BigInt> left;
  std::vector<BigInt> diag;
  Matrix<BigInt> right;
};

namespace detail {

struct SnfState {
  Matrix<BigInt> b, l, r;

  void swap_rows(size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < b.cols(); ++k) std::swap(b(i, k), b(j, k));
    for (size_t k = 0; k < l.cols(); ++k) std::swap(l(i, k), l(j, k));
  }
  void swap_cols(size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < b.rows(); ++k) std::swap(b(k, i), b(k, j));
    for (size_t k = 0; k < r.rows(); ++k) std::swap(r(k, i), r(k, j));
  }
  void row_sub(size_t i, size_t t, const BigInt& q) {  // row_i -= q*row_t
    if (q == 0) return;
    for (size_t k = 0; k < b.cols(); ++k) b(i, k) -= q * b(t, k);
    for (size_t k = 0; k < l.cols(); ++k) l(i, k) -= q * l(t, k);
  }
  void col_sub(size_t j, size_t t, const BigInt& q) {  // col_j -= q*col_t
    if (q == 0) return;
    for (size_t k = 0; k < b.rows(); ++k) b(k, j) -= q * b(k, t);
    for (size_t k = 0; k < r.rows(); ++k) r(k, j) -= q * r(k, t);
  }
  void negate_row(size_t i) {
    for (size_t k = 0; k < b.cols(); ++k) b(i, k) = -b(i, k);
    for (size_t k = 0; k < l.cols(); ++k) l(i, k) = -l(i, k);
  }

  // Eliminate until b is diagonal on the working square. The smallest-
  // absolute-value pivot is re-selected after every reduction sweep, which
  // keeps coefficient growth in check: any nonzero remainder is at most half
  // the old pivot, so the pivot at least halves between sweeps.
  void diagonalize() {
    size_t n = b.rows(), m = b.cols();
    size_t steps = std::min(n, m);
    for (size_t t = 0; t < steps; ++t) {
      for (;;) {
        size_t pi = t, pj = t;
        bool found = false;
        for (size_t i = t; i < n; ++i)
          for (size_t j = t; j < m; ++j) {
            if (b(i, j) == 0) continue;
            if (!found || abs_of(b(i, j)) < abs_of(b(pi, pj))) { pi = i; pj = j; found = true; }
          }
        if (!found) return;  // remaining block is zero
        swap_rows(t, pi);
        swap_cols(t, pj);
        bool clear = true;
        for (size_t i = t + 1; i < n; ++i)
          if (b(i, t) != 0) {
            row_sub(i, t, round_div(b(i, t), b(t, t)));
            if (b(i, t) != 0) clear = false;
          }
        for (size_t j = t + 1; j < m; ++j)
          if (b(t, j) != 0) {
            col_sub(j, t, round_div(b(t, j), b(t, t)));
            if (b(t, j) != 0) clear = false;
          }
        if (clear) break;
      }
    }
  }
};

}  // namespace detail

// Smith normal form with transforms: left * A * right = diag(d_1, ..., d_k),
// d_i >= 0, d_i | d_{i+1}, |det left| = |det right| = 1. Works for any
// integer matrix, including singular ones.
inline SmithDecomposition smith_normal_form(const Matrix<BigInt>& a) {
  detail::SnfState s{a, Matrix<BigInt>::identity(a.rows()), Matrix<BigInt>::identity(a.cols())};
  size_t k = std::min(a.rows(), a.cols());
  for (;;) {
    s.diagonalize();
    // zeros already trail; fix the first divisibility failure, if any
    size_t bad_i = k, bad_j = k;
    for (size_t i = 0; i + 1 < k && bad_i == k; ++i) {
      if (s.b(i, i) == 0) break;
      for (size_t j = i + 1; j < k; ++j) {
        if (s.b(j, j) % s.b(i, i) != 0) { bad_i = i; bad_j = j; break; }
      }
    }
    if (bad_i == k) break;
    s.col_sub(bad_i, bad_j, BigInt(-1));  // col_i += col_j, then re-eliminate
  }
  for (size_t i = 0; i < k; ++i)
    if (s.b(i, i) < 0) s.negate_row(i);
  std::vector<BigInt> d(k);
  for (size_t i = 0; i < k; ++i) d[i] = s.b(i, i);
  return SmithDecomposition{std::move(s.l), std::move(d), std::move(s.r)};
}

// Row-style Hermite normal form of a generator matrix: returns the canonical
// upper-triangular basis (positive pivots, entries above a pivot reduced into
// [0, pivot)). Rows of the input span the lattice; rank many rows come back.
inline Matrix<BigInt> hermite_row_basis(Matrix<BigInt> g) {
  size_t kr = g.rows(), n = g.cols();
  auto swap_rows = [&](size_t i, size_t j) {
    if (i == j) return;
    for (size_t c = 0; c < n; ++c) std::swap(g(i, c), g(j, c));
  };
  size_t r = 0;
  std::vector<size_t> pivot_cols;
  for (size_t c = 0; c < n && r < kr; ++c) {
    bool have_pivot = false;
    for (;;) {
      size_t best = kr;
      for (size_t i = r; i < kr; ++i)
        if (g(i, c) != 0 && (best == kr || abs_of(g(i, c)) < abs_of(g(best, c)))) best = i;
      if (best == kr) break;  // column exhausted
      have_pivot = true;
      swap_rows(r, best);
      bool clear = true;
      for (size_t i = r + 1; i < kr; ++i) {
        if (g(i, c) == 0) continue;
        BigInt q = round_div(g(i, c), g(r, c));
        for (size_t cc = 0; cc < n; ++cc) g(i, cc) -= q * g(r, cc);
        if (g(i, c) != 0) clear = false;
      }
      if (clear) break;
    }
    if (!have_pivot) continue;
    if (g(r, c) < 0)
      for (size_t cc = 0; cc < n; ++cc) g(r, cc) = -g(r, cc);
    for (size_t i = 0; i < r; ++i) {
      BigInt q = floor_div(g(i, c), g(r, c));
      if (q == 0) continue;
      for (size_t cc = 0; cc < n; ++cc) g(i, cc) -= q * g(r, cc);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  Matrix<BigInt> h(r, n);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < n; ++j) h(i, j) = g(i, j);
  return h;
}

// Characteristic polynomial det(tI - M), exact. Bareiss over Z[t]; every
// pivot is the (monic) characteristic polynomial of a leading block, so the
// no-pivot recurrence never divides by zero.
inline IntPoly char_poly(const Matrix<BigInt>& m) {
  size_t n = m.rows();
  if (n != m.cols()) fail(errc::invalid_argument, "char_poly needs a square matrix");
  Matrix<IntPoly> a(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      std::vector<BigInt> c{-m(i, j)};
      if (i == j) c.push_back(1);
      a(i, j) = IntPoly(std::move(c));
    }
  IntPoly prev = IntPoly::constant(1);
  for (size_t k = 0; k + 1 < n; ++k) {
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        IntPoly numerator = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        auto [q, r] = divrem_monic(numerator, prev);
        a(i, j) = q;
      }
    prev = a(k, k);
  }
  return n == 0 ? IntPoly::constant(1) : a(n - 1, n - 1);
}

}  // namespace k3kit
