// Copyright 2026 The k3kit Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Trivariate polynomials in x, y, z over Q, stored densely by total degree.
// Hosts discriminant pencils, their leading principal minors and the branch
// sextic; degrees stay small (<= 8) throughout.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "k3kit/bigint.hpp"
#include "k3kit/errors.hpp"

namespace k3kit {

struct Monomial {
  int i = 0, j = 0, k = 0;  // exponents of x, y, z
  int total() const { return i + j + k; }
  bool operator==(const Monomial& o) const { return i == o.i && j == o.j && k == o.k; }
};

class TriPoly {
 public:
  TriPoly() = default;
  TriPoly(int v) { *this = constant(BigRat(v)); }          // NOLINT(runtime/explicit)
  TriPoly(const BigRat& v) { *this = constant(v); }        // NOLINT(runtime/explicit)
  TriPoly(const BigInt& v) { *this = constant(BigRat(v)); }  // NOLINT(runtime/explicit)

  static TriPoly constant(const BigRat& v) {
    TriPoly p;
    if (v != 0) {
      p.cap_ = 0;
      p.c_.assign(1, v);
    }
    return p;
  }
  static TriPoly monomial(const BigRat& coef, const Monomial& m) {
    TriPoly p;
    if (coef == 0) return p;
    p.cap_ = m.total();
    p.c_.assign(count_upto(p.cap_), BigRat(0));
    p.c_[index_of(m)] = coef;
    return p;
  }
  static TriPoly var_x() { return monomial(BigRat(1), {1, 0, 0}); }
  static TriPoly var_y() { return monomial(BigRat(1), {0, 1, 0}); }
  static TriPoly var_z() { return monomial(BigRat(1), {0, 0, 1}); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return degree() <= 0; }

  // total degree; -1 for the zero polynomial
  int degree() const {
    for (size_t idx = c_.size(); idx-- > 0;)
      if (c_[idx] != 0) return decode(idx).total();
    return -1;
  }

  BigRat coeff(const Monomial& m) const {
    if (m.total() > cap_) return BigRat(0);
    return c_[index_of(m)];
  }

  BigRat as_rational() const {
    if (degree() > 0) fail(errc::invalid_argument, "polynomial is not constant");
    return c_.empty() ? BigRat(0) : c_[0];
  }

  bool is_homogeneous(int deg) const {
    bool any = false;
    for (size_t idx = 0; idx < c_.size(); ++idx) {
      if (c_[idx] == 0) continue;
      if (decode(idx).total() != deg) return false;
      any = true;
    }
    return any || deg < 0;
  }

  bool operator==(const TriPoly& o) const {
    const TriPoly& big = cap_ >= o.cap_ ? *this : o;
    const TriPoly& small = cap_ >= o.cap_ ? o : *this;
    for (size_t idx = 0; idx < big.c_.size(); ++idx) {
      BigRat other = idx < small.c_.size() ? small.c_[idx] : BigRat(0);
      if (big.c_[idx] != other) return false;
    }
    return true;
  }
  bool operator!=(const TriPoly& o) const { return !(*this == o); }

  TriPoly operator-() const {
    TriPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  TriPoly operator+(const TriPoly& o) const {
    TriPoly r;
    r.cap_ = std::max(cap_, o.cap_);
    r.c_.assign(count_upto(r.cap_), BigRat(0));
    for (size_t idx = 0; idx < c_.size(); ++idx) r.c_[idx] += c_[idx];
    for (size_t idx = 0; idx < o.c_.size(); ++idx) r.c_[idx] += o.c_[idx];
    r.shrink();
    return r;
  }
  TriPoly operator-(const TriPoly& o) const { return *this + (-o); }
  TriPoly& operator+=(const TriPoly& o) { return *this = *this + o; }
  TriPoly& operator-=(const TriPoly& o) { return *this = *this - o; }
  TriPoly& operator*=(const TriPoly& o) { return *this = *this * o; }

  TriPoly operator*(const TriPoly& o) const {
    if (is_zero() || o.is_zero()) return TriPoly();
    TriPoly r;
    r.cap_ = cap_ + o.cap_;
    r.c_.assign(count_upto(r.cap_), BigRat(0));
    for (size_t ia = 0; ia < c_.size(); ++ia) {
      if (c_[ia] == 0) continue;
      Monomial ma = decode(ia);
      for (size_t ib = 0; ib < o.c_.size(); ++ib) {
        if (o.c_[ib] == 0) continue;
        Monomial mb = o.decode(ib);
        Monomial m{ma.i + mb.i, ma.j + mb.j, ma.k + mb.k};
        r.c_[index_of(m)] += c_[ia] * o.c_[ib];
      }
    }
    r.shrink();
    return r;
  }

  TriPoly scaled(const BigRat& s) const {
    if (s == 0) return TriPoly();
    TriPoly r = *this;
    for (auto& v : r.c_) v *= s;
    return r;
  }

  BigRat eval(const BigRat& x, const BigRat& y, const BigRat& z) const {
    std::vector<BigRat> xp{BigRat(1)}, yp{BigRat(1)}, zp{BigRat(1)};
    for (int t = 1; t <= cap_; ++t) {
      xp.push_back(xp.back() * x);
      yp.push_back(yp.back() * y);
      zp.push_back(zp.back() * z);
    }
    BigRat acc(0);
    for (size_t idx = 0; idx < c_.size(); ++idx) {
      if (c_[idx] == 0) continue;
      Monomial m = decode(idx);
      acc += c_[idx] * xp[m.i] * yp[m.j] * zp[m.k];
    }
    return acc;
  }

  // graded-lex leading monomial (highest degree, then highest x, y powers);
  // call only on nonzero polynomials
  std::pair<Monomial, BigRat> leading_term() const {
    int deg = degree();
    size_t begin = count_upto(deg - 1);
    size_t end = count_upto(deg);
    for (size_t idx = begin; idx < end; ++idx)
      if (c_[idx] != 0) return {decode(idx), c_[idx]};
    fail(errc::invalid_argument, "leading_term of zero polynomial");
  }

  std::vector<std::pair<Monomial, BigRat>> terms() const {
    std::vector<std::pair<Monomial, BigRat>> out;
    for (size_t idx = 0; idx < c_.size(); ++idx)
      if (c_[idx] != 0) out.emplace_back(decode(idx), c_[idx]);
    return out;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    // degree descending, then storage order, which matches x-major display
    for (int t = degree(); t >= 0; --t) {
      size_t begin = count_upto(t - 1), end = count_upto(t);
      if (end > c_.size()) continue;
      for (size_t idx = begin; idx < end; ++idx) {
        const BigRat& v = c_[idx];
        if (v == 0) continue;
        Monomial m = decode(idx);
        if (!out.empty()) out += v > 0 ? " + " : " - ";
        else if (v < 0) out += "-";
        BigRat a = v < 0 ? BigRat(-v) : v;
        std::string vars = monomial_str(m);
        bool show_coef = (a != 1 || vars.empty());
        if (show_coef) out += to_string(a);
        if (!vars.empty()) {
          if (show_coef) out += "*";
          out += vars;
        }
      }
    }
    return out;
  }

  // Exact division; throws if the division is not exact.
  static TriPoly exact_divide(TriPoly f, const TriPoly& g) {
    if (g.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
    TriPoly q;
    auto [gm, gc] = g.leading_term();
    while (!f.is_zero()) {
      auto [fm, fc] = f.leading_term();
      if (fm.i < gm.i || fm.j < gm.j || fm.k < gm.k)
        fail(errc::inconsistent, "polynomial division not exact");
      Monomial m{fm.i - gm.i, fm.j - gm.j, fm.k - gm.k};
      TriPoly t = monomial(fc / gc, m);
      q += t;
      f -= t * g;
    }
    return q;
  }

 private:
  static size_t count_upto(int deg) {  // monomial count of total degree <= deg
    if (deg < 0) return 0;
    size_t d = static_cast<size_t>(deg);
    return (d + 1) * (d + 2) * (d + 3) / 6;
  }
  static size_t index_of(const Monomial& m) {
    int t = m.total();
    size_t base = count_upto(t - 1);
    int u = t - m.i;
    return base + static_cast<size_t>(u) * (u + 1) / 2 + static_cast<size_t>(t - m.i - m.j);
  }
  Monomial decode(size_t idx) const {
    int t = 0;
    while (count_upto(t) <= idx) ++t;
    size_t rem = idx - count_upto(t - 1);
    int u = 0;
    while (static_cast<size_t>(u + 1) * (u + 2) / 2 <= rem) ++u;
    size_t inner = rem - static_cast<size_t>(u) * (u + 1) / 2;
    Monomial m;
    m.i = t - u;
    m.j = t - m.i - static_cast<int>(inner);
    m.k = t - m.i - m.j;
    return m;
  }
  static std::string monomial_str(const Monomial& m) {
    std::string s;
    auto app = [&](const char* v, int e) {
      if (e == 0) return;
      if (!s.empty()) s += "*";
      s += v;
      if (e > 1) s += "^" + std::to_string(e);
    };
    app("x", m.i);
    app("y", m.j);
    app("z", m.k);
    return s;
  }
  void shrink() {
    int d = degree();
    if (d < 0) {
      c_.clear();
      cap_ = -1;
      return;
    }
    cap_ = d;
    c_.resize(count_upto(cap_));
  }

  int cap_ = -1;              // capacity degree; -1 when zero
  std::vector<BigRat> c_;     // dense, indexed by index_of
};

}  // namespace k3kit
