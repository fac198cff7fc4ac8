// Copyright 2026 The k3kit Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Univariate polynomials with exact coefficients, coefficient vector stored
// lowest degree first. Only what the lattice/zeta computations need.

#pragma once

#include <string>
#include <vector>

#include "k3kit/arith.hpp"
#include "k3kit/bigint.hpp"
#include "k3kit/errors.hpp"

namespace k3kit {

template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(T v) { return Poly(std::vector<T>{std::move(v)}); }
  static Poly variable() { return Poly(std::vector<T>{T(0), T(1)}); }

  // degree of the zero polynomial is -1
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : T(0); }
  T leading() const { return c_.empty() ? T(0) : c_.back(); }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  Poly operator+(const Poly& o) const {
    std::vector<T> r(std::max(c_.size(), o.c_.size()), T(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly(std::move(r));
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }

  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<T> r(c_.size() + o.c_.size() - 1, T(0));
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(r));
  }

  Poly operator*(const T& s) const {
    Poly r = *this;
    for (auto& v : r.c_) v *= s;
    r.trim();
    return r;
  }

  template <class V>
  V eval(const V& x) const {
    V acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + V(c_[i]);
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<T> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * T(static_cast<long>(i));
    return Poly(std::move(r));
  }

  // Substitute t -> s*t (coefficient k picks up s^k).
  Poly scale_variable(const T& s) const {
    Poly r = *this;
    T power(1);
    for (auto& v : r.c_) {
      v *= power;
      power *= s;
    }
    r.trim();
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }
  std::vector<T> c_;
};

using IntPoly = Poly<BigInt>;
using RatPoly = Poly<BigRat>;

// Division with remainder by a monic divisor; exact over any coefficient ring.
template <class T>
inline std::pair<Poly<T>, Poly<T>> divrem_monic(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero() || b.leading() != T(1))
    fail(errc::invalid_argument, "divrem_monic needs a monic divisor");
  std::vector<T> rem(a.coeffs());
  int db = b.degree();
  int dq = a.degree() - db;
  if (dq < 0) return {Poly<T>(), a};
  std::vector<T> quot(dq + 1, T(0));
  for (int k = dq; k >= 0; --k) {
    T q = rem[k + db];
    quot[k] = q;
    if (q == T(0)) continue;
    for (int i = 0; i <= db; ++i) rem[k + i] -= q * b.coeff(i);
  }
  return {Poly<T>(std::move(quot)), Poly<T>(std::move(rem))};
}

// True iff b (monic) divides a; quotient returned through q.
template <class T>
inline bool divides_monic(const Poly<T>& a, const Poly<T>& b, Poly<T>* q = nullptr) {
  auto [quot, rem] = divrem_monic(a, b);
  if (!rem.is_zero()) return false;
  if (q) *q = quot;
  return true;
}

inline IntPoly poly_x_pow_minus_one(unsigned m) {
  std::vector<BigInt> c(m + 1, BigInt(0));
  c[0] = -1;
  c[m] = 1;
  return IntPoly(std::move(c));
}

// m-th cyclotomic polynomial, computed as (t^m - 1) / prod_{d|m, d<m} Phi_d.
inline IntPoly cyclotomic_polynomial(const BigInt& m) {
  if (m < 1) fail(errc::invalid_argument, "cyclotomic_polynomial needs m >= 1");
  unsigned mi = static_cast<unsigned>(m);
  IntPoly f = poly_x_pow_minus_one(mi);
  for (const auto& d : divisors_of(m)) {
    if (d == m) continue;
    IntPoly phi_d = cyclotomic_polynomial(d);
    IntPoly q;
    if (!divides_monic(f, phi_d, &q))
      fail(errc::inconsistent, "cyclotomic division not exact");
    f = q;
  }
  return f;
}

inline std::string poly_to_string(const IntPoly& f, const std::string& var = "t") {
  if (f.is_zero()) return "0";
  std::string out;
  for (int k = f.degree(); k >= 0; --k) {
    BigInt c = f.coeff(k);
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    BigInt a = abs_of(c);
    bool show_coef = (a != 1 || k == 0);
    if (show_coef) out += a.str();
    if (k > 0) {
      if (show_coef) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace k3kit
