// Copyright 2026 The k3kit Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>

#include "k3kit/errors.hpp"

namespace k3kit {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt num(const BigRat& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const BigRat& r) { return boost::multiprecision::denominator(r); }

inline int sign_of(const BigInt& a) { return a.sign(); }
inline int sign_of(const BigRat& a) { return a.sign(); }

inline BigInt abs_of(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

// Remainder in [0, m) for m > 0.
inline BigInt floor_mod(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += abs_of(m);
  return r;
}

inline BigInt gcd_of(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
inline BigInt lcm_of(const BigInt& a, const BigInt& b) { return boost::multiprecision::lcm(a, b); }

inline BigInt pow_of(const BigInt& base, unsigned e) { return boost::multiprecision::pow(base, e); }

inline BigInt mod_pow(BigInt base, BigInt exp, const BigInt& m) {
  base = floor_mod(base, m);
  BigInt result = 1;
  while (exp > 0) {
    if ((exp & 1) != 0) result = result * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return result;
}

// Extended gcd: returns g = gcd(a, b) and x, y with a*x + b*y = g.
inline BigInt ext_gcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
  BigInt old_r = a, r = b;
  BigInt old_s = 1, s = 0;
  BigInt old_t = 0, t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r; old_r = r; r = tmp;
    tmp = old_s - q * s; old_s = s; s = tmp;
    tmp = old_t - q * t; old_t = t; t = tmp;
  }
  if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
  x = old_s;
  y = old_t;
  return old_r;
}

inline BigInt mod_inverse(const BigInt& a, const BigInt& m) {
  BigInt x, y;
  BigInt g = ext_gcd(floor_mod(a, m), m, x, y);
  if (g != 1) fail(errc::not_coprime, "no inverse of " + a.str() + " mod " + m.str());
  return floor_mod(x, m);
}

// Truncated square root: largest s with s*s <= n.
inline BigInt isqrt(const BigInt& n) { return boost::multiprecision::sqrt(n); }

inline std::string to_string(const BigInt& a) { return a.str(); }
inline std::string to_string(const BigRat& r) {
  if (den(r) == 1) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

}  // namespace k3kit
