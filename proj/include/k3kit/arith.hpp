// Copyright 2026 The k3kit Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Elementary number theory: primality, factorization, quadratic residues and
// the unit-square-ratio congruence solver.

#pragma once

#include <algorithm>
#include <vector>

#include "k3kit/bigint.hpp"
#include "k3kit/errors.hpp"

namespace k3kit {

namespace detail {

inline bool miller_rabin_witness(const BigInt& n, const BigInt& a, const BigInt& d, int r) {
  BigInt x = mod_pow(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < r; ++i) {
    x = x * x % n;
    if (x == n - 1) return false;
  }
  return true;  // composite witness found
}

}  // namespace detail

// Miller-Rabin; the fixed witness set is deterministic for n < 3.3e24, far
// beyond anything this library handles, and a sound probabilistic test above.
inline bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  static const int small_primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (int p : small_primes) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  BigInt d = n - 1;
  int r = 0;
  while ((d & 1) == 0) { d >>= 1; ++r; }
  for (int p : small_primes) {
    if (detail::miller_rabin_witness(n, BigInt(p), d, r)) return false;
  }
  return true;
}

namespace detail {

inline BigInt pollard_rho(const BigInt& n) {
  if ((n & 1) == 0) return 2;
  for (BigInt c = 1;; ++c) {
    BigInt x = 2, y = 2, d = 1;
    auto f = [&](const BigInt& v) { return (v * v + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = gcd_of(abs_of(x - y), n);
    }
    if (d != n) return d;
  }
}

inline void factor_into(BigInt n, std::vector<std::pair<BigInt, int>>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    for (auto& [p, e] : out) {
      if (p == n) { ++e; return; }
    }
    out.emplace_back(n, 1);
    return;
  }
  BigInt d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace detail

// Prime factorization of |n|, n != 0, as sorted (prime, exponent) pairs.
inline std::vector<std::pair<BigInt, int>> factorize(BigInt n) {
  if (n == 0) fail(errc::zero_input, "factorize(0)");
  if (n < 0) n = -n;
  std::vector<std::pair<BigInt, int>> out;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
    while (n % p == 0) {
      if (!out.empty() && out.back().first == p) ++out.back().second;
      else out.emplace_back(p, 1);
      n /= p;
    }
  }
  detail::factor_into(n, out);
  std::sort(out.begin(), out.end());
  return out;
}

// Legendre symbol (a|p) in {-1, 0, +1} for odd prime p.
inline int legendre(const BigInt& a, const BigInt& p) {
  BigInt r = mod_pow(a, (p - 1) / 2, p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

// True iff a mod p is a nonzero square. Divisible input is an error, not a
// residue answer.
inline bool is_quadratic_residue(const BigInt& a, const BigInt& p) {
  if (p == 2 || !is_prime(p)) fail(errc::invalid_argument, "p must be an odd prime");
  if (a % p == 0) fail(errc::zero_input, "a divisible by p");
  return legendre(a, p) == 1;
}

// Decides whether a = x^2 b (mod m) has a solution with x a unit, via CRT
// over the prime powers of m. Odd prime powers reduce to a Legendre-symbol
// test mod q and lift; powers of two split at k = 1, 2 and k >= 3.
inline bool square_ratio_solvable(const BigInt& a, const BigInt& b, const BigInt& m) {
  if (m <= 0) fail(errc::invalid_argument, "modulus must be positive");
  bool a_unit = gcd_of(a, m) == 1, b_unit = gcd_of(b, m) == 1;
  if (a_unit != b_unit) return false;  // a unit never matches a non-unit times a square
  if (!a_unit) fail(errc::not_coprime, "a, b must be units mod m");
  if (m == 1) return true;
  BigInt ratio = floor_mod(a * mod_inverse(b, m), m);  // want ratio = x^2 mod m
  for (const auto& [q, e] : factorize(m)) {
    BigInt qe = pow_of(q, static_cast<unsigned>(e));
    BigInt r = floor_mod(ratio, qe);
    if (q == 2) {
      if (e == 1) continue;
      if (e == 2) {
        if (r % 4 != 1) return false;  // units squares mod 4 are {1}
      } else {
        if (r % 8 != 1) return false;  // units squares mod 2^k, k >= 3, are 1 mod 8
      }
    } else {
      if (legendre(r, q) != 1) return false;  // Hensel lifts to q^e
    }
  }
  return true;
}

inline BigInt euler_phi(const BigInt& n) {
  if (n < 1) fail(errc::invalid_argument, "euler_phi needs n >= 1");
  BigInt result = n;
  for (const auto& [p, e] : factorize(n)) {
    (void)e;
    result = result / p * (p - 1);
  }
  return result;
}

inline std::vector<BigInt> divisors_of(const BigInt& n) {
  std::vector<BigInt> divs{1};
  for (const auto& [p, e] : factorize(n)) {
    size_t count = divs.size();
    BigInt pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace k3kit
