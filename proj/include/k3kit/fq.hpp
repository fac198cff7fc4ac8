// Copyright 2026 The k3kit Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Arithmetic in F_p and F_{p^n}. Elements are stored as base-p digit packings
// of their polynomial representatives; small fields additionally carry
// discrete-log tables so the point-counting kernel can run on Zech logarithms.

#pragma once

#include <cstdint>
#include <memory>
#include <numeric>
#include <vector>

#include "k3kit/arith.hpp"
#include "k3kit/errors.hpp"

namespace k3kit {

class FqContext {
 public:
  static constexpr uint64_t kZechBudget = uint64_t(1) << 20;
  static constexpr uint32_t kNoLog = 0xffffffff;  // log of 0 / "sum is zero"

  uint32_t p = 0;
  int n = 0;
  uint64_t q = 0;
  std::vector<uint32_t> modulus;  // c_0..c_{n-1} of x^n + c_{n-1}x^{n-1} + ... + c_0
  bool has_zech = false;

  // tables (built when q <= kZechBudget)
  std::vector<uint32_t> exp_table;   // exponent -> packed value, size q-1
  std::vector<uint32_t> log_table;   // packed value -> exponent, kNoLog for 0
  std::vector<uint32_t> zech_table;  // zech[k] = log(1 + g^k), kNoLog when zero
  uint64_t generator = 0;

  // ---- packed-representation arithmetic (always available) ----
  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t r = 0, mul = 1;
    for (int i = 0; i < n; ++i) {
      uint64_t s = a % p + b % p;
      if (s >= p) s -= p;
      r += s * mul;
      mul *= p;
      a /= p;
      b /= p;
    }
    return r;
  }
  uint64_t neg(uint64_t a) const {
    uint64_t r = 0, mul = 1;
    for (int i = 0; i < n; ++i) {
      uint64_t d = a % p;
      r += (d == 0 ? 0 : p - d) * mul;
      mul *= p;
      a /= p;
    }
    return r;
  }
  uint64_t sub(uint64_t a, uint64_t b) const { return add(a, neg(b)); }

  uint64_t mul_poly_path(uint64_t a, uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    std::vector<uint32_t> da = digits(a), db = digits(b);
    std::vector<uint64_t> raw(2 * n - 1, 0);
    for (int i = 0; i < n; ++i) {
      if (!da[i]) continue;
      for (int j = 0; j < n; ++j) raw[i + j] += uint64_t(da[i]) * db[j];
    }
    for (int k = 2 * n - 2; k >= n; --k) {
      uint64_t c = raw[k] % p;
      raw[k] = 0;
      if (!c) continue;
      for (int i = 0; i < n; ++i)
        raw[k - n + i] += uint64_t(p - modulus[i]) % p * c;  // subtract c * modulus shifted
    }
    uint64_t r = 0, mul = 1;
    for (int i = 0; i < n; ++i) {
      r += (raw[i] % p) * mul;
      mul *= p;
    }
    return r;
  }

  uint64_t mul(uint64_t a, uint64_t b) const {
    if (!has_zech) return mul_poly_path(a, b);
    if (a == 0 || b == 0) return 0;
    uint64_t e = uint64_t(log_table[a]) + log_table[b];
    if (e >= q - 1) e -= q - 1;
    return exp_table[e];
  }

  uint64_t pow(uint64_t a, uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  uint64_t inv(uint64_t a) const {
    if (a == 0) fail(errc::division_by_zero, "inverse of zero");
    if (has_zech) {
      uint32_t l = log_table[a];
      return exp_table[l == 0 ? 0 : q - 1 - l];
    }
    return pow(a, q - 2);
  }

  uint64_t frobenius(uint64_t a) const { return pow(a, p); }

  // quadratic character: 0, +1 or -1
  int chi(uint64_t a) const {
    if (a == 0) return 0;
    if (p == 2) return 1;  // squaring is bijective in characteristic two
    if (has_zech) return log_table[a] % 2 == 0 ? 1 : -1;
    return pow(a, (q - 1) / 2) == 1 ? 1 : -1;
  }

  std::vector<uint32_t> digits(uint64_t a) const {
    std::vector<uint32_t> d(n);
    for (int i = 0; i < n; ++i) {
      d[i] = a % p;
      a /= p;
    }
    return d;
  }
  uint64_t pack(const std::vector<uint32_t>& d) const {
    uint64_t r = 0, mul = 1;
    for (int i = 0; i < n; ++i) {
      r += uint64_t(d[i] % p) * mul;
      mul *= p;
    }
    return r;
  }
  uint64_t from_int(const BigInt& v) const {
    return static_cast<uint64_t>(floor_mod(v, BigInt(p)));
  }
};

namespace detail {

// F_p[x] helpers for modulus selection, coefficients low-to-high.
inline std::vector<uint32_t> fpx_trim(std::vector<uint32_t> a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline std::vector<uint32_t> fpx_mulmod(const std::vector<uint32_t>& a,
                                        const std::vector<uint32_t>& b,
                                        const std::vector<uint32_t>& f, uint32_t p) {
  // f monic of degree n given by full coefficient list (degree index n == 1)
  size_t nf = f.size() - 1;
  std::vector<uint64_t> raw(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) raw[i + j] += uint64_t(a[i]) * b[j];
  }
  for (size_t k = raw.size(); k-- > nf;) {
    uint64_t c = raw[k] % p;
    raw[k] = 0;
    if (!c) continue;
    for (size_t i = 0; i < nf; ++i) raw[k - nf + i] += (uint64_t(p) - f[i] % p) * c;
  }
  std::vector<uint32_t> out(nf);
  for (size_t i = 0; i < nf; ++i) out[i] = raw[i] % p;
  return fpx_trim(out);
}

inline std::vector<uint32_t> fpx_powmod(std::vector<uint32_t> base, uint64_t e,
                                        const std::vector<uint32_t>& f, uint32_t p) {
  std::vector<uint32_t> r{1};
  while (e) {
    if (e & 1) r = fpx_mulmod(r, base, f, p);
    base = fpx_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

inline std::vector<uint32_t> fpx_sub(std::vector<uint32_t> a, const std::vector<uint32_t>& b,
                                     uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  return fpx_trim(a);
}

inline std::vector<uint32_t> fpx_gcd(std::vector<uint32_t> a, std::vector<uint32_t> b, uint32_t p) {
  a = fpx_trim(a);
  b = fpx_trim(b);
  while (!b.empty()) {
    // a mod b
    uint32_t lead_inv = static_cast<uint32_t>(
        floor_mod(mod_pow(BigInt(b.back()), BigInt(p - 2), BigInt(p)), BigInt(p)));
    while (a.size() >= b.size() && !a.empty()) {
      uint32_t c = uint64_t(a.back()) * lead_inv % p;
      size_t shift = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i)
        a[shift + i] = (a[shift + i] + uint64_t(p - c) * b[i]) % p;
      a = fpx_trim(a);
    }
    std::swap(a, b);
  }
  return a;
}

// Irreducibility over F_p: no factor of degree < n, and x^{p^n} = x mod f.
inline bool fpx_irreducible(const std::vector<uint32_t>& f, uint32_t p) {
  size_t nf = f.size() - 1;
  std::vector<uint32_t> x{0, 1};
  if (nf == 1) return true;
  std::vector<uint32_t> h = x;
  for (size_t k = 1; k <= nf; ++k) {
    h = fpx_powmod(h, p, f, p);
    if (k < nf) {
      std::vector<uint32_t> g = fpx_gcd(fpx_sub(h, x, p), f, p);
      if (g.size() != 1) return false;
    }
  }
  return fpx_trim(fpx_sub(h, x, p)).empty();
}

}  // namespace detail

// Lexicographically smallest monic irreducible of degree n over F_p, with
// coefficient tuples (c_0, ..., c_{n-1}) compared left to right.
inline std::vector<uint32_t> find_modulus(uint32_t p, int n) {
  if (n == 1) return {0};  // f = x; the quotient is the prime field itself
  uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= p;
  for (uint64_t v = 0; v < total; ++v) {
    std::vector<uint32_t> tail(n);
    uint64_t w = v;
    for (int i = n - 1; i >= 0; --i) {  // c_0 is the most significant digit of v
      tail[i] = w % p;
      w /= p;
    }
    std::vector<uint32_t> f = tail;
    f.push_back(1);
    if (detail::fpx_irreducible(f, p)) return tail;
  }
  fail(errc::inconsistent, "no irreducible polynomial found");
}

inline std::shared_ptr<const FqContext> make_context(uint32_t p, int n,
                                                     uint64_t max_q = uint64_t(1) << 26) {
  if (!is_prime(BigInt(p))) fail(errc::not_prime, std::to_string(p) + " is not prime");
  if (n < 1) fail(errc::invalid_argument, "extension degree must be >= 1");
  BigInt qa = pow_of(BigInt(p), static_cast<unsigned>(n));
  if (qa > max_q) fail(errc::budget_exceeded, "field size " + qa.str() + " over budget");
  auto ctx = std::make_shared<FqContext>();
  ctx->p = p;
  ctx->n = n;
  ctx->q = static_cast<uint64_t>(qa);
  ctx->modulus = find_modulus(p, n);
  if (ctx->q <= FqContext::kZechBudget && ctx->q > 2) {
    uint64_t q = ctx->q;
    // find a generator of the unit group
    std::vector<uint64_t> prime_factors;
    {
      uint64_t m = q - 1;
      for (uint64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) {
          prime_factors.push_back(d);
          while (m % d == 0) m /= d;
        }
      if (m > 1) prime_factors.push_back(m);
    }
    for (uint64_t cand = 2; cand < q; ++cand) {
      bool ok = true;
      for (uint64_t r : prime_factors) {
        uint64_t e = (q - 1) / r;
        // polynomial-path power (tables not built yet)
        uint64_t acc = 1, base = cand, ee = e;
        while (ee) {
          if (ee & 1) acc = ctx->mul_poly_path(acc, base);
          base = ctx->mul_poly_path(base, base);
          ee >>= 1;
        }
        if (acc == 1) { ok = false; break; }
      }
      if (ok) { ctx->generator = cand; break; }
    }
    ctx->exp_table.resize(q - 1);
    ctx->log_table.assign(q, FqContext::kNoLog);
    uint64_t cur = 1;
    for (uint64_t k = 0; k < q - 1; ++k) {
      ctx->exp_table[k] = static_cast<uint32_t>(cur);
      ctx->log_table[cur] = static_cast<uint32_t>(k);
      cur = ctx->mul_poly_path(cur, ctx->generator);
    }
    ctx->zech_table.resize(q - 1);
    for (uint64_t k = 0; k < q - 1; ++k) {
      uint64_t s = ctx->add(1, ctx->exp_table[k]);
      ctx->zech_table[k] = s == 0 ? FqContext::kNoLog : ctx->log_table[s];
    }
    ctx->has_zech = true;
  }
  return ctx;
}

class FqElement {
 public:
  FqElement() = default;
  FqElement(std::shared_ptr<const FqContext> ctx, uint64_t packed)
      : ctx_(std::move(ctx)), v_(packed) {}

  const std::shared_ptr<const FqContext>& context() const { return ctx_; }
  uint64_t packed() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  friend FqElement operator+(const FqElement& a, const FqElement& b) {
    a.check(b);
    return {a.ctx_, a.ctx_->add(a.v_, b.v_)};
  }
  friend FqElement operator-(const FqElement& a, const FqElement& b) {
    a.check(b);
    return {a.ctx_, a.ctx_->sub(a.v_, b.v_)};
  }
  friend FqElement operator*(const FqElement& a, const FqElement& b) {
    a.check(b);
    return {a.ctx_, a.ctx_->mul(a.v_, b.v_)};
  }
  FqElement operator-() const { return {ctx_, ctx_->neg(v_)}; }
  FqElement inverse() const { return {ctx_, ctx_->inv(v_)}; }
  FqElement pow(uint64_t e) const { return {ctx_, ctx_->pow(v_, e)}; }
  FqElement frobenius() const { return {ctx_, ctx_->frobenius(v_)}; }
  int quadratic_character() const { return ctx_->chi(v_); }

  bool operator==(const FqElement& o) const { return ctx_ == o.ctx_ && v_ == o.v_; }
  bool operator!=(const FqElement& o) const { return !(*this == o); }

 private:
  void check(const FqElement& o) const {
    if (ctx_ != o.ctx_) fail(errc::mismatched_context, "elements from different fields");
  }
  std::shared_ptr<const FqContext> ctx_;
  uint64_t v_ = 0;
};

}  // namespace k3kit
