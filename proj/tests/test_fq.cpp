// Copyright 2026 The k3kit Authors.
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "k3kit/fq.hpp"

using namespace k3kit;

TEST_CASE("context construction") {
  SECTION("prime field degenerates to modulus x") {
    auto ctx = make_context(3, 1);
    REQUIRE(ctx->modulus == std::vector<uint32_t>{0});
    REQUIRE(ctx->q == 3);
    REQUIRE(ctx->mul(2, 2) == 1);
  }
  SECTION("F_9 gets the lexicographically first irreducible x^2 + 1") {
    auto ctx = make_context(3, 2);
    REQUIRE(ctx->modulus == std::vector<uint32_t>{1, 0});
  }
  SECTION("F_{3^10} carries a full Zech table") {
    auto ctx = make_context(3, 10);
    REQUIRE(ctx->q == 59049);
    REQUIRE(ctx->has_zech);
    REQUIRE(ctx->exp_table.size() == ctx->q - 1);
    REQUIRE(ctx->zech_table.size() == ctx->q - 1);
  }
  SECTION("errors") {
    REQUIRE_THROWS_AS(make_context(4, 2), error);               // not prime
    REQUIRE_THROWS_AS(make_context(3, 30), error);              // over budget
  }
}

TEST_CASE("field axioms, exhaustive for small q") {
  for (auto [p, n] : std::vector<std::pair<uint32_t, int>>{{2, 1}, {3, 2}, {5, 1}, {3, 4}}) {
    auto ctx = make_context(p, n);
    uint64_t q = ctx->q;
    if (q > 81) continue;
    for (uint64_t a = 0; a < q; ++a) {
      REQUIRE(ctx->add(a, 0) == a);
      REQUIRE(ctx->mul(a, 1) == a);
      REQUIRE(ctx->add(a, ctx->neg(a)) == 0);
      if (a != 0) REQUIRE(ctx->mul(a, ctx->inv(a)) == 1);
      for (uint64_t b = 0; b < q; ++b) {
        REQUIRE(ctx->add(a, b) == ctx->add(b, a));
        REQUIRE(ctx->mul(a, b) == ctx->mul(b, a));
        for (uint64_t c = 0; c < std::min<uint64_t>(q, 16); ++c) {
          REQUIRE(ctx->mul(a, ctx->add(b, c)) == ctx->add(ctx->mul(a, b), ctx->mul(a, c)));
          REQUIRE(ctx->mul(ctx->mul(a, b), c) == ctx->mul(a, ctx->mul(b, c)));
        }
      }
    }
  }
}

TEST_CASE("frobenius iterates to the identity") {
  for (auto [p, n] : std::vector<std::pair<uint32_t, int>>{{3, 2}, {3, 6}, {5, 3}}) {
    auto ctx = make_context(p, n);
    for (uint64_t a = 0; a < ctx->q; ++a) {
      uint64_t v = a;
      for (int k = 0; k < n; ++k) v = ctx->frobenius(v);
      REQUIRE(v == a);
    }
  }
}

TEST_CASE("zech path agrees with the polynomial path") {
  auto ctx = make_context(3, 10);
  REQUIRE(ctx->has_zech);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100000; ++trial) {
    uint64_t a = rng() % ctx->q, b = rng() % ctx->q;
    REQUIRE(ctx->mul(a, b) == ctx->mul_poly_path(a, b));
  }
}

TEST_CASE("quadratic character") {
  auto f3 = make_context(3, 1);
  REQUIRE(f3->chi(0) == 0);
  REQUIRE(f3->chi(1) == 1);
  REQUIRE(f3->chi(2) == -1);

  auto f27 = make_context(3, 3);
  for (uint64_t e = 1; e < f27->q; ++e) REQUIRE(f27->chi(f27->mul(e, e)) == 1);

  // multiplicativity, exhaustive through q = 729
  for (auto [p, n] : std::vector<std::pair<uint32_t, int>>{{3, 2}, {7, 2}, {3, 6}}) {
    auto ctx = make_context(p, n);
    for (uint64_t a = 0; a < ctx->q; ++a) {
      REQUIRE(ctx->chi(ctx->frobenius(a)) == ctx->chi(a));
      if (ctx->q <= 729 || a < 64)
        for (uint64_t b = 0; b < std::min<uint64_t>(ctx->q, 729); ++b)
          REQUIRE(ctx->chi(ctx->mul(a, b)) == ctx->chi(a) * ctx->chi(b));
    }
  }
}

TEST_CASE("element wrapper") {
  auto ctx = make_context(3, 2);
  FqElement a(ctx, 4), b(ctx, 7);
  REQUIRE((a * a.inverse()).packed() == 1);
  REQUIRE((a + (-a)).is_zero());
  REQUIRE(a.pow(static_cast<uint64_t>(ctx->q) - 1).packed() == 1);
  REQUIRE_THROWS_AS(FqElement(ctx, 0).inverse(), error);
  auto other = make_context(3, 3);
  REQUIRE_THROWS_AS(a + FqElement(other, 1), error);
}
