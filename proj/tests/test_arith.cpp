// Copyright 2026 The k3kit Authors.
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "k3kit/arith.hpp"
#include "k3kit/matrix.hpp"
#include "k3kit/poly.hpp"

using namespace k3kit;

namespace {

Matrix<BigInt> mat3(std::initializer_list<long> v) {
  Matrix<BigInt> m(3, 3);
  auto it = v.begin();
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) m(i, j) = BigInt(*it++);
  return m;
}

}  // namespace

TEST_CASE("smith normal form on fixed inputs") {
  SECTION("identity") {
    auto snf = smith_normal_form(Matrix<BigInt>::identity(3));
    REQUIRE(snf.diag == std::vector<BigInt>{1, 1, 1});
  }
  SECTION("already diagonal with divisibility") {
    Matrix<BigInt> a(2, 2);
    a(0, 0) = 2;
    a(1, 1) = 4;
    auto snf = smith_normal_form(a);
    REQUIRE(snf.diag == std::vector<BigInt>{2, 4});
  }
  SECTION("Gram matrix of the rank-3 model, d=1 p=3 i=1 c=0") {
    // invariant factors (1, 1, 18): a cyclic group of order 2dp^2 = 18
    auto snf = smith_normal_form(mat3({-2, -1, 0, -1, 0, 3, 0, 3, 0}));
    REQUIRE(snf.diag == std::vector<BigInt>{1, 1, 18});
  }
  SECTION("diagonal needing the divisibility fix") {
    Matrix<BigInt> a(2, 2);
    a(0, 0) = 4;
    a(1, 1) = 6;
    auto snf = smith_normal_form(a);
    REQUIRE(snf.diag == std::vector<BigInt>{2, 12});
  }
  SECTION("singular matrix gets trailing zeros") {
    auto snf = smith_normal_form(mat3({1, 2, 3, 2, 4, 6, 0, 0, 0}));
    REQUIRE(snf.diag.size() == 3);
    REQUIRE(snf.diag[1] == 0);
    REQUIRE(snf.diag[2] == 0);
  }
}

TEST_CASE("smith normal form reconstruction on random matrices") {
  std::mt19937_64 rng(20260809);
  std::uniform_int_distribution<int> entry(-50, 50);
  std::uniform_int_distribution<int> dim(1, 8);
  for (int trial = 0; trial < 60; ++trial) {
    size_t n = dim(rng), m = dim(rng);
    Matrix<BigInt> a(n, m);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < m; ++j) a(i, j) = entry(rng);
    auto snf = smith_normal_form(a);
    Matrix<BigInt> prod = snf.left * a * snf.right;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < m; ++j) {
        BigInt expect = (i == j && i < snf.diag.size()) ? snf.diag[i] : BigInt(0);
        REQUIRE(prod(i, j) == expect);
      }
    REQUIRE(abs_of(det(snf.left)) == 1);
    REQUIRE(abs_of(det(snf.right)) == 1);
    for (size_t i = 0; i + 1 < snf.diag.size(); ++i) {
      REQUIRE(snf.diag[i] >= 0);
      if (snf.diag[i] != 0) REQUIRE(snf.diag[i + 1] % snf.diag[i] == 0);
      else REQUIRE(snf.diag[i + 1] == 0);
    }
  }
}

TEST_CASE("quadratic residues") {
  REQUIRE(is_quadratic_residue(4, 5));
  REQUIRE_FALSE(is_quadratic_residue(2, 5));
  REQUIRE(is_quadratic_residue(29, 5));  // 29 = 4 mod 5
  REQUIRE_THROWS_AS(is_quadratic_residue(10, 5), error);
}

TEST_CASE("square ratio congruence solver") {
  SECTION("trivial x = 1") {
    for (int m : {2, 5, 12, 100, 243}) REQUIRE(square_ratio_solvable(1, 1, m));
  }
  SECTION("nonresidue mod 5") { REQUIRE_FALSE(square_ratio_solvable(2, 1, 5)); }
  SECTION("agrees with exhaustive search") {
    std::mt19937_64 rng(7);
    for (BigInt m = 2; m <= 500; ++m) {
      for (int rep = 0; rep < 3; ++rep) {
        BigInt a = rng() % (10 * static_cast<uint64_t>(m)) + 1;
        BigInt b = rng() % (10 * static_cast<uint64_t>(m)) + 1;
        if (gcd_of(a, m) != 1 && gcd_of(b, m) != 1) continue;  // outside the contract
        bool brute = false;
        for (BigInt x = 1; x < m && !brute; ++x) {
          if (gcd_of(x, m) != 1) continue;
          if (floor_mod(a - x * x * b, m) == 0) brute = true;
        }
        INFO("a=" << a.str() << " b=" << b.str() << " m=" << m.str());
        REQUIRE(square_ratio_solvable(a, b, m) == brute);
      }
    }
  }
  SECTION("(5, 29, 100) against brute force") {
    bool brute = false;
    for (int x = 1; x < 100; ++x) {
      if (std::gcd(x, 100) != 1) continue;
      if (((5 - x * x * 29) % 100 + 100) % 100 == 0) brute = true;
    }
    REQUIRE(square_ratio_solvable(5, 29, 100) == brute);
  }
  SECTION("unit against non-unit is plain false") {
    REQUIRE_FALSE(square_ratio_solvable(2, 1, 4));
    REQUIRE_FALSE(square_ratio_solvable(5, 29, 100));
  }
  SECTION("errors when both sides are non-units") {
    REQUIRE_THROWS_AS(square_ratio_solvable(2, 2, 4), error);
  }
}

TEST_CASE("euler phi and cyclotomic polynomials") {
  REQUIRE(euler_phi(1) == 1);
  REQUIRE(euler_phi(12) == 4);
  REQUIRE(cyclotomic_polynomial(1) == IntPoly({std::vector<BigInt>{-1, 1}}));
  REQUIRE(cyclotomic_polynomial(2) == IntPoly({std::vector<BigInt>{1, 1}}));
  REQUIRE(cyclotomic_polynomial(12) == IntPoly({std::vector<BigInt>{1, 0, -1, 0, 1}}));

  for (int m = 1; m <= 120; ++m) {
    IntPoly phi = cyclotomic_polynomial(m);
    REQUIRE(BigInt(phi.degree()) == euler_phi(m));
    REQUIRE(phi.leading() == 1);
    IntPoly q;
    REQUIRE(divides_monic(poly_x_pow_minus_one(m), phi, &q));
  }
}

TEST_CASE("primality and factorization") {
  REQUIRE(is_prime(2));
  REQUIRE(is_prime(59049 + 2));  // 3^10 + 2 = 59051 = ... check against factorize
  REQUIRE_FALSE(is_prime(BigInt(59049)));
  BigInt n = BigInt(2) * 3 * 3 * 924 * 1863673;
  BigInt back = 1;
  for (auto& [p, e] : factorize(n)) {
    REQUIRE(is_prime(p));
    for (int i = 0; i < e; ++i) back *= p;
  }
  REQUIRE(back == n);
}
