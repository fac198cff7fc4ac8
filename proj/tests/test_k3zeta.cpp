// Copyright 2026 The k3kit Authors.
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "k3kit/k3zeta.hpp"
#include "k3kit/pencil_io.hpp"
#include "reference_data.hpp"

using namespace k3kit;

namespace {

K3Pencil pencil_diag(std::initializer_list<int> diag) {
  Matrix<BigInt> m1(6, 6), zero(6, 6);
  int i = 0;
  for (int v : diag) m1(i, i) = v, ++i;
  return make_pencil(m1, zero, zero);
}

K3Pencil paper_pencil() { return load_pencil_file(refdata::pencil_path()); }

// x^6 = -det(x M1) needs det(M1) = -1
K3Pencil pencil_x6() { return pencil_diag({-1, 1, 1, 1, 1, 1}); }

// #S(F_q) by direct enumeration of P(1,1,1,3): scalars act freely away from
// [0:0:0:1], which never lies on S, so orbits all have size q - 1.
BigInt count_weighted_oracle(const K3Pencil& pencil, uint32_t p, int n) {
  auto ctx = make_context(p, n);
  const FqContext& f = *ctx;
  uint64_t q = f.q;
  auto tab = pencil.sextic.terms();
  auto eval = [&](uint64_t x, uint64_t y, uint64_t z) {
    uint64_t acc = 0;
    for (const auto& [m, c] : tab) {
      uint64_t cm = static_cast<uint64_t>(floor_mod(num(c), BigInt(p)));
      uint64_t term = cm;
      for (int e = 0; e < m.i; ++e) term = f.mul_poly_path(term, x);
      for (int e = 0; e < m.j; ++e) term = f.mul_poly_path(term, y);
      for (int e = 0; e < m.k; ++e) term = f.mul_poly_path(term, z);
      acc = f.add(acc, term);
    }
    return acc;
  };
  uint64_t solutions = 0;
  for (uint64_t x = 0; x < q; ++x)
    for (uint64_t y = 0; y < q; ++y)
      for (uint64_t z = 0; z < q; ++z)
        for (uint64_t w = 0; w < q; ++w) {
          if (x == 0 && y == 0 && z == 0 && w == 0) continue;
          if (f.mul_poly_path(w, w) == eval(x, y, z)) ++solutions;
        }
  REQUIRE(solutions % (q - 1) == 0);
  return BigInt(solutions / (q - 1));
}

std::vector<BigInt> power_sums_from_poly(const IntPoly& f, int how_many) {
  // forward Newton: p_k = e_1 p_{k-1} - ... + (-1)^{k-1} k e_k
  int deg = f.degree();
  std::vector<BigInt> e(how_many + 1, BigInt(0));
  for (int k = 0; k <= how_many && k <= deg; ++k)
    e[k] = (k % 2 == 0 ? f.coeff(deg - k) : -f.coeff(deg - k));
  std::vector<BigInt> ps(how_many + 1, BigInt(0));
  for (int k = 1; k <= how_many; ++k) {
    BigInt s = 0;
    for (int i = 1; i < k; ++i) s += (i % 2 == 1 ? e[i] * ps[k - i] : -e[i] * ps[k - i]);
    ps[k] = s + (k % 2 == 1 ? BigInt(k) * e[k] : -BigInt(k) * e[k]);
  }
  return std::vector<BigInt>(ps.begin() + 1, ps.end());
}

}  // namespace

TEST_CASE("sextic from pencil") {
  SECTION("diagonal pencil gives -x^6 for the identity") {
    Matrix<BigInt> zero(6, 6);
    K3Pencil p = make_pencil(Matrix<BigInt>::identity(6), zero, zero);
    REQUIRE(p.sextic == TriPoly::monomial(BigRat(-1), Monomial{6, 0, 0}));
  }
  SECTION("degenerate pencil is rejected") {
    Matrix<BigInt> zero(6, 6);
    REQUIRE_THROWS_AS(make_pencil(zero, zero, zero), error);
    Matrix<BigInt> asym(6, 6);
    asym(0, 1) = 1;
    REQUIRE_THROWS_AS(make_pencil(asym, zero, zero), error);
  }
  SECTION("shipped pencil: 28 monomials, reduction mod 3 factors as printed") {
    K3Pencil p = paper_pencil();
    REQUIRE(p.sextic.terms().size() == 28);
    REQUIRE(p.sextic.is_homogeneous(6));
    // (x + 2z) * (quintic) + (x^2 y + y^3)^2, all mod 3
    TriPoly x = TriPoly::var_x(), y = TriPoly::var_y(), z = TriPoly::var_z();
    auto P = [](int e, const TriPoly& b) {
      TriPoly r(1);
      for (int i = 0; i < e; ++i) r *= b;
      return r;
    };
    TriPoly quintic = P(4, x) * y + P(3, x) * P(2, y) * 2 + P(3, x) * P(2, z) * 2 +
                      P(2, x) * P(3, y) * 2 + P(2, x) * P(3, z) + x * P(4, y) * 2 +
                      x * P(3, y) * z + x * P(2, y) * P(2, z) * 2 + x * y * P(3, z) +
                      P(4, y) * z * 2 + P(3, y) * P(2, z) + P(5, z) * 2;
    TriPoly display = (x + z * 2) * quintic + P(2, x * x * y + P(3, y));
    TriPoly diff = p.sextic - display;
    for (const auto& [m, c] : diff.terms()) {
      REQUIRE(den(c) == 1);
      REQUIRE(num(c) % 3 == 0);
    }
  }
  SECTION("shipped pencil minors reproduce the printed quintet") {
    std::vector<TriPoly> minors = pencil_minors(paper_pencil());
    std::vector<TriPoly> want = refdata::expected_minors();
    for (size_t i = 0; i < want.size(); ++i) REQUIRE(minors[i] == want[i]);
  }
}

TEST_CASE("point counts") {
  SECTION("w^2 = x^6 over F_3 has 22 points") {
    REQUIRE(count_points(pencil_x6(), 3, 1) == 22);
  }
  SECTION("weighted-projective oracle agrees for tiny fields") {
    for (const K3Pencil& p : {pencil_x6(), paper_pencil()}) {
      REQUIRE(count_points(p, 3, 1) == count_weighted_oracle(p, 3, 1));
      REQUIRE(count_points(p, 3, 2) == count_weighted_oracle(p, 3, 2));
    }
  }
  SECTION("matches the frozen counts and the naive oracle") {
    K3Pencil p = paper_pencil();
    std::vector<BigInt> want = refdata::expected_counts_p3();
    for (int n = 1; n <= 4; ++n) {
      BigInt fast = count_points(p, 3, n);
      REQUIRE(fast == want[n - 1]);
      REQUIRE(fast == count_points_naive(p, 3, n));
    }
  }
  SECTION("galois-orbit fast path agrees with the direct loop") {
    K3Pencil p = paper_pencil();
    CountOptions orbits;
    orbits.galois_orbits = true;
    for (int n = 1; n <= 5; ++n)
      REQUIRE(count_points(p, 3, n, orbits) == refdata::expected_counts_p3()[n - 1]);
  }
  SECTION("thread partition does not change the sum") {
    K3Pencil p = paper_pencil();
    CountOptions two;
    two.threads = 2;
    REQUIRE(count_points(p, 3, 4, two) == refdata::expected_counts_p3()[3]);
  }
  SECTION("budget is enforced") {
    CountOptions tiny;
    tiny.point_budget = 100;
    REQUIRE_THROWS_AS(count_points(paper_pencil(), 3, 4, tiny), error);
  }
}

TEST_CASE("traces from counts") {
  PointCounts synthetic{3, {}};
  for (int n = 1; n <= 3; ++n)
    synthetic.counts.push_back(1 + pow_of(BigInt(3), 2 * n) + 22 * pow_of(BigInt(3), n));
  std::vector<BigInt> t = traces_from_counts(synthetic);
  for (int n = 1; n <= 3; ++n) REQUIRE(t[n - 1] == 22 * pow_of(BigInt(3), n));

  PointCounts one{3, {BigInt(15)}};
  REQUIRE(traces_from_counts(one)[0] == 5);
}

TEST_CASE("weil polynomial reconstruction") {
  IntPoly t_minus_3(std::vector<BigInt>{-3, 1});
  SECTION("all eigenvalues p") {
    std::vector<BigInt> traces;
    for (int n = 1; n <= 10; ++n) traces.push_back(22 * pow_of(BigInt(3), n));
    WeilPolynomial w = reconstruct_weil_poly(traces, 3, {{t_minus_3, 1}});
    IntPoly want = IntPoly::constant(1);
    for (int i = 0; i < 22; ++i) want = want * t_minus_3;
    REQUIRE(w.f == want);
    REQUIRE(w.sign == 1);
  }
  SECTION("frozen counts reproduce the printed normalized polynomial") {
    PointCounts pc{3, refdata::expected_counts_p3()};
    WeilPolynomial w =
        reconstruct_weil_poly(traces_from_counts(pc), 3, {{t_minus_3, 2}});
    ScaledPoly f3 = normalize_weil(w.f, 3);
    REQUIRE(f3.den == 3);
    REQUIRE(f3.coeffs == refdata::expected_f3_times_3());
    REQUIRE(w.sign == 1);

    // the polynomial's own power sums give back the traces
    std::vector<BigInt> ps = power_sums_from_poly(w.f, 10);
    REQUIRE(ps == traces_from_counts(pc));

    // counts implied for n <= 10 equal the frozen ones (Galois consistency)
    for (int n = 1; n <= 10; ++n)
      REQUIRE(pc.counts[n - 1] == 1 + pow_of(BigInt(9), n) + ps[n - 1]);
  }
  SECTION("round trip through normalization") {
    PointCounts pc{3, refdata::expected_counts_p3()};
    WeilPolynomial w =
        reconstruct_weil_poly(traces_from_counts(pc), 3, {{t_minus_3, 2}});
    REQUIRE(denormalize_weil(normalize_weil(w.f, 3), 3) == w.f);
  }
  SECTION("perturbed traces are rejected") {
    PointCounts pc{3, refdata::expected_counts_p3()};
    std::vector<BigInt> traces = traces_from_counts(pc);
    traces[4] += 1;
    REQUIRE_THROWS_AS(reconstruct_weil_poly(traces, 3, {{t_minus_3, 2}}), error);
  }
  SECTION("nine traces are not enough") {
    PointCounts pc{3, refdata::expected_counts_p3()};
    std::vector<BigInt> traces = traces_from_counts(pc);
    traces.pop_back();
    REQUIRE_THROWS_AS(reconstruct_weil_poly(traces, 3, {{t_minus_3, 2}}), error);
  }
  SECTION("the hyperplane factor is mandatory") {
    PointCounts pc{3, refdata::expected_counts_p3()};
    REQUIRE_THROWS_AS(reconstruct_weil_poly(traces_from_counts(pc), 3, {}), error);
  }
}

TEST_CASE("cyclotomic root counting") {
  SECTION("(t-1)(t+1) has two") {
    ScaledPoly f{IntPoly(std::vector<BigInt>{-1, 0, 1}), 1};
    REQUIRE(count_cyclotomic_roots(f) == 2);
  }
  SECTION("t^2 - 2 has none") {
    ScaledPoly f{IntPoly(std::vector<BigInt>{-2, 0, 1}), 1};
    REQUIRE(count_cyclotomic_roots(f) == 0);
  }
  SECTION("the printed normalized polynomial has exactly two") {
    ScaledPoly f3{refdata::expected_f3_times_3(), 3};
    REQUIRE(count_cyclotomic_roots(f3) == 2);
  }
  SECTION("(t-3)^22 normalized has twenty-two") {
    IntPoly t_minus_3(std::vector<BigInt>{-3, 1});
    IntPoly f = IntPoly::constant(1);
    for (int i = 0; i < 22; ++i) f = f * t_minus_3;
    REQUIRE(count_cyclotomic_roots(normalize_weil(f, 3)) == 22);
  }
}

TEST_CASE("tritangent search") {
  SECTION("shipped pencil over F_3 finds x + 2z") {
    TritangentReport r = tritangent_search(paper_pencil(), 3, 1);
    bool found = false;
    for (const auto& line : r.lines)
      if (line.line == std::array<uint64_t, 3>{1, 0, 2}) found = true;
    REQUIRE(found);
    // every reported line carries a verified square witness
    for (const auto& line : r.lines) {
      REQUIRE(line.s_multiplicity % 2 == 0);
      REQUIRE(line.constant != 0);
    }
  }
  SECTION("shipped pencil over F_5 finds nothing") {
    REQUIRE(tritangent_search(paper_pencil(), 5, 1).lines.empty());
  }
  SECTION("w^2 = x^6: every line restricts to a sixth power") {
    TritangentReport r = tritangent_search(pencil_x6(), 3, 1);
    REQUIRE(r.lines.size() == 13);
  }
  SECTION("budget") {
    REQUIRE_THROWS_AS(tritangent_search(paper_pencil(), 3, 1, 5), error);
  }
}
