// Copyright 2026 The k3kit Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Degree-two K3 surfaces w^2 = -det(x M1 + y M2 + z M3): point counts over
// F_{p^n}, Frobenius characteristic-polynomial reconstruction, Picard-rank
// bounds and tritangent-line searches.

#pragma once

#include <Eigen/Eigenvalues>

#include <array>
#include <cstdlib>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include "k3kit/arith.hpp"
#include "k3kit/bigint.hpp"
#include "k3kit/clifford.hpp"
#include "k3kit/errors.hpp"
#include "k3kit/fq.hpp"
#include "k3kit/matrix.hpp"
#include "k3kit/poly.hpp"
#include "k3kit/tripoly.hpp"

namespace k3kit {

// ---- pencils ---------------------------------------------------------------

struct K3Pencil {
  Matrix<BigInt> m1, m2, m3;
  TriPoly sextic;  // -det(x M1 + y M2 + z M3), homogeneous of degree 6

  Matrix<TriPoly> linear_matrix() const {
    Matrix<TriPoly> m(6, 6);
    for (size_t i = 0; i < 6; ++i)
      for (size_t j = 0; j < 6; ++j)
        m(i, j) = TriPoly::var_x().scaled(BigRat(m1(i, j))) +
                  TriPoly::var_y().scaled(BigRat(m2(i, j))) +
                  TriPoly::var_z().scaled(BigRat(m3(i, j)));
    return m;
  }

  Matrix<BigRat> matrix_at(const BigRat& x, const BigRat& y, const BigRat& z) const {
    Matrix<BigRat> m(6, 6);
    for (size_t i = 0; i < 6; ++i)
      for (size_t j = 0; j < 6; ++j)
        m(i, j) = BigRat(m1(i, j)) * x + BigRat(m2(i, j)) * y + BigRat(m3(i, j)) * z;
    return m;
  }
};

inline K3Pencil make_pencil(Matrix<BigInt> m1, Matrix<BigInt> m2, Matrix<BigInt> m3) {
  for (const auto* m : {&m1, &m2, &m3}) {
    if (m->rows() != 6 || m->cols() != 6)
      fail(errc::invalid_pencil, "pencil matrices must be 6x6");
    if (!m->is_symmetric()) fail(errc::invalid_pencil, "pencil matrices must be symmetric");
  }
  K3Pencil p{std::move(m1), std::move(m2), std::move(m3), TriPoly()};
  p.sextic = -det(p.linear_matrix());
  if (p.sextic.is_zero()) fail(errc::degenerate_pencil, "det(x M1 + y M2 + z M3) is identically zero");
  if (!p.sextic.is_homogeneous(6)) fail(errc::inconsistent, "branch sextic is not homogeneous");
  return p;
}

inline TriPoly sextic_from_pencil(const K3Pencil& p) { return p.sextic; }

inline std::vector<TriPoly> pencil_minors(const K3Pencil& p) {
  return leading_principal_minors(p.linear_matrix());
}

// ---- point counting --------------------------------------------------------

inline uint64_t default_point_budget() {
  if (const char* env = std::getenv("K3KIT_BUDGET_POINTS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 4'000'000'000ULL;
}

struct CountOptions {
  int threads = 1;
  uint64_t point_budget = default_point_budget();
  bool galois_orbits = false;  // orbit fast path, validated against the direct loop
};

namespace detail {

// coefficient tables of the sextic modulo p, collapsed for the two charts
struct ModpSextic {
  // chart z = 1: coefficient of x^i y^j
  std::array<std::array<uint32_t, 7>, 7> xy{};
  // line z = 0, y = 1: coefficient of x^i
  std::array<uint32_t, 7> x_inf{};

  static ModpSextic from(const TriPoly& f, uint32_t p) {
    ModpSextic t;
    for (const auto& [m, c] : f.terms()) {
      if (den(c) != 1) fail(errc::inconsistent, "sextic with non-integer coefficient");
      uint32_t cm = static_cast<uint32_t>(floor_mod(num(c), BigInt(p)));
      t.xy[m.i][m.j] = (t.xy[m.i][m.j] + cm) % p;
      if (m.k == 0) t.x_inf[m.i] = (t.x_inf[m.i] + cm) % p;
    }
    return t;
  }
};

// Horner sum over all x in F_q of 1 + chi(sum_i c_i x^i), Zech-log kernel.
inline uint64_t slice_sum_zech(const FqContext& ctx, const std::array<uint32_t, 7>& clog) {
  const uint32_t* zech = ctx.zech_table.data();
  const uint64_t qm1 = ctx.q - 1;
  const uint32_t none = FqContext::kNoLog;
  uint64_t total = 0;
  // x = 0 contributes via the constant coefficient
  total += clog[0] == none ? 1 : (clog[0] % 2 == 0 ? 2 : 0);
  for (uint64_t t = 0; t < qm1; ++t) {
    uint32_t acc = clog[6];
    for (int i = 5; i >= 0; --i) {
      if (acc != none) {
        uint64_t e = acc + t;  // multiply by x
        if (e >= qm1) e -= qm1;
        acc = static_cast<uint32_t>(e);
      }
      uint32_t c = clog[i];
      if (c == none) continue;
      if (acc == none) {
        acc = c;
        continue;
      }
      uint64_t diff = c >= acc ? c - acc : c + qm1 - acc;
      uint32_t zl = zech[diff];
      if (zl == none) {
        acc = none;
      } else {
        uint64_t e = acc + zl;
        if (e >= qm1) e -= qm1;
        acc = static_cast<uint32_t>(e);
      }
    }
    total += acc == none ? 1 : (acc % 2 == 0 ? 2 : 0);
  }
  return total;
}

// Same sum along the packed-representation path, for fields without tables.
inline uint64_t slice_sum_packed(const FqContext& ctx, const std::array<uint64_t, 7>& c) {
  uint64_t total = 0;
  for (uint64_t x = 0; x < ctx.q; ++x) {
    uint64_t acc = c[6];
    for (int i = 5; i >= 0; --i) acc = ctx.add(ctx.mul_poly_path(acc, x), c[i]);
    total += 1 + ctx.chi(acc);
  }
  return total;
}

}  // namespace detail

// #S(F_{p^n}) for S in P(1,1,1,3) with w^2 = f: every base point of P^2
// contributes 1 + chi(f(P)) points, and [0:0:0:1] does not lie on S.
inline BigInt count_points(const K3Pencil& pencil, uint32_t p, int n,
                           const CountOptions& opts = {}) {
  auto ctx = make_context(p, n);
  const uint64_t q = ctx->q;
  // ceiling check against the configured enumeration budget
  if (q > opts.point_budget / q)
    fail(errc::budget_exceeded, "P^2(F_q) has more than the budgeted number of points");
  detail::ModpSextic tab = detail::ModpSextic::from(pencil.sextic, p);

  int threads = std::max(1, opts.threads);
  std::vector<uint64_t> partial(threads, 0);

  auto worker = [&](int tid) {
    const FqContext& f = *ctx;
    uint64_t sum = 0;
    for (uint64_t y = tid; y < q; y += threads) {
      uint64_t mult = 1;
      if (opts.galois_orbits) {
        // slice sums are Frobenius-invariant; keep only minimal orbit reps
        uint64_t conj = f.frobenius(y);
        bool minimal = true;
        uint64_t size = 1;
        while (conj != y) {
          if (conj < y) { minimal = false; break; }
          ++size;
          conj = f.frobenius(conj);
        }
        if (!minimal) continue;
        mult = size;
      }
      // coefficients of f(x, y, 1) as a polynomial in x
      uint64_t ypow[7];
      ypow[0] = 1;
      for (int j = 1; j <= 6; ++j) ypow[j] = f.mul(ypow[j - 1], y);
      if (f.has_zech) {
        std::array<uint32_t, 7> clog;
        for (int i = 0; i <= 6; ++i) {
          uint64_t c = 0;
          for (int j = 0; j + i <= 6; ++j)
            if (tab.xy[i][j]) c = f.add(c, f.mul(tab.xy[i][j], ypow[j]));
          clog[i] = c == 0 ? FqContext::kNoLog : f.log_table[c];
        }
        sum += mult * detail::slice_sum_zech(f, clog);
      } else {
        std::array<uint64_t, 7> c{};
        for (int i = 0; i <= 6; ++i)
          for (int j = 0; j + i <= 6; ++j)
            if (tab.xy[i][j]) c[i] = f.add(c[i], f.mul_poly_path(tab.xy[i][j], ypow[j]));
        sum += mult * detail::slice_sum_packed(f, c);
      }
    }
    partial[tid] = sum;
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& t : pool) t.join();
  }

  uint64_t total = 0;
  for (uint64_t s : partial) total += s;

  // line at infinity [x:1:0] and the point [1:0:0]
  const FqContext& f = *ctx;
  if (f.has_zech) {
    std::array<uint32_t, 7> clog;
    for (int i = 0; i <= 6; ++i)
      clog[i] = tab.x_inf[i] == 0 ? FqContext::kNoLog : f.log_table[tab.x_inf[i]];
    total += detail::slice_sum_zech(f, clog);
  } else {
    std::array<uint64_t, 7> c{};
    for (int i = 0; i <= 6; ++i) c[i] = tab.x_inf[i];
    total += detail::slice_sum_packed(f, c);
  }
  total += 1 + f.chi(tab.xy[6][0]);  // f(1, 0, 0)
  return BigInt(total);
}

// Independent slow oracle: same charts, generic modular arithmetic, no tables.
inline BigInt count_points_naive(const K3Pencil& pencil, uint32_t p, int n,
                                 uint64_t point_budget = default_point_budget()) {
  auto ctx = make_context(p, n);
  const FqContext& f = *ctx;
  const uint64_t q = f.q;
  if (q > point_budget / q) fail(errc::budget_exceeded, "field too large for naive count");
  detail::ModpSextic tab = detail::ModpSextic::from(pencil.sextic, p);
  auto eval_xy = [&](uint64_t x, uint64_t y) {
    uint64_t acc = 0;
    uint64_t xp = 1;
    for (int i = 0; i <= 6; ++i) {
      uint64_t yp = 1;
      for (int j = 0; j + i <= 6; ++j) {
        if (tab.xy[i][j])
          acc = f.add(acc, f.mul_poly_path(tab.xy[i][j], f.mul_poly_path(xp, yp)));
        yp = f.mul_poly_path(yp, y);
      }
      xp = f.mul_poly_path(xp, x);
    }
    return acc;
  };
  auto chi_packed = [&](uint64_t v) {
    if (v == 0) return 0;
    uint64_t acc = 1, base = v, e = (q - 1) / 2;
    while (e) {
      if (e & 1) acc = f.mul_poly_path(acc, base);
      base = f.mul_poly_path(base, base);
      e >>= 1;
    }
    return acc == 1 ? 1 : -1;
  };
  BigInt total = 0;
  for (uint64_t x = 0; x < q; ++x)
    for (uint64_t y = 0; y < q; ++y) total += 1 + chi_packed(eval_xy(x, y));
  for (uint64_t x = 0; x < q; ++x) {
    uint64_t acc = 0, xp = 1;
    for (int i = 0; i <= 6; ++i) {
      if (tab.x_inf[i]) acc = f.add(acc, f.mul_poly_path(tab.x_inf[i], xp));
      xp = f.mul_poly_path(xp, x);
    }
    total += 1 + chi_packed(acc);
  }
  total += 1 + chi_packed(tab.xy[6][0]);
  return total;
}

struct PointCounts {
  uint32_t p = 0;
  std::vector<BigInt> counts;  // counts[i] = #S(F_{p^{i+1}})
};

inline PointCounts compute_counts(const K3Pencil& pencil, uint32_t p, int n_max,
                                  const CountOptions& opts = {}) {
  PointCounts pc{p, {}};
  for (int n = 1; n <= n_max; ++n) pc.counts.push_back(count_points(pencil, p, n, opts));
  return pc;
}

// Lefschetz: #S(F_{q}) = 1 + q^2 + tr(Frob^n | H^2), so t_n = N_n - 1 - p^{2n}.
inline std::vector<BigInt> traces_from_counts(const PointCounts& pc) {
  if (pc.counts.empty()) fail(errc::invalid_argument, "no counts supplied");
  std::vector<BigInt> t;
  BigInt p2(uint64_t(pc.p) * pc.p);
  BigInt q2 = 1;
  for (const BigInt& nn : pc.counts) {
    q2 *= p2;
    t.push_back(nn - 1 - q2);
  }
  return t;
}

// ---- Weil polynomial reconstruction ----------------------------------------

struct WeilPolynomial {
  IntPoly f;  // monic, degree 22
  BigInt p;
  int sign = 1;                                  // functional-equation sign
  std::vector<std::pair<IntPoly, int>> known_factors;  // (monic factor, multiplicity)
};

// normalized polynomial p^{-22} f(p t), kept exact as coeffs/den
struct ScaledPoly {
  IntPoly coeffs;
  BigInt den;
};

namespace detail {

inline bool weil_bound_holds(const IntPoly& f, const BigInt& p, double tol = 1e-6) {
  int deg = f.degree();
  // roots of p^{-deg} f(p t); all should sit on the unit circle
  std::vector<double> c(deg + 1);
  BigRat pk(1);
  for (int k = 0; k <= deg; ++k) {
    c[k] = static_cast<double>(BigRat(f.coeff(deg - k)) / pk);  // coefficient of t^{deg-k}, scaled
    pk *= BigRat(p);
  }
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -c[deg - i];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  double pd = static_cast<double>(p);
  for (int i = 0; i < deg; ++i) {
    double abs_root = std::abs(solver.eigenvalues()[i]) * pd;
    if (std::abs(abs_root - pd) > tol) return false;
  }
  return true;
}

}  // namespace detail

// Reconstructs the degree-22 Frobenius characteristic polynomial from the
// first ten power sums. Newton's identities fix c_1..c_10; the functional
// equation c_{22-k} = sign * p^{22-2k} c_k fixes the upper half, with the
// middle coefficient supplied by f(p) = 0 (sign +1) or forced to zero
// (sign -1). Candidates must pass the known-factor and Weil-bound checks.
inline WeilPolynomial reconstruct_weil_poly(const std::vector<BigInt>& traces, const BigInt& p,
                                            std::vector<std::pair<IntPoly, int>> known_factors) {
  if (traces.size() != 10)
    fail(errc::invalid_argument,
         "need exactly 10 traces, got " + std::to_string(traces.size()));
  IntPoly t_minus_p(std::vector<BigInt>{-p, 1});
  bool has_hyperplane = false;
  for (const auto& [fac, mult] : known_factors) {
    if (fac == t_minus_p && mult >= 1) has_hyperplane = true;
    if (fac.degree() < 1 || fac.leading() != 1)
      fail(errc::invalid_argument, "known factors must be monic and nonconstant");
  }
  if (!has_hyperplane)
    fail(errc::invalid_argument, "known factors must include (t - p) for the hyperplane class");

  // Newton's identities: k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} t_i
  std::vector<BigRat> e(11, BigRat(0));
  e[0] = 1;
  for (int k = 1; k <= 10; ++k) {
    BigRat s(0);
    for (int i = 1; i <= k; ++i) {
      BigRat term = e[k - i] * BigRat(traces[i - 1]);
      s += (i % 2 == 1) ? term : -term;
    }
    e[k] = s / BigRat(k);
    if (den(e[k]) != 1)
      fail(errc::inconsistent, "traces are not the power sums of an integer polynomial");
  }
  std::vector<BigInt> c(23, BigInt(0));  // c[k] multiplies t^{22-k}
  c[0] = 1;
  for (int k = 1; k <= 10; ++k) c[k] = (k % 2 == 0 ? num(e[k]) : -num(e[k]));

  std::vector<WeilPolynomial> survivors;
  for (int sign : {+1, -1}) {
    std::vector<BigInt> ck = c;
    if (sign == -1) {
      ck[11] = 0;
    } else {
      // f(p) = 2 sum_{k=0}^{10} c_k p^{22-k} + c_11 p^11 = 0
      BigInt s(0);
      for (int k = 0; k <= 10; ++k) s += ck[k] * pow_of(p, static_cast<unsigned>(11 - k));
      ck[11] = -2 * s;
    }
    for (int j = 12; j <= 22; ++j)
      ck[j] = BigInt(sign) * pow_of(p, static_cast<unsigned>(2 * j - 22)) * ck[22 - j];
    std::vector<BigInt> low_first(23);
    for (int k = 0; k <= 22; ++k) low_first[22 - k] = ck[k];
    IntPoly f(std::move(low_first));

    bool ok = true;
    IntPoly rest = f;
    for (const auto& [fac, mult] : known_factors) {
      for (int m = 0; m < mult && ok; ++m) {
        IntPoly quotient;
        if (!divides_monic(rest, fac, &quotient)) ok = false;
        else rest = quotient;
      }
    }
    if (ok) ok = detail::weil_bound_holds(f, p);
    if (ok) survivors.push_back(WeilPolynomial{f, p, sign, known_factors});
  }
  if (survivors.empty())
    fail(errc::inconsistent, "no sign candidate passes the known-factor and Weil-bound checks");
  if (survivors.size() > 1)
    fail(errc::ambiguous_reconstruction, "both functional-equation signs survive all checks");
  return survivors.front();
}

// f_p(t) = p^{-22} f(p t), exact; den is the minimal positive denominator.
inline ScaledPoly normalize_weil(const IntPoly& f, const BigInt& p) {
  int deg = f.degree();
  // p^{-deg} f(p t) = (1/p^deg) * sum_j a_j p^j t^j
  std::vector<BigInt> scaled(deg + 1);
  BigInt pj = 1;
  for (int j = 0; j <= deg; ++j) {
    scaled[j] = f.coeff(j) * pj;
    pj *= p;
  }
  BigInt d = pow_of(p, static_cast<unsigned>(deg));
  // cancel the common p-power
  while (d % p == 0) {
    bool all = true;
    for (const auto& v : scaled)
      if (v % p != 0) { all = false; break; }
    if (!all) break;
    for (auto& v : scaled) v /= p;
    d /= p;
  }
  return ScaledPoly{IntPoly(std::move(scaled)), d};
}

inline IntPoly denormalize_weil(const ScaledPoly& fp, const BigInt& p) {
  int deg = fp.coeffs.degree();
  std::vector<BigInt> out(deg + 1);
  BigInt pk = 1;  // p^{deg-j}, built from the top coefficient down
  for (int j = deg; j >= 0; --j) {
    BigInt v = fp.coeffs.coeff(j) * pk;
    if (v % fp.den != 0) fail(errc::inconsistent, "denormalization is not integral");
    out[j] = v / fp.den;
    pk *= p;
  }
  return IntPoly(std::move(out));
}

// Number of roots of f_p that are roots of unity, counted with multiplicity:
// trial division by cyclotomic polynomials Phi_m with phi(m) <= deg.
inline int count_cyclotomic_roots(const ScaledPoly& fp) {
  if (fp.coeffs.is_zero()) fail(errc::invalid_argument, "zero polynomial");
  IntPoly rest = fp.coeffs;  // scaling does not change roots
  int deg = rest.degree();
  int total = 0;
  for (int m = 1; m <= 3 * std::max(deg, 1); ++m) {
    if (euler_phi(BigInt(m)) > deg) continue;
    IntPoly phi = cyclotomic_polynomial(BigInt(m));
    for (;;) {
      IntPoly q;
      if (!divides_monic(rest, phi, &q)) break;
      rest = q;
      total += phi.degree();
    }
  }
  return total;
}

// Upper bound for the geometric Picard rank of the reduction mod p.
inline int picard_bound(const K3Pencil& pencil, uint32_t p, int n_max,
                        std::vector<std::pair<IntPoly, int>> known_factors,
                        const CountOptions& opts = {}) {
  PointCounts counts = compute_counts(pencil, p, n_max, opts);
  WeilPolynomial w = reconstruct_weil_poly(traces_from_counts(counts), BigInt(p),
                                           std::move(known_factors));
  return count_cyclotomic_roots(normalize_weil(w.f, w.p));
}

// ---- tritangent lines -------------------------------------------------------

struct TritangentLine {
  std::array<uint64_t, 3> line;   // packed coefficients [a:b:c], first nonzero = 1
  std::vector<uint64_t> cubic;    // monic square root g_0(t), packed, lowest first
  uint64_t constant = 0;          // restriction = constant * (s-power * g_0)^2
  int s_multiplicity = 0;         // multiplicity of the root at infinity (even)
};

struct TritangentReport {
  uint32_t p = 0;
  int k = 1;
  std::shared_ptr<const FqContext> ctx;
  std::vector<TritangentLine> lines;
};

namespace detail {

// restriction of the sextic to the line through s*u + t*v as F_r = coeff of
// s^{6-r} t^r
inline std::array<uint64_t, 7> restrict_to_line(const FqContext& f,
                                                const std::vector<std::array<uint64_t, 3>>& terms,
                                                const std::vector<uint32_t>& coefs,
                                                const std::array<uint64_t, 3>& u,
                                                const std::array<uint64_t, 3>& v) {
  static const uint64_t binom[7][7] = {
      {1, 0, 0, 0, 0, 0, 0},      {1, 1, 0, 0, 0, 0, 0},      {1, 2, 1, 0, 0, 0, 0},
      {1, 3, 3, 1, 0, 0, 0},      {1, 4, 6, 4, 1, 0, 0},      {1, 5, 10, 10, 5, 1, 0},
      {1, 6, 15, 20, 15, 6, 1}};
  // (s*uc + t*vc)^e as a vector over r
  auto linear_power = [&](uint64_t uc, uint64_t vc, int e) {
    std::vector<uint64_t> out(e + 1, 0);
    for (int r = 0; r <= e; ++r) {
      uint64_t term = f.mul(f.pow(uc, e - r), f.pow(vc, r));
      term = f.mul(term, binom[e][r] % f.p);
      out[r] = term;
    }
    return out;
  };
  std::array<uint64_t, 7> acc{};
  for (size_t idx = 0; idx < terms.size(); ++idx) {
    auto [ei, ej, ek] = terms[idx];
    auto px = linear_power(u[0], v[0], static_cast<int>(ei));
    auto py = linear_power(u[1], v[1], static_cast<int>(ej));
    auto pz = linear_power(u[2], v[2], static_cast<int>(ek));
    // convolve the three expansions
    std::vector<uint64_t> xy(px.size() + py.size() - 1, 0);
    for (size_t a = 0; a < px.size(); ++a)
      for (size_t b = 0; b < py.size(); ++b) xy[a + b] = f.add(xy[a + b], f.mul(px[a], py[b]));
    for (size_t a = 0; a < xy.size(); ++a)
      for (size_t b = 0; b < pz.size(); ++b) {
        uint64_t t = f.mul(coefs[idx], f.mul(xy[a], pz[b]));
        acc[a + b] = f.add(acc[a + b], t);
      }
  }
  return acc;
}

// monic square root of a monic even-degree polynomial, if one exists
inline bool monic_sqrt(const FqContext& f, const std::vector<uint64_t>& poly,
                       std::vector<uint64_t>* root) {
  int deg = static_cast<int>(poly.size()) - 1;
  if (deg % 2 != 0) return false;
  int m = deg / 2;
  std::vector<uint64_t> g(m + 1, 0);
  g[m] = 1;
  uint64_t inv2 = f.inv(2 % f.p);
  for (int k = m - 1; k >= 0; --k) {
    // coefficient of t^{m+k} in g^2: 2*g[k] + sum_{k < i < m, i + j = m + k} g[i] g[j]
    uint64_t s = 0;
    for (int i = k + 1; i < m; ++i) {
      int j = m + k - i;
      if (j <= i || j > m) continue;
      s = f.add(s, f.mul(g[i], g[j]));
    }
    s = f.add(s, s);  // symmetric pairs count twice
    if ((m + k) % 2 == 0) {
      int h = (m + k) / 2;
      if (h > k && h <= m) s = f.add(s, f.mul(g[h], g[h]));
    }
    uint64_t want = poly[m + k];
    g[k] = f.mul(f.sub(want, s), inv2);
  }
  // verify g^2 == poly
  std::vector<uint64_t> sq(deg + 1, 0);
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= m; ++j) sq[i + j] = f.add(sq[i + j], f.mul(g[i], g[j]));
  for (int i = 0; i <= deg; ++i)
    if (sq[i] != poly[i]) return false;
  *root = g;
  return true;
}

}  // namespace detail

// Enumerates every line of P^2(F_q) and reports those on which the sextic
// restricts to a nonzero constant times a perfect square.
inline TritangentReport tritangent_search(const K3Pencil& pencil, uint32_t p, int k,
                                          uint64_t point_budget = default_point_budget()) {
  if (p == 2) fail(errc::unsupported_prime, "square testing needs odd characteristic");
  auto ctx = make_context(p, k);
  const FqContext& f = *ctx;
  const uint64_t q = f.q;
  if (q * q + q + 1 > point_budget)
    fail(errc::budget_exceeded, "too many lines for the configured budget");

  std::vector<std::array<uint64_t, 3>> terms;
  std::vector<uint32_t> coefs;
  for (const auto& [m, c] : pencil.sextic.terms()) {
    uint32_t cm = static_cast<uint32_t>(floor_mod(num(c), BigInt(p)));
    if (cm == 0) continue;
    terms.push_back({static_cast<uint64_t>(m.i), static_cast<uint64_t>(m.j),
                     static_cast<uint64_t>(m.k)});
    coefs.push_back(cm);
  }

  TritangentReport report{p, k, ctx, {}};
  auto consider = [&](const std::array<uint64_t, 3>& line, const std::array<uint64_t, 3>& u,
                      const std::array<uint64_t, 3>& v) {
    std::array<uint64_t, 7> F = detail::restrict_to_line(f, terms, coefs, u, v);
    int deg = -1;
    for (int r = 6; r >= 0; --r)
      if (F[r] != 0) { deg = r; break; }
    if (deg < 0) return;            // line divides the sextic; not a tritangent
    if (deg % 2 != 0) return;       // odd multiplicity at infinity
    uint64_t lead = F[deg];
    uint64_t lead_inv = f.inv(lead);
    std::vector<uint64_t> monic(deg + 1);
    for (int r = 0; r <= deg; ++r) monic[r] = f.mul(F[r], lead_inv);
    std::vector<uint64_t> g;
    if (!detail::monic_sqrt(f, monic, &g)) return;
    report.lines.push_back(TritangentLine{line, g, lead, 6 - deg});
  };

  // lines a x + b y + c z = 0, normalized on the first nonzero coefficient
  for (uint64_t b = 0; b < q; ++b)
    for (uint64_t c = 0; c < q; ++c)
      consider({1, b, c}, {f.neg(b), 1, 0}, {f.neg(c), 0, 1});
  for (uint64_t c = 0; c < q; ++c) consider({0, 1, c}, {1, 0, 0}, {f.neg(c), 0, 1});
  consider({0, 0, 1}, {1, 0, 0}, {0, 1, 0});
  return report;
}

}  // namespace k3kit
