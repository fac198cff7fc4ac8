// Copyright 2026 The k3kit Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Evaluation of the transcendental Brauer class at real and rational points,
// adelic invariant sums, and the weak-approximation failure certificate.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "k3kit/bigint.hpp"
#include "k3kit/clifford.hpp"
#include "k3kit/errors.hpp"
#include "k3kit/k3zeta.hpp"
#include "k3kit/qmod.hpp"

namespace k3kit {

// ---- points -----------------------------------------------------------------

struct SurfaceRealPoint {
  BigRat x, y, z;
  BigRat w_squared;  // -det M(x, y, z), nonnegative on S(R)
};

struct SurfaceRationalPoint {
  BigRat x, y, z, w;
};

inline BigRat minus_det_at(const K3Pencil& pencil, const BigRat& x, const BigRat& y,
                           const BigRat& z) {
  return -det(pencil.matrix_at(x, y, z));
}

inline SurfaceRealPoint make_real_point(const K3Pencil& pencil, const BigRat& x, const BigRat& y,
                                        const BigRat& z) {
  if (x == 0 && y == 0 && z == 0) fail(errc::invalid_argument, "base point must be nonzero");
  BigRat w2 = minus_det_at(pencil, x, y, z);
  if (w2 < 0)
    fail(errc::invalid_argument, "-det M(x0, y0, z0) = " + to_string(w2) +
                                     " < 0: no real point of S above this base point");
  return SurfaceRealPoint{x, y, z, w2};
}

inline SurfaceRationalPoint make_rational_point(const K3Pencil& pencil, const BigRat& x,
                                                const BigRat& y, const BigRat& z,
                                                const BigRat& w) {
  if (x == 0 && y == 0 && z == 0) fail(errc::invalid_argument, "base point must be nonzero");
  BigRat w2 = minus_det_at(pencil, x, y, z);
  if (w * w != w2)
    fail(errc::invalid_argument,
         "w^2 = " + to_string(w * w) + " but -det M(x0, y0, z0) = " + to_string(w2));
  return SurfaceRationalPoint{x, y, z, w};
}

// ---- local invariants ---------------------------------------------------------

// inv_infinity by the signature dichotomy: 0 for (3,3), 1/2 for (1,5)/(5,1).
inline QmodZ real_invariant(const K3Pencil& pencil, const BigRat& x, const BigRat& y,
                            const BigRat& z) {
  Matrix<BigRat> m = pencil.matrix_at(x, y, z);
  if (det(m) == 0) fail(errc::on_discriminant, "det M(x0, y0, z0) = 0");
  auto [pos, neg] = signature_exact(m);
  if (pos == 3 && neg == 3) return QmodZ(BigRat(0));
  return QmodZ(BigRat(1, 2));
}

inline QmodZ real_invariant(const K3Pencil& pencil, const SurfaceRealPoint& pt) {
  return real_invariant(pencil, pt.x, pt.y, pt.z);
}

// entries of the two quaternion symbols specialized at a base point:
// (-m2, -m1 m3) and (m4, -m3 m5)
inline std::array<BigRat, 4> symbol_entries_at(const K3Pencil& pencil, const BigRat& x,
                                               const BigRat& y, const BigRat& z) {
  std::vector<TriPoly> minors = pencil_minors(pencil);
  std::array<BigRat, 5> m;
  for (int i = 0; i < 5; ++i) {
    m[i] = minors[i].eval(x, y, z);
    if (m[i] == 0)
      fail(errc::representative_undefined,
           "leading principal minor m" + std::to_string(i + 1) + " vanishes at the point");
  }
  return {-m[1], -(m[0] * m[2]), m[3], -(m[2] * m[4])};
}

inline QmodZ rational_point_invariant(const K3Pencil& pencil, const SurfaceRationalPoint& pt,
                                      const Place& v) {
  auto e = symbol_entries_at(pencil, pt.x, pt.y, pt.z);
  return hilbert_symbol(e[0], e[1], v) + hilbert_symbol(e[2], e[3], v);
}

inline std::vector<Place> point_support(const K3Pencil& pencil, const BigRat& x, const BigRat& y,
                                        const BigRat& z) {
  auto e = symbol_entries_at(pencil, x, y, z);
  return support_places({e[0], e[1], e[2], e[3]});
}

// ---- adelic sums ----------------------------------------------------------------

struct AdelicSum {
  std::vector<std::pair<Place, QmodZ>> per_place;
  QmodZ total;
};

// Sum of local invariants over the support set. The base point stands in at
// every place without an explicit assignment; a real-point assignment (base
// coordinates only) may override the real place, rational points the finite
// ones.
inline AdelicSum adelic_sum(const K3Pencil& pencil, const SurfaceRationalPoint& base,
                            const std::optional<SurfaceRealPoint>& at_infinity,
                            const std::map<BigInt, SurfaceRationalPoint>& at_finite) {
  // support: union over every point in play
  std::set<BigInt> primes;
  auto absorb = [&](const BigRat& x, const BigRat& y, const BigRat& z) {
    for (const Place& w : point_support(pencil, x, y, z))
      if (!w.infinite) primes.insert(w.prime);
  };
  absorb(base.x, base.y, base.z);
  for (const auto& [p, pt] : at_finite) absorb(pt.x, pt.y, pt.z);

  AdelicSum out;
  QmodZ total;
  const SurfaceRealPoint real_pt = at_infinity
                                       ? *at_infinity
                                       : make_real_point(pencil, base.x, base.y, base.z);
  QmodZ vinf = real_invariant(pencil, real_pt);
  out.per_place.emplace_back(Place::real(), vinf);
  total = total + vinf;
  for (const BigInt& p : primes) {
    Place v = Place::finite(p);
    auto it = at_finite.find(p);
    const SurfaceRationalPoint& pt = it == at_finite.end() ? base : it->second;
    QmodZ inv = rational_point_invariant(pencil, pt, v);
    out.per_place.emplace_back(v, inv);
    total = total + inv;
  }
  out.total = total;
  return out;
}

// ---- real-point searches ---------------------------------------------------------

// A real point with local invariant 1/2, i.e. signature (1,5) or (5,1); used
// when no explicit second point accompanies a certificate request.
inline SurfaceRealPoint find_half_invariant_real_point(const K3Pencil& pencil, int radius = 3) {
  for (int x = -radius; x <= radius; ++x)
    for (int y = -radius; y <= radius; ++y)
      for (int z = -radius; z <= radius; ++z) {
        if (x == 0 && y == 0 && z == 0) continue;
        BigRat w2 = minus_det_at(pencil, x, y, z);
        if (w2 <= 0) continue;
        auto [pos, neg] = signature_exact(pencil.matrix_at(x, y, z));
        if ((pos == 1 && neg == 5) || (pos == 5 && neg == 1))
          return SurfaceRealPoint{BigRat(x), BigRat(y), BigRat(z), w2};
      }
  fail(errc::budget_exhausted, "no sign-definite-type real point in search range");
}

// A real point with invariant 0 (signature (3,3)): scan a coarse grid, then
// walk great-circle arcs from a (1,5) point toward its antipode, where the
// signature must pass through (3,3) between the two definite-type regions.
inline SurfaceRealPoint find_zero_invariant_real_point(const K3Pencil& pencil,
                                                       int budget_lines = 64) {
  std::optional<std::array<int, 3>> q_point;
  for (int x = -2; x <= 2; ++x)
    for (int y = -2; y <= 2; ++y)
      for (int z = -2; z <= 2; ++z) {
        if (x == 0 && y == 0 && z == 0) continue;
        if (minus_det_at(pencil, x, y, z) <= 0) continue;
        auto [pos, neg] = signature_exact(pencil.matrix_at(x, y, z));
        if (pos == 3 && neg == 3)
          return SurfaceRealPoint{BigRat(x), BigRat(y), BigRat(z),
                                  minus_det_at(pencil, x, y, z)};
        if (!q_point) q_point = std::array<int, 3>{x, y, z};
      }
  if (!q_point) fail(errc::budget_exhausted, "no nondegenerate real point found on the grid");

  // deterministic direction generator
  uint64_t state = 0x9e3779b97f4a7c15ULL;
  auto next_small = [&]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<int>((state >> 33) % 9) - 4;  // in [-4, 4]
  };
  BigRat qx(BigInt((*q_point)[0])), qy(BigInt((*q_point)[1])), qz(BigInt((*q_point)[2]));
  for (int line = 0; line < budget_lines; ++line) {
    int rx = next_small(), ry = next_small(), rz = next_small();
    if (rx == 0 && ry == 0 && rz == 0) continue;
    // P(u) ~ (1 - u^2) Q + 2u R walks from Q (u = 0) to -Q (u -> infinity)
    for (int j = 1; j <= 64; ++j) {
      BigRat u(j, 8);
      BigRat a = 1 - u * u, b = 2 * u;
      BigRat px = a * qx + b * rx, py = a * qy + b * ry, pz = a * qz + b * rz;
      if (px == 0 && py == 0 && pz == 0) continue;
      BigRat w2 = minus_det_at(pencil, px, py, pz);
      if (w2 <= 0) continue;
      auto [pos, neg] = signature_exact(pencil.matrix_at(px, py, pz));
      if (pos == 3 && neg == 3) return SurfaceRealPoint{px, py, pz, w2};
    }
  }
  fail(errc::budget_exhausted, "no signature-(3,3) point found within the line budget");
}

// ---- the weak-approximation certificate --------------------------------------------

struct InvariantCertificate {
  std::string class_description;
  SurfaceRationalPoint p1;
  SurfaceRealPoint p2;
  AdelicSum mixed;        // P2 at the real place, P1 elsewhere; total must be 1/2
  AdelicSum reciprocity;  // P1 everywhere; total must be 0
};

// Certifies the weak-approximation failure: (a) P1 lies on S(Q), (b) its real
// invariant vanishes, (c) some real point has invariant 1/2, (d) the mixed
// adelic point has invariant sum 1/2 while the diagonal one sums to 0.
inline InvariantCertificate wa_failure_certificate(
    const K3Pencil& pencil, const SurfaceRationalPoint& p1,
    const std::optional<SurfaceRealPoint>& p2_hint = std::nullopt) {
  InvariantCertificate cert{};
  {
    std::vector<TriPoly> minors = pencil_minors(pencil);
    cert.class_description = "(" + (-minors[1]).str() + ", " + (-(minors[0] * minors[2])).str() +
                             ") (x) (" + minors[3].str() + ", " +
                             (-(minors[2] * minors[4])).str() + ")";
  }

  // (a) P1 on S(Q), exact
  BigRat w2 = minus_det_at(pencil, p1.x, p1.y, p1.z);
  if (p1.w * p1.w != w2)
    fail(errc::certificate_failed,
         "(a) P1 is not on S: w^2 = " + to_string(p1.w * p1.w) + " != " + to_string(w2));
  cert.p1 = p1;

  // (b) inv_infinity(alpha(P1)) = 0
  if (!real_invariant(pencil, p1.x, p1.y, p1.z).is_zero())
    fail(errc::certificate_failed, "(b) real invariant at P1 is 1/2, expected 0");

  // (c) a real point with invariant 1/2
  SurfaceRealPoint p2 = p2_hint ? *p2_hint : [&] {
    try {
      return find_half_invariant_real_point(pencil);
    } catch (const error& e) {
      if (e.code() == errc::budget_exhausted)
        fail(errc::certificate_failed, "(c) no real point with invariant 1/2 found");
      throw;
    }
  }();
  if (real_invariant(pencil, p2).is_zero())
    fail(errc::certificate_failed, "(c) supplied real point has invariant 0, expected 1/2");
  cert.p2 = p2;

  // (d) adelic sums
  cert.mixed = adelic_sum(pencil, p1, p2, {});
  cert.reciprocity = adelic_sum(pencil, p1, std::nullopt, {});
  if (cert.mixed.total != QmodZ(BigRat(1, 2)))
    fail(errc::certificate_failed,
         "(d) mixed adelic sum is " + cert.mixed.total.str() + ", expected 1/2");
  if (!cert.reciprocity.total.is_zero())
    fail(errc::certificate_failed,
         "(d) diagonal adelic sum is " + cert.reciprocity.total.str() + ", expected 0");
  return cert;
}

}  // namespace k3kit
