// Copyright 2026 The k3kit Authors.
// SPDX-License-Identifier: Apache-2.0
//
// The acceptance suite: one function per criterion, exact expectations, a
// PASS/FAIL line each. The long point counts (n = 9, 10) are gated behind
// `full`; the fast path cross-checks n <= 6 against the naive oracle and
// completes the trace vector from the frozen golden counts.

#pragma once

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "k3kit/brauer_manin.hpp"
#include "k3kit/clifford.hpp"
#include "k3kit/k3zeta.hpp"
#include "k3kit/lattice.hpp"
#include "k3kit/pencil_io.hpp"
#include "reference_data.hpp"

namespace k3kit::repro {

struct CriterionResult {
  int index;
  std::string name;
  bool pass;
  double wall_ms;
  std::string detail;
};

struct SuiteOptions {
  std::string pencil_path = refdata::pencil_path();
  bool full = false;
  int threads = 1;
};

namespace detail {

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

inline BigRat random_nonzero(std::mt19937_64& rng, int bound) {
  for (;;) {
    int v = static_cast<int>(rng() % (2 * bound + 1)) - bound;
    if (v != 0) return BigRat(v);
  }
}

inline bool reps_equal(const BrauerRep& a, const BrauerRep& b) {
  std::vector<BigRat> vals;
  for (const BrauerRep* r : {&a, &b})
    for (const auto& s : r->symbols) {
      vals.push_back(s.a.as_rational());
      vals.push_back(s.b.as_rational());
    }
  for (const Place& v : support_places(vals))
    if (brauer_invariant(a, v) != brauer_invariant(b, v)) return false;
  return true;
}

}  // namespace detail

// 1. the printed leading principal minors, bit-exact
inline detail::Check criterion_minors(const K3Pencil& pencil) {
  detail::Check c;
  std::vector<TriPoly> minors = leading_principal_minors(pencil.linear_matrix());
  std::vector<TriPoly> want = refdata::expected_minors();
  for (size_t i = 0; i < want.size(); ++i)
    c.expect(minors[i] == want[i], "minor m" + std::to_string(i + 1) + " differs");
  c.expect(minors[4].terms().size() == 21, "m5 monomial count");
  return c;
}

// 2. f_3 reproduction from point counts; returns the normalized polynomial
inline detail::Check criterion_f3(const K3Pencil& pencil, const SuiteOptions& opt,
                                  ScaledPoly* normalized_out) {
  detail::Check c;
  CountOptions copt;
  copt.threads = opt.threads;
  std::vector<BigInt> frozen = refdata::expected_counts_p3();
  PointCounts pc{3, {}};
  int live_max = opt.full ? 10 : 8;
  for (int n = 1; n <= 10; ++n) {
    if (n <= live_max) {
      BigInt live = count_points(pencil, 3, n, copt);
      c.expect(live == frozen[n - 1],
               "live count at n = " + std::to_string(n) + " is " + live.str());
      if (n <= 6) {
        BigInt naive = count_points_naive(pencil, 3, n);
        c.expect(live == naive, "naive oracle disagrees at n = " + std::to_string(n));
      }
      pc.counts.push_back(live);
    } else {
      pc.counts.push_back(frozen[n - 1]);
    }
  }
  IntPoly t_minus_3(std::vector<BigInt>{-3, 1});
  WeilPolynomial w = reconstruct_weil_poly(traces_from_counts(pc), 3, {{t_minus_3, 2}});
  ScaledPoly f3 = normalize_weil(w.f, 3);
  c.expect(f3.den == 3, "normalized denominator");
  c.expect(f3.coeffs == refdata::expected_f3_times_3(), "normalized coefficients differ");
  if (normalized_out) *normalized_out = f3;
  if (c.ok && !opt.full)
    c.detail = "n <= " + std::to_string(live_max) +
               " counted live, n = 9, 10 from recorded counts (--full recomputes)";
  return c;
}

// 3. cyclotomic-root count of the normalized polynomial
inline detail::Check criterion_picard(const ScaledPoly& f3) {
  detail::Check c;
  c.expect(count_cyclotomic_roots(f3) == 2, "cyclotomic root count is not 2");
  return c;
}

// 4. tritangent searches over F_3 and F_5
inline detail::Check criterion_tritangents(const K3Pencil& pencil) {
  detail::Check c;
  TritangentReport f3 = tritangent_search(pencil, 3, 1);
  bool found = false;
  for (const auto& line : f3.lines)
    if (line.line == std::array<uint64_t, 3>{1, 0, 2}) found = true;
  c.expect(found, "x + 2z not reported over F_3");
  TritangentReport f5 = tritangent_search(pencil, 5, 1);
  c.expect(f5.lines.empty(), "unexpected tritangent over F_5");
  return c;
}

// 5. real invariants at the distinguished points; P1 on S
inline detail::Check criterion_real_invariants(const K3Pencil& pencil) {
  detail::Check c;
  c.expect(real_invariant(pencil, 1, 2, -1).is_zero(), "invariant at (1,2,-1)");
  c.expect(real_invariant(pencil, 0, -1, 1) == QmodZ(BigRat(1, 2)), "invariant at (0,-1,1)");
  c.expect(minus_det_at(pencil, 1, 2, -1) == BigRat(924) * 924, "924^2 != -det M(1,2,-1)");
  return c;
}

// 6. the weak-approximation failure certificate
inline detail::Check criterion_certificate(const K3Pencil& pencil) {
  detail::Check c;
  try {
    SurfaceRationalPoint p1 = make_rational_point(pencil, refdata::kP1[0], refdata::kP1[1],
                                                  refdata::kP1[2], refdata::kP1[3]);
    SurfaceRealPoint p2 =
        make_real_point(pencil, refdata::kP2[0], refdata::kP2[1], refdata::kP2[2]);
    InvariantCertificate cert = wa_failure_certificate(pencil, p1, p2);
    c.expect(cert.mixed.total == QmodZ(BigRat(1, 2)), "mixed adelic sum");
    c.expect(cert.reciprocity.total.is_zero(), "diagonal adelic sum");
  } catch (const error& e) {
    c.expect(false, e.what());
  }
  return c;
}

// 7. structure-theorem property suite on the full (d, p, i, c) grid
inline detail::Check criterion_lattice_grid() {
  detail::Check c;
  for (BigInt p : {3, 5, 7}) {
    for (BigInt d = 1; d <= 10; ++d) {
      for (int i : {0, 1}) {
        for (BigInt c_alpha = 0; c_alpha < p; ++c_alpha) {
          SublatticeParams s = make_params(d, p, i, c_alpha);
          DiscriminantForm f = discriminant_form(gram_of_M_alpha(s));
          bool same =
              canonical_group(f.invariant_factors) == canonical_group(theorem_disc_group(s));
          c.expect(same, "group mismatch at d=" + d.str() + " p=" + p.str() +
                             " i=" + std::to_string(i) + " c=" + c_alpha.str());
          if (i == 1) {
            BigInt D = 2 * d * p * p;
            std::vector<BigRat> v4{BigRat(p, D), BigRat(-2 * d * p, D),
                                   BigRat(1 + 4 * c_alpha * d, D)};
            c.expect(dual_vector_q(gram_of_M_alpha(s), v4) ==
                         QmodTwoZ(BigRat(-(1 + 4 * c_alpha * d), D)),
                     "q(v4) mismatch at d=" + d.str() + " p=" + p.str() + " c=" + c_alpha.str());
          }
        }
      }
    }
  }
  return c;
}

// 8. counting identities: class counts sum to (p^21-1)/(p-1); quadric counts
inline detail::Check criterion_counting() {
  detail::Check c;
  for (BigInt p : {3, 5, 7, 11}) {
    for (BigInt d = 1; d <= 12; ++d) {
      BigInt total = 0;
      for (const auto& [label, n] : count_lattices(d, p)) total += n;
      c.expect(total == total_sublattices(p),
               "count total at d=" + d.str() + " p=" + p.str());
    }
  }
  for (BigInt p : {3, 5, 7, 11, 13, 31}) {
    for (int n = 1; n <= 6; ++n) {
      if (pow_of(p, static_cast<unsigned>(2 * n)) > 1'000'000) continue;
      for (BigInt t : {0, 1, 2})
        c.expect(quadric_count_closed(n, p, t) == quadric_count_bruteforce(n, p, t),
                 "quadric count mismatch at p=" + p.str() + " n=" + std::to_string(n));
    }
  }
  return c;
}

// 9. clifford property suite: the three rules, reciprocity, two routes
inline detail::Check criterion_clifford_properties() {
  detail::Check c;
  std::mt19937_64 rng(0x5eed);
  const int entries[] = {1, -1, 2, -2, 3, -3, 5, -5};
  auto rand_form = [&](size_t rank) {
    std::vector<BigRat> q(rank);
    for (auto& v : q) v = BigRat(entries[rng() % 8]);
    return q;
  };
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<BigRat> q1 = rand_form(2 * (rng() % 3 + 1));
    std::vector<BigRat> q2 = rand_form(2 * (rng() % 2 + 1));
    BigRat a = BigRat(entries[rng() % 8]);
    c.expect(detail::reps_equal(clifford_rule_scale(q1, a).lhs, clifford_rule_scale(q1, a).rhs),
             "rule (i) fails");
    c.expect(detail::reps_equal(clifford_rule_sum(q1, q2).lhs, clifford_rule_sum(q1, q2).rhs),
             "rule (ii) fails");
    c.expect(detail::reps_equal(clifford_rule_hyperbolic(q1, a).lhs,
                                clifford_rule_hyperbolic(q1, a).rhs),
             "rule (iii) fails");
  }
  for (int trial = 0; trial < 500; ++trial) {
    BigRat a = detail::random_nonzero(rng, 50), b = detail::random_nonzero(rng, 50);
    QmodZ total;
    for (const Place& v : support_places({a, b})) total = total + hilbert_symbol(a, b, v);
    c.expect(total.is_zero(), "reciprocity fails for a=" + to_string(a) + " b=" + to_string(b));
  }
  for (int trial = 0; trial < 100; ++trial) {
    std::array<BigRat, 6> diag;
    Matrix<TriPoly> m(6, 6);
    for (int i = 0; i < 6; ++i) {
      diag[i] = detail::random_nonzero(rng, 5);
      m(i, i) = TriPoly(diag[i]);
    }
    c.expect(detail::reps_equal(clifford_class_rank6(diag), even_clifford_from_minors(m)),
             "diagonal vs minor route disagree");
  }
  return c;
}

// 10. small-rank census vs the structure theorem
inline detail::Check criterion_census() {
  detail::Check c;
  for (BigInt p : {3, 5})
    for (BigInt d : {1, 2, 3, 5})
      for (const CensusRow& row : census_rank3(d, p))
        c.expect(row.matches, "census mismatch at d=" + d.str() + " p=" + p.str());
  return c;
}

// 11. cubic fourfold association criteria
inline detail::Check criterion_fourfolds() {
  detail::Check c;
  c.expect(cubic_fourfold_association(1, 5).kind == FourfoldAssociation::ExistsUnique,
           "(d=1, p=5)");
  c.expect(cubic_fourfold_association(7, 3).kind == FourfoldAssociation::Exists, "(d=7, p=3)");
  c.expect(cubic_fourfold_association(2, 3).kind == FourfoldAssociation::None, "(d=2, p=3)");
  return c;
}

inline std::vector<CriterionResult> run_suite(const SuiteOptions& opt) {
  K3Pencil pencil = load_pencil_file(opt.pencil_path);
  ScaledPoly f3{IntPoly(), 1};
  std::vector<std::pair<std::string, std::function<detail::Check()>>> criteria = {
      {"printed-minors", [&] { return criterion_minors(pencil); }},
      {"f3-reproduction", [&] { return criterion_f3(pencil, opt, &f3); }},
      {"picard-bound", [&] { return criterion_picard(f3); }},
      {"tritangents", [&] { return criterion_tritangents(pencil); }},
      {"real-invariants", [&] { return criterion_real_invariants(pencil); }},
      {"wa-certificate", [&] { return criterion_certificate(pencil); }},
      {"lattice-theorem-grid", [&] { return criterion_lattice_grid(); }},
      {"counting-identities", [&] { return criterion_counting(); }},
      {"clifford-properties", [&] { return criterion_clifford_properties(); }},
      {"small-rank-census", [&] { return criterion_census(); }},
      {"cubic-fourfolds", [&] { return criterion_fourfolds(); }},
  };
  std::vector<CriterionResult> results;
  int index = 1;
  for (auto& [name, fn] : criteria) {
    auto start = std::chrono::steady_clock::now();
    detail::Check check;
    try {
      check = fn();
    } catch (const std::exception& e) {
      check.ok = false;
      check.detail = e.what();
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                          start)
                    .count();
    results.push_back(CriterionResult{index, name, check.ok, ms, check.detail});
    ++index;
  }
  return results;
}

inline int print_report(const std::vector<CriterionResult>& results, std::ostream& out) {
  int failures = 0;
  for (const auto& r : results) {
    out << (r.pass ? "PASS" : "FAIL") << " criterion " << r.index << " (" << r.name << ") ["
        << static_cast<long>(r.wall_ms) << " ms]";
    if (!r.detail.empty()) out << " -- " << r.detail;
    if (!r.pass) ++failures;
    out << "\n";
  }
  out << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
      << "\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace k3kit::repro
