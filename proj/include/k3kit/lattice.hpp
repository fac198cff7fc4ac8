// Copyright 2026 The k3kit Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Index-p sublattices of the transcendental lattice of a degree-2d K3
// surface: the rank-three model M_alpha, discriminant groups and forms,
// isomorphism classification, class counts, and the census machinery for
// small-rank cross-checks.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "k3kit/arith.hpp"
#include "k3kit/bigint.hpp"
#include "k3kit/errors.hpp"
#include "k3kit/matrix.hpp"
#include "k3kit/qmod.hpp"

namespace k3kit {

// ---- lattices ---------------------------------------------------------------

struct GramLattice {
  Matrix<BigInt> gram;

  size_t rank() const { return gram.rows(); }
  bool is_even() const {
    for (size_t i = 0; i < gram.rows(); ++i)
      if (gram(i, i) % 2 != 0) return false;
    return true;
  }
};

inline GramLattice make_lattice(Matrix<BigInt> gram) {
  if (!gram.is_symmetric()) fail(errc::invalid_argument, "Gram matrix must be symmetric");
  return GramLattice{std::move(gram)};
}

inline GramLattice hyperbolic_plane() {
  Matrix<BigInt> u(2, 2);
  u(0, 1) = 1;
  u(1, 0) = 1;
  return GramLattice{std::move(u)};
}

// <-2d> + U, the rank-3 stand-in for T_S used by the census
inline GramLattice minus2d_plus_U(const BigInt& d) {
  Matrix<BigInt> g(3, 3);
  g(0, 0) = -2 * d;
  g(1, 2) = 1;
  g(2, 1) = 1;
  return GramLattice{std::move(g)};
}

// ---- sublattice parameters ---------------------------------------------------

struct SublatticeParams {
  BigInt d;        // polarization degree 2d
  BigInt p;        // index
  int i_alpha;     // 0 or 1 after normalization
  BigInt c_alpha;  // class mod p, representative in [0, p)
};

inline SublatticeParams make_params(const BigInt& d, const BigInt& p, int i_alpha,
                                    const BigInt& c_alpha) {
  if (d < 1) fail(errc::invalid_argument, "d must be positive");
  if (!is_prime(p)) fail(errc::not_prime, p.str() + " is not prime");
  if (i_alpha != 0 && i_alpha != 1) fail(errc::invalid_argument, "i_alpha must be 0 or 1");
  if (c_alpha < 0 || c_alpha >= p) fail(errc::invalid_argument, "c_alpha must lie in [0, p)");
  return SublatticeParams{d, p, i_alpha, c_alpha};
}

// Gram matrix of the rank-three lattice M_alpha.
inline GramLattice gram_of_M_alpha(const SublatticeParams& s) {
  Matrix<BigInt> g(3, 3);
  g(0, 0) = -2 * s.d;
  g(0, 1) = g(1, 0) = -s.i_alpha;
  g(1, 1) = 2 * s.c_alpha;
  g(1, 2) = g(2, 1) = s.p;
  return GramLattice{std::move(g)};
}

// ---- discriminant forms -------------------------------------------------------

struct DiscriminantForm {
  std::vector<BigInt> invariant_factors;          // full SNF diagonal d_1 | d_2 | ...
  std::vector<std::vector<BigRat>> generators;    // coordinates in Gamma* w.r.t. the Gram basis
  std::vector<QmodTwoZ> q_values;                 // q(g_i) in Q/2Z
  std::vector<std::vector<QmodZ>> gram_q;         // b(g_i, g_j) in Q/Z

  // order of the group (product of the invariant factors)
  BigInt order() const {
    BigInt o = 1;
    for (const auto& d : invariant_factors) o *= d;
    return o;
  }
};

namespace detail {

inline BigRat pair_q(const Matrix<BigInt>& gram, const std::vector<BigRat>& u,
                     const std::vector<BigRat>& v) {
  BigRat acc(0);
  size_t n = gram.rows();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) acc += u[i] * BigRat(gram(i, j)) * v[j];
  return acc;
}

}  // namespace detail

// Discriminant group Gamma*/Gamma with its Q/2Z quadratic form. Generators
// come out of the Smith decomposition of the Gram matrix: with U G V = D, the
// classes of (column i of V)/d_i generate, the i-th with order d_i.
inline DiscriminantForm discriminant_form(const GramLattice& lat) {
  const Matrix<BigInt>& g = lat.gram;
  if (det(g) == 0) fail(errc::degenerate_lattice, "Gram matrix is singular");
  if (!lat.is_even()) fail(errc::odd_lattice, "lattice is not even");
  SmithDecomposition snf = smith_normal_form(g);
  size_t n = g.rows();
  DiscriminantForm out;
  out.invariant_factors = snf.diag;
  for (size_t i = 0; i < n; ++i) {
    std::vector<BigRat> gen(n);
    for (size_t r = 0; r < n; ++r) gen[r] = BigRat(snf.right(r, i), snf.diag[i]);
    out.generators.push_back(std::move(gen));
  }
  for (size_t i = 0; i < n; ++i)
    out.q_values.emplace_back(detail::pair_q(g, out.generators[i], out.generators[i]));
  out.gram_q.assign(n, std::vector<QmodZ>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      out.gram_q[i][j] = QmodZ(detail::pair_q(g, out.generators[i], out.generators[j]));
  return out;
}

// q-value of an arbitrary dual vector (coordinates w.r.t. the Gram basis).
inline QmodTwoZ dual_vector_q(const GramLattice& lat, const std::vector<BigRat>& v) {
  return QmodTwoZ(detail::pair_q(lat.gram, v, v));
}

// order of a dual vector's class in Gamma*/Gamma: least k >= 1 with k*v integral
inline BigInt dual_vector_order(const std::vector<BigRat>& v) {
  BigInt k = 1;
  for (const auto& c : v) k = lcm_of(k, den(c));
  return k;
}

// Canonical invariant-factor chain of a finite abelian group given as a list
// of cyclic orders (entries 1 are dropped, chain ascends by divisibility).
inline std::vector<BigInt> canonical_group(const std::vector<BigInt>& orders) {
  std::map<BigInt, std::vector<int>> by_prime;  // prime -> exponents, descending
  for (const auto& o : orders) {
    if (o <= 1) continue;
    for (const auto& [q, e] : factorize(o)) by_prime[q].push_back(e);
  }
  size_t slots = 0;
  for (auto& [q, es] : by_prime) {
    std::sort(es.rbegin(), es.rend());
    slots = std::max(slots, es.size());
  }
  std::vector<BigInt> chain(slots, BigInt(1));  // chain[0] is the largest factor
  for (auto& [q, es] : by_prime)
    for (size_t i = 0; i < es.size(); ++i) chain[i] *= pow_of(q, es[i]);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

// The closed-form discriminant groups of the structure theorem, as cyclic
// orders. Covers p = 2 through the "p | c_alpha or p = 2" branch.
inline std::vector<BigInt> theorem_disc_group(const SublatticeParams& s) {
  if (s.i_alpha == 0) {
    if (s.c_alpha % s.p != 0 && s.p != 2) return {2 * s.d, s.p * s.p};
    return {2 * s.d, s.p, s.p};
  }
  if ((1 + 4 * s.c_alpha * s.d) % s.p != 0) return {2 * s.d * s.p * s.p};
  return {2 * s.d * s.p, s.p};
}

// ---- classification ------------------------------------------------------------

enum class LatticeClassLabel {
  // p not dividing d
  CyclicSquare,
  CyclicNonsquare,
  NonCyclic,
  // p dividing d
  NonCyclicResidue,
  NonCyclicNonresidue,
  NonCyclicPP,
  CyclicFull,
};

inline const char* label_name(LatticeClassLabel l) {
  switch (l) {
    case LatticeClassLabel::CyclicSquare: return "CyclicSquare";
    case LatticeClassLabel::CyclicNonsquare: return "CyclicNonsquare";
    case LatticeClassLabel::NonCyclic: return "NonCyclic";
    case LatticeClassLabel::NonCyclicResidue: return "NonCyclicResidue";
    case LatticeClassLabel::NonCyclicNonresidue: return "NonCyclicNonresidue";
    case LatticeClassLabel::NonCyclicPP: return "NonCyclicPP";
    case LatticeClassLabel::CyclicFull: return "CyclicFull";
  }
  return "?";
}

// Isomorphism class of Gamma_{i_alpha, c_alpha}. Cyclic classes split on the
// quadratic character of -2dp^2 q(v): 1 + 4 c d for i = 1, p^2 + 4 c d for
// i = 0. Classification at p = 2 is not provided.
inline LatticeClassLabel classify(const SublatticeParams& s) {
  if (s.p == 2) fail(errc::unsupported_prime, "p = 2 classes are out of scope");
  bool p_divides_d = s.d % s.p == 0;
  if (p_divides_d) {
    if (s.i_alpha == 1) return LatticeClassLabel::CyclicFull;
    if (s.c_alpha % s.p == 0) return LatticeClassLabel::NonCyclicPP;
    return is_quadratic_residue(s.c_alpha, s.p) ? LatticeClassLabel::NonCyclicResidue
                                                : LatticeClassLabel::NonCyclicNonresidue;
  }
  BigInt disc = s.i_alpha == 1 ? BigInt(1 + 4 * s.c_alpha * s.d)
                               : BigInt(s.p * s.p + 4 * s.c_alpha * s.d);
  if (disc % s.p == 0) return LatticeClassLabel::NonCyclic;
  return is_quadratic_residue(disc, s.p) ? LatticeClassLabel::CyclicSquare
                                         : LatticeClassLabel::CyclicNonsquare;
}

inline bool isomorphic(const SublatticeParams& a, const SublatticeParams& b) {
  if (a.d != b.d || a.p != b.p)
    fail(errc::mismatched_context, "lattices live in different (d, p) contexts");
  return classify(a) == classify(b);
}

// Exact number of index-p sublattices in each isomorphism class.
inline std::map<LatticeClassLabel, BigInt> count_lattices(const BigInt& d, const BigInt& p) {
  if (!is_prime(p)) fail(errc::not_prime, p.str() + " is not prime");
  if (p == 2) fail(errc::unsupported_prime, "p = 2 counts are out of scope");
  BigInt p9 = pow_of(p, 9), p10 = pow_of(p, 10), p20 = pow_of(p, 20);
  std::map<LatticeClassLabel, BigInt> out;
  if (d % p != 0) {
    out[LatticeClassLabel::CyclicSquare] = p10 * (p10 + 1) / 2;
    out[LatticeClassLabel::CyclicNonsquare] = p10 * (p10 - 1) / 2;
    out[LatticeClassLabel::NonCyclic] = (p20 - 1) / (p - 1);
  } else {
    out[LatticeClassLabel::NonCyclicResidue] = p9 * (p10 - 1) / 2;
    out[LatticeClassLabel::NonCyclicNonresidue] = p9 * (p10 - 1) / 2;
    out[LatticeClassLabel::NonCyclicPP] = (p9 + 1) * (p10 - 1) / (p - 1);
    out[LatticeClassLabel::CyclicFull] = p20;
  }
  return out;
}

inline BigInt total_sublattices(const BigInt& p) { return (pow_of(p, 21) - 1) / (p - 1); }

// ---- quadric point counts -------------------------------------------------------

// Solutions of x1 x2 + ... + x_{2n-1} x_{2n} = target over F_p, closed form:
// f(n) = p^{n-1}(p^n + p - 1) zeroes, g(n) = p^{n-1}(p^n - 1) otherwise.
inline BigInt quadric_count_closed(int n, const BigInt& p, const BigInt& target) {
  if (n < 1) fail(errc::invalid_argument, "need n >= 1");
  if (p == 2) fail(errc::unsupported_prime, "closed quadric counts assume odd p");
  BigInt pn = pow_of(p, static_cast<unsigned>(n));
  BigInt pn1 = pow_of(p, static_cast<unsigned>(n - 1));
  if (target % p == 0) return pn1 * (pn + p - 1);
  return pn1 * (pn - 1);
}

inline BigInt quadric_count_bruteforce(int n, const BigInt& p, const BigInt& target,
                                       uint64_t budget = 100'000'000ULL) {
  if (n < 1) fail(errc::invalid_argument, "need n >= 1");
  BigInt total_points = pow_of(p, static_cast<unsigned>(2 * n));
  if (total_points > budget) fail(errc::budget_exceeded, "enumeration over budget");
  uint64_t pi = static_cast<uint64_t>(p);
  uint64_t t = static_cast<uint64_t>(floor_mod(target, p));
  std::vector<uint64_t> x(2 * n, 0);
  BigInt count = 0;
  for (;;) {
    uint64_t s = 0;
    for (int i = 0; i < n; ++i) s += x[2 * i] * x[2 * i + 1] % pi;
    if (s % pi == t) ++count;
    int pos = 0;
    while (pos < 2 * n && ++x[pos] == pi) x[pos++] = 0;
    if (pos == 2 * n) break;
  }
  return count;
}

// ---- sublattice enumeration and the small-rank census ---------------------------

// Hyperplane functionals on (Z/p)^r, normalized so that the first nonzero
// coordinate is 1; one representative per point of P((L/pL)*).
inline std::vector<std::vector<BigInt>> hyperplane_functionals(size_t rank, const BigInt& p) {
  std::vector<std::vector<BigInt>> out;
  std::vector<BigInt> a(rank, BigInt(0));
  // iterate over the first nonzero position
  for (size_t lead = 0; lead < rank; ++lead) {
    size_t free_coords = rank - lead - 1;
    BigInt combos = pow_of(p, static_cast<unsigned>(free_coords));
    for (BigInt v = 0; v < combos; ++v) {
      std::vector<BigInt> f(rank, BigInt(0));
      f[lead] = 1;
      BigInt w = v;
      for (size_t i = rank - 1; i > lead; --i) {
        f[i] = w % p;
        w /= p;
      }
      out.push_back(std::move(f));
    }
  }
  return out;
}

// Kernel of the surjection L -> Z/p given by a functional, as a Hermite-
// reduced basis, returned with its Gram matrix.
inline GramLattice sublattice_from_functional(const GramLattice& lat,
                                              const std::vector<BigInt>& functional,
                                              const BigInt& p) {
  size_t r = lat.rank();
  size_t pivot = r;
  for (size_t i = 0; i < r; ++i)
    if (functional[i] % p != 0) { pivot = i; break; }
  if (pivot == r) fail(errc::invalid_argument, "functional vanishes mod p");
  BigInt inv = mod_inverse(functional[pivot], p);
  Matrix<BigInt> gens(r, r);
  size_t row = 0;
  for (size_t i = 0; i < r; ++i) {
    if (i == pivot) continue;
    // e_i - (a_i / a_pivot) e_pivot lies in the kernel
    BigInt mu = floor_mod(functional[i] * inv, p);
    gens(row, i) = 1;
    gens(row, pivot) -= mu;
    ++row;
  }
  gens(row, pivot) = p;
  Matrix<BigInt> basis = hermite_row_basis(gens);
  Matrix<BigInt> gram = basis * lat.gram * basis.transpose();
  return GramLattice{std::move(gram)};
}

inline std::vector<GramLattice> enumerate_index_p_sublattices(const GramLattice& lat,
                                                              const BigInt& p,
                                                              uint64_t budget = 1'000'000) {
  BigInt count = (pow_of(p, static_cast<unsigned>(lat.rank())) - 1) / (p - 1);
  if (count > budget) fail(errc::budget_exceeded, "too many hyperplanes to enumerate");
  std::vector<GramLattice> out;
  for (const auto& f : hyperplane_functionals(lat.rank(), p))
    out.push_back(sublattice_from_functional(lat, f, p));
  return out;
}

// One row of the rank-3 census of <-2d> + U: the functional, the recovered
// normal-form parameters, and the computed vs predicted discriminant groups.
struct CensusRow {
  std::vector<BigInt> functional;
  SublatticeParams params;
  std::vector<BigInt> computed_group;   // canonical invariant factors
  std::vector<BigInt> predicted_group;  // canonical invariant factors
  bool matches;
};

// Recover (i_alpha, c_alpha) from a functional a_0 z + a_1 x + a_2 y on
// <-2d> + U: lambda_alpha = (a_2, a_1) in U has square -2 a_1 a_2, and when
// a_0 is a unit the normalization alpha -> a_0^{-1} alpha rescales c by
// a_0^{-2}.
inline SublatticeParams census_params(const BigInt& d, const BigInt& p,
                                      const std::vector<BigInt>& f) {
  BigInt a0 = floor_mod(f[0], p), a1 = floor_mod(f[1], p), a2 = floor_mod(f[2], p);
  int i_alpha;
  BigInt c;
  if (a0 != 0) {
    i_alpha = 1;
    BigInt inv = mod_inverse(a0, p);
    c = floor_mod(-a1 * a2 * inv * inv, p);
  } else {
    i_alpha = 0;
    c = floor_mod(-a1 * a2, p);
  }
  return SublatticeParams{d, p, i_alpha, c};
}

inline std::vector<CensusRow> census_rank3(const BigInt& d, const BigInt& p) {
  GramLattice base = minus2d_plus_U(d);
  std::vector<CensusRow> rows;
  for (const auto& f : hyperplane_functionals(3, p)) {
    GramLattice sub = sublattice_from_functional(base, f, p);
    SublatticeParams params = census_params(d, p, f);
    CensusRow row{f, params, canonical_group(discriminant_form(sub).invariant_factors),
                  canonical_group(theorem_disc_group(params)), false};
    row.matches = row.computed_group == row.predicted_group;
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---- special cubic fourfolds -------------------------------------------------

enum class FourfoldAssociation { ExistsUnique, Exists, None };

struct FourfoldResult {
  FourfoldAssociation kind;
  std::string reason;
};

// Existence of a special cubic fourfold of discriminant 2dp^2 whose twisted
// nonspecial cohomology matches an index-p sublattice class.
inline FourfoldResult cubic_fourfold_association(const BigInt& d, const BigInt& p) {
  if (!is_prime(p)) fail(errc::not_prime, p.str() + " is not prime");
  if (d < 1) fail(errc::invalid_argument, "d must be positive");
  if (p == 3) {
    if (gcd_of(BigInt(6), d) != 1)
      return {FourfoldAssociation::None, "gcd(6, d) = " + gcd_of(BigInt(6), d).str() + " != 1"};
    for (const auto& [q, e] : factorize(d)) {
      (void)e;
      if (q % 3 != 1)
        return {FourfoldAssociation::None,
                "prime " + q.str() + " divides d but " + q.str() + " != 1 mod 3"};
    }
    return {FourfoldAssociation::Exists,
            "gcd(6, d) = 1 and every prime divisor of d is 1 mod 3"};
  }
  if (p > 3) {
    if (d == 1)
      return {FourfoldAssociation::ExistsUnique,
              "d = 1, p > 3: exactly one class matches discriminant 2p^2"};
    BigInt disc = 2 * d * p * p;
    if (disc % 6 != 0 && disc % 6 != 2)
      return {FourfoldAssociation::None,
              "discriminant 2dp^2 = " + disc.str() + " is " + BigInt(disc % 6).str() +
                  " mod 6, so no special cubic fourfold of that discriminant exists"};
    return {FourfoldAssociation::None, "no association criterion applies for d > 1, p > 3"};
  }
  return {FourfoldAssociation::None, "no association criterion applies for p = 2"};
}

}  // namespace k3kit
