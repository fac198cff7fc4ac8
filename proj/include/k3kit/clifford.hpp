// Copyright 2026 The k3kit Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Quadratic-form diagonalization, even-Clifford biquaternion representatives,
// Hilbert symbols over Q and exact signatures of integer symmetric matrices.

#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "k3kit/arith.hpp"
#include "k3kit/bigint.hpp"
#include "k3kit/errors.hpp"
#include "k3kit/matrix.hpp"
#include "k3kit/qmod.hpp"
#include "k3kit/tripoly.hpp"

namespace k3kit {

// A place of Q: the real place or a finite prime.
struct Place {
  bool infinite = true;
  BigInt prime = 0;

  static Place real() { return Place{true, 0}; }
  static Place finite(BigInt p) { return Place{false, std::move(p)}; }

  bool operator==(const Place& o) const {
    return infinite == o.infinite && (infinite || prime == o.prime);
  }
  bool operator<(const Place& o) const {
    if (infinite != o.infinite) return infinite;  // real place sorts first
    return !infinite && prime < o.prime;
  }
  std::string str() const { return infinite ? "inf" : prime.str(); }
};

struct QuaternionSymbol {
  TriPoly a, b;

  QuaternionSymbol(TriPoly a_, TriPoly b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a.is_zero() || b.is_zero()) fail(errc::zero_entry, "quaternion symbol entry is zero");
  }
  static QuaternionSymbol rational(const BigRat& a, const BigRat& b) {
    return QuaternionSymbol(TriPoly(a), TriPoly(b));
  }
};

enum class BrauerBase { RationalField, FunctionFieldOfS };

// Formal tensor product of quaternion symbols; empty = the trivial class.
struct BrauerRep {
  std::vector<QuaternionSymbol> symbols;
  BrauerBase base = BrauerBase::RationalField;

  bool is_trivial_marker() const { return symbols.empty(); }
};

inline BrauerRep tensor(const BrauerRep& u, const BrauerRep& v) {
  if (u.base != v.base) fail(errc::invalid_argument, "tensor of reps over different bases");
  BrauerRep r = u;
  r.symbols.insert(r.symbols.end(), v.symbols.begin(), v.symbols.end());
  return r;
}

// ---- leading principal minors & diagonalization --------------------------

inline TriPoly det(const Matrix<TriPoly>& a) {
  return bareiss_det(a, [](const TriPoly& x, const TriPoly& y) {
    return TriPoly::exact_divide(x, y);
  });
}

template <class T>
inline std::vector<T> leading_principal_minors(const Matrix<T>& m) {
  if (!m.is_symmetric()) fail(errc::invalid_argument, "matrix must be symmetric");
  std::vector<T> out;
  for (size_t i = 1; i <= m.rows(); ++i) out.push_back(det(m.submatrix(i, i)));
  return out;
}

struct SymmetricDiagonalization {
  std::vector<BigRat> diag;
  Matrix<BigRat> transform;  // transform^T * M * transform = diag
};

// Symmetric Gaussian elimination; requires every leading principal minor to
// be nonzero, and then diag[i] = m_{i+1}/m_i.
inline SymmetricDiagonalization symmetric_diagonalize(const Matrix<BigRat>& m) {
  if (!m.is_symmetric()) fail(errc::invalid_argument, "matrix must be symmetric");
  size_t n = m.rows();
  Matrix<BigRat> a = m;
  Matrix<BigRat> t = Matrix<BigRat>::identity(n);
  for (size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0)
      fail(errc::singular_minor, "leading principal minor " + std::to_string(k + 1) + " vanishes");
    for (size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      BigRat f = a(i, k) / a(k, k);
      for (size_t c = 0; c < n; ++c) a(i, c) -= f * a(k, c);
      for (size_t r = 0; r < n; ++r) a(r, i) -= f * a(r, k);
      for (size_t r = 0; r < n; ++r) t(r, i) -= f * t(r, k);
    }
  }
  std::vector<BigRat> d(n);
  for (size_t i = 0; i < n; ++i) d[i] = a(i, i);
  return {std::move(d), std::move(t)};
}

// ---- even Clifford class representatives ----------------------------------

// c_0(q) for the diagonal rank-6 form <a_1,...,a_6> over the discriminant
// extension: (-a1 a2, -a1 a3) (x) (a1 a2 a3 a4, a1 a2 a3 a5).
inline BrauerRep clifford_class_rank6(const std::array<BigRat, 6>& a) {
  for (const auto& v : a)
    if (v == 0) fail(errc::zero_entry, "diagonal entry is zero");
  BrauerRep rep;
  rep.base = BrauerBase::RationalField;
  BigRat a123 = a[0] * a[1] * a[2];
  rep.symbols.push_back(QuaternionSymbol::rational(-a[0] * a[1], -a[0] * a[2]));
  rep.symbols.push_back(QuaternionSymbol::rational(a123 * a[3], a123 * a[4]));
  return rep;
}

// c_0(q) from leading principal minors: (-m2, -m1 m3) (x) (m4, -m3 m5).
inline BrauerRep even_clifford_from_minors(const Matrix<TriPoly>& m) {
  std::vector<TriPoly> minors = leading_principal_minors(m);
  for (size_t i = 0; i + 1 < minors.size() && i < 5; ++i)
    if (minors[i].is_zero())
      fail(errc::singular_minor, "leading principal minor " + std::to_string(i + 1) + " vanishes");
  BrauerRep rep;
  rep.base = BrauerBase::RationalField;
  for (size_t i = 0; i < minors.size(); ++i)
    if (!minors[i].is_constant()) rep.base = BrauerBase::FunctionFieldOfS;
  rep.symbols.emplace_back(-minors[1], -(minors[0] * minors[2]));
  rep.symbols.emplace_back(minors[3], -(minors[2] * minors[4]));
  return rep;
}

// ---- Hilbert symbols and local invariants ---------------------------------

namespace detail {

// (a, b)_v as +-1 for nonzero integers a, b.
inline int hilbert_int(BigInt a, BigInt b, const Place& v) {
  if (v.infinite) return (a < 0 && b < 0) ? -1 : 1;
  const BigInt& p = v.prime;
  int alpha = 0, beta = 0;
  while (a % p == 0) { a /= p; ++alpha; }
  while (b % p == 0) { b /= p; ++beta; }
  if (p == 2) {
    auto eps = [](const BigInt& u) { return static_cast<int>(floor_mod((u - 1) / 2, 2)); };
    auto omega = [](const BigInt& u) { return static_cast<int>(floor_mod((u * u - 1) / 8, 2)); };
    int e = eps(a) * eps(b) + alpha * omega(b) + beta * omega(a);
    return e % 2 == 0 ? 1 : -1;
  }
  int e = (alpha % 2) * (beta % 2) * static_cast<int>(floor_mod((p - 1) / 2, 2));
  int s = e % 2 == 0 ? 1 : -1;
  if (beta % 2 != 0) s *= legendre(a, p);
  if (alpha % 2 != 0) s *= legendre(b, p);
  return s;
}

// integer representative of the square class of a nonzero rational
inline BigInt square_class(const BigRat& r) { return num(r) * den(r); }

}  // namespace detail

// Local Hilbert symbol as an element of Q/Z: 0 when z^2 = a x^2 + b y^2 has a
// nontrivial solution over the completion at v, 1/2 otherwise.
inline QmodZ hilbert_symbol(const BigRat& a, const BigRat& b, const Place& v) {
  if (a == 0 || b == 0) fail(errc::zero_input, "hilbert symbol of zero");
  int s = detail::hilbert_int(detail::square_class(a), detail::square_class(b), v);
  return QmodZ(s == 1 ? BigRat(0) : BigRat(1, 2));
}

// Places where symbols built from the given rationals can be nontrivial.
inline std::vector<Place> support_places(const std::vector<BigRat>& values) {
  std::set<BigInt> primes{BigInt(2)};
  for (const auto& v : values) {
    if (v == 0) continue;
    for (const auto& [p, e] : factorize(detail::square_class(v))) {
      (void)e;
      primes.insert(p);
    }
  }
  std::vector<Place> out{Place::real()};
  for (const auto& p : primes) out.push_back(Place::finite(p));
  return out;
}

// Local invariant of a rational Brauer representative: the sum of the Hilbert
// symbols of its tensor factors at v.
inline QmodZ brauer_invariant(const BrauerRep& rep, const Place& v) {
  QmodZ total;
  for (const auto& s : rep.symbols) {
    if (s.a.degree() > 0 || s.b.degree() > 0)
      fail(errc::invalid_argument, "invariant needs a representative over Q");
    BigRat a = s.a.as_rational(), b = s.b.as_rational();
    if (a == 0 || b == 0) fail(errc::zero_entry, "symbol entry is zero");
    total = total + hilbert_symbol(a, b, v);
  }
  return total;
}

inline std::vector<Place> rep_support(const BrauerRep& rep) {
  std::vector<BigRat> vals;
  for (const auto& s : rep.symbols) {
    vals.push_back(s.a.as_rational());
    vals.push_back(s.b.as_rational());
  }
  return support_places(vals);
}

// Brauer-class equality over Q, decided by comparing local invariants on the
// joint support (sound and complete for classes of Br(Q)).
inline bool brauer_equivalent(const BrauerRep& u, const BrauerRep& v) {
  BrauerRep both = tensor(u, v);  // 2-torsion: v is its own inverse
  for (const Place& w : rep_support(both))
    if (!brauer_invariant(both, w).is_zero()) return false;
  return true;
}

// ---- Clifford-class recursion and the rewrite rules -----------------------

// signed discriminant (-1)^{n(n-1)/2} * a_1 ... a_n
inline BigRat signed_discriminant(const std::vector<BigRat>& diag) {
  BigRat d(1);
  for (const auto& a : diag) d *= a;
  size_t n = diag.size();
  if ((n * (n - 1) / 2) % 2 != 0) d = -d;
  return d;
}

// Clifford class c(q) of an even-rank nondegenerate diagonal form over Q,
// as a tensor of quaternion symbols: c(<a,b>) = (a,b), and ranks 2k split
// off two entries at a time through c(q1 _|_ q2) = c(q1) (x) c(q2) (x) (D1,D2).
inline BrauerRep clifford_class(const std::vector<BigRat>& diag) {
  if (diag.size() % 2 != 0) fail(errc::invalid_argument, "clifford_class needs even rank");
  for (const auto& a : diag)
    if (a == 0) fail(errc::zero_entry, "diagonal entry is zero");
  BrauerRep rep;
  rep.base = BrauerBase::RationalField;
  if (diag.empty()) return rep;
  if (diag.size() == 2) {
    rep.symbols.push_back(QuaternionSymbol::rational(diag[0], diag[1]));
    return rep;
  }
  std::vector<BigRat> head(diag.begin(), diag.begin() + 2);
  std::vector<BigRat> tail(diag.begin() + 2, diag.end());
  BrauerRep r = tensor(clifford_class(head), clifford_class(tail));
  r.symbols.push_back(
      QuaternionSymbol::rational(signed_discriminant(head), signed_discriminant(tail)));
  return r;
}

struct RuleSides {
  BrauerRep lhs, rhs;
};

// (i)  c(<a> (x) q) = c(q) (x) (a, Delta(q))
inline RuleSides clifford_rule_scale(const std::vector<BigRat>& q, const BigRat& a) {
  if (a == 0) fail(errc::zero_entry, "scale by zero");
  std::vector<BigRat> scaled = q;
  for (auto& v : scaled) v *= a;
  BrauerRep rhs = clifford_class(q);
  rhs.symbols.push_back(QuaternionSymbol::rational(a, signed_discriminant(q)));
  return {clifford_class(scaled), rhs};
}

// (ii) c(q1 _|_ q2) = c(q1) (x) c(q2) (x) (Delta1, Delta2)
inline RuleSides clifford_rule_sum(const std::vector<BigRat>& q1, const std::vector<BigRat>& q2) {
  std::vector<BigRat> joined = q1;
  joined.insert(joined.end(), q2.begin(), q2.end());
  BrauerRep rhs = tensor(clifford_class(q1), clifford_class(q2));
  rhs.symbols.push_back(
      QuaternionSymbol::rational(signed_discriminant(q1), signed_discriminant(q2)));
  return {clifford_class(joined), rhs};
}

// (iii) c(q _|_ <a, -a>) = c(q)
inline RuleSides clifford_rule_hyperbolic(const std::vector<BigRat>& q, const BigRat& a) {
  if (a == 0) fail(errc::zero_entry, "hyperbolic entry is zero");
  std::vector<BigRat> joined = q;
  joined.push_back(a);
  joined.push_back(-a);
  return {clifford_class(joined), clifford_class(q)};
}

// ---- exact signatures ------------------------------------------------------

namespace detail {
inline int descartes_positive_roots(const IntPoly& f) {
  int changes = 0;
  int last = 0;
  for (int k = f.degree(); k >= 0; --k) {
    int s = sign_of(f.coeff(k));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}
}  // namespace detail

// (positive, negative) eigenvalue counts of a nondegenerate integer symmetric
// matrix, via Descartes' rule on the characteristic polynomial (exact: the
// spectrum is real).
inline std::pair<int, int> signature_exact(const Matrix<BigInt>& m) {
  if (!m.is_symmetric()) fail(errc::invalid_argument, "matrix must be symmetric");
  IntPoly f = char_poly(m);
  if (f.coeff(0) == 0) fail(errc::degenerate_matrix, "matrix is singular");
  IntPoly fneg = f;
  {
    std::vector<BigInt> c(f.coeffs());
    for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    fneg = IntPoly(std::move(c));
  }
  return {detail::descartes_positive_roots(f), detail::descartes_positive_roots(fneg)};
}

// Signature of a rational symmetric matrix: clear denominators (a positive
// scaling) and defer to the integer routine.
inline std::pair<int, int> signature_exact(const Matrix<BigRat>& m) {
  BigInt common(1);
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) common = lcm_of(common, den(m(i, j)));
  Matrix<BigInt> mi(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) {
      BigRat v = m(i, j) * BigRat(common);
      mi(i, j) = num(v);
    }
  return signature_exact(mi);
}

}  // namespace k3kit
