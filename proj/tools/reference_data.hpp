// Copyright 2026 The k3kit Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Golden values for the shipped example pencil (data/paper_pencil.json): the
// five leading principal minors of the discriminant pencil, the normalized
// Frobenius characteristic polynomial at p = 3, the point counts it implies,
// and the distinguished points used by the weak-approximation certificate.

#pragma once

#include <string>
#include <vector>

#include "k3kit/bigint.hpp"
#include "k3kit/poly.hpp"
#include "k3kit/tripoly.hpp"

namespace k3kit::refdata {

inline std::string pencil_path() {
#ifdef K3KIT_DATA_DIR
  return std::string(K3KIT_DATA_DIR) + "/paper_pencil.json";
#else
  return "data/paper_pencil.json";
#endif
}

struct Term {
  long long c;
  int i, j, k;
};

inline TriPoly from_terms(const std::vector<Term>& terms) {
  TriPoly f;
  for (const Term& t : terms)
    f += TriPoly::monomial(BigRat(t.c), Monomial{t.i, t.j, t.k});
  return f;
}

// the five leading principal minors of x M1 + y M2 + z M3
inline std::vector<TriPoly> expected_minors() {
  std::vector<std::vector<Term>> data = {
      {{-6, 1, 0, 0}, {8, 0, 0, 1}},
      {{-157, 2, 0, 0}, {-46, 1, 1, 0}, {12, 1, 0, 1}, {-1, 0, 2, 0}, {68, 0, 1, 1},
       {252, 0, 0, 2}},
      {{-512, 3, 0, 0}, {-3884, 2, 1, 0}, {-1790, 2, 0, 1}, {-1094, 1, 2, 0}, {-48, 1, 1, 1},
       {370, 1, 0, 2}, {-24, 0, 3, 0}, {1618, 0, 2, 1}, {6580, 0, 1, 2}, {1984, 0, 0, 3}},
      {{-14896, 4, 0, 0}, {-112256, 3, 1, 0}, {-64196, 3, 0, 1}, {-13639, 2, 2, 0},
       {-88686, 2, 1, 1}, {-31415, 2, 0, 2}, {1230, 1, 3, 0}, {28380, 1, 2, 1},
       {190454, 1, 1, 2}, {66580, 1, 0, 3}, {-1967, 0, 4, 0}, {-14274, 0, 3, 1},
       {12573, 0, 2, 2}, {148652, 0, 1, 3}, {46212, 0, 0, 4}},
      {{-154622, 5, 0, 0}, {-1832494, 4, 1, 0}, {-1088428, 4, 0, 1}, {-3261270, 3, 2, 0},
       {-6264622, 3, 1, 1}, {-2086758, 3, 0, 2}, {-353890, 2, 3, 0}, {-2306720, 2, 2, 1},
       {-992652, 2, 1, 2}, {-124086, 2, 0, 3}, {2698, 1, 4, 0}, {587200, 1, 3, 1},
       {6271452, 1, 2, 2}, {9184426, 1, 1, 3}, {2279020, 1, 0, 4}, {-51948, 0, 5, 0},
       {-439790, 0, 4, 1}, {-82534, 0, 3, 2}, {4374124, 0, 2, 3}, {5413502, 0, 1, 4},
       {1214952, 0, 0, 5}}};
  std::vector<TriPoly> out;
  for (const auto& terms : data) out.push_back(from_terms(terms));
  return out;
}

// 3 * f_3(t) = (t - 1)^2 (3 t^20 + t^19 + ... + 3), an integer polynomial
inline IntPoly expected_f3_times_3() {
  std::vector<BigInt> cof_low_first{3, 1,  2,  1,  3,  1,  2,  -1, -1, -1, 0,
                                    -1, -1, -1, 2,  1,  3,  1,  2,  1,  3};
  IntPoly cofactor(std::move(cof_low_first));
  IntPoly t_minus_1(std::vector<BigInt>{-1, 1});
  return t_minus_1 * t_minus_1 * cofactor;
}

// point counts over F_{3^n}, n = 1..10, implied by the normalized Frobenius
// polynomial above (and confirmed by direct enumeration for n <= 8)
inline std::vector<BigInt> expected_counts_p3() {
  return {15,        89,        774,       6485,       59610,
          532406,    4796835,   43094933,  387439335,  BigInt("3486739334")};
}

// distinguished points: P1 in S(Q), P2 a real point with invariant 1/2
constexpr long long kP1[4] = {1, 2, -1, 924};
constexpr long long kP2[3] = {0, -1, 1};
constexpr long long kP2WSquared = 1863673;

}  // namespace k3kit::refdata
