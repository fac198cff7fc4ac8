// Copyright 2026 The k3kit Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Pencil files: {"M1": [[...]], "M2": [[...]], "M3": [[...]]}, 6x6 integer
// symmetric matrices.

#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "k3kit/errors.hpp"
#include "k3kit/k3zeta.hpp"
#include "k3kit/matrix.hpp"

namespace k3kit {

inline Matrix<BigInt> parse_matrix6(const nlohmann::json& j, const std::string& name) {
  if (!j.is_array() || j.size() != 6)
    fail(errc::invalid_pencil, name + " must be a 6x6 integer array");
  Matrix<BigInt> m(6, 6);
  for (size_t i = 0; i < 6; ++i) {
    if (!j[i].is_array() || j[i].size() != 6)
      fail(errc::invalid_pencil, name + "[" + std::to_string(i) + "] must have 6 entries");
    for (size_t k = 0; k < 6; ++k) {
      if (!j[i][k].is_number_integer())
        fail(errc::invalid_pencil,
             name + "[" + std::to_string(i) + "][" + std::to_string(k) + "] is not an integer");
      m(i, k) = BigInt(j[i][k].get<long long>());
    }
  }
  for (size_t i = 0; i < 6; ++i)
    for (size_t k = i + 1; k < 6; ++k)
      if (m(i, k) != m(k, i))
        fail(errc::invalid_pencil, name + "[" + std::to_string(i) + "][" + std::to_string(k) +
                                       "] != " + name + "[" + std::to_string(k) + "][" +
                                       std::to_string(i) + "]");
  return m;
}

inline K3Pencil parse_pencil_json(const nlohmann::json& j) {
  for (const char* key : {"M1", "M2", "M3"})
    if (!j.contains(key)) fail(errc::invalid_pencil, std::string("missing field ") + key);
  return make_pencil(parse_matrix6(j["M1"], "M1"), parse_matrix6(j["M2"], "M2"),
                     parse_matrix6(j["M3"], "M3"));
}

inline K3Pencil load_pencil_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::invalid_argument, "cannot open pencil file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(errc::invalid_pencil, std::string("pencil file is not valid JSON: ") + e.what());
  }
  return parse_pencil_json(j);
}

inline nlohmann::json pencil_to_json(const K3Pencil& p) {
  auto mat = [](const Matrix<BigInt>& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (size_t j = 0; j < m.cols(); ++j)
        row.push_back(static_cast<long long>(m(i, j)));
      rows.push_back(row);
    }
    return rows;
  };
  return nlohmann::json{{"M1", mat(p.m1)}, {"M2", mat(p.m2)}, {"M3", mat(p.m3)}};
}

}  // namespace k3kit
