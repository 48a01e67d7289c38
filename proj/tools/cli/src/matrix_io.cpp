// Copyright 2026 The Immanant Interferometry Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "immanant_cli/matrix_io.hpp"

#include <fstream>

#include "immanant/errors.hpp"
#include "immanant_cli/format.hpp"

namespace immanant::cli {

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.at("rows").is_array()) {
    throw ParseError("matrix: expected an object with a \"rows\" array");
  }
  const auto& rows = j.at("rows");
  if (rows.empty()) throw ParseError("matrix: \"rows\" is empty");
  const std::size_t ncols = rows.front().is_array() ? rows.front().size() : 0;
  if (ncols == 0) throw ParseError("matrix: rows must be non-empty arrays");
  ComplexMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(ncols));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (!row.is_array() || row.size() != ncols) {
      throw ParseError("matrix: row " + std::to_string(r + 1) + " has the wrong length");
    }
    for (std::size_t c = 0; c < ncols; ++c) {
      const auto& e = row[c];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        throw ParseError("matrix: entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                         ") is not a [re, im] pair");
      }
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return {{"rows", std::move(rows)}};
}

ComplexMatrix read_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("matrix: cannot open '" + path.string() + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("matrix: '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return matrix_from_json(j);
}

void write_matrix(const std::filesystem::path& path, const ComplexMatrix& m) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write '" + path.string() + "'");
  out << matrix_to_json(m).dump(2) << '\n';
}

nlohmann::json decomposition_to_json(const Decomposition& d) {
  nlohmann::json layers = nlohmann::json::array();
  for (const auto& l : d.layers) {
    layers.push_back({{"i", l.i + 1}, {"j", l.j + 1}, {"theta", l.theta}, {"phi", l.phi}});
  }
  return {{"modes", d.modes}, {"layers", std::move(layers)}, {"phases", d.phases}};
}

Decomposition decomposition_from_json(const nlohmann::json& j) {
  try {
    Decomposition d;
    j.at("modes").get_to(d.modes);
    for (const auto& l : j.at("layers")) {
      d.layers.push_back({l.at("i").get<int>() - 1, l.at("j").get<int>() - 1, l.at("theta").get<double>(),
                          l.at("phi").get<double>()});
    }
    j.at("phases").get_to(d.phases);
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("decomposition: ") + e.what());
  }
}

}  // namespace immanant::cli
