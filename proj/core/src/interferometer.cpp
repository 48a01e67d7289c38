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

#include "immanant/interferometer.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "immanant/basis.hpp"
#include "immanant/errors.hpp"

namespace immanant {

ComplexMatrix haar_random_unitary(int m, std::uint64_t seed) {
  if (m < 1 || m > kMaxInterferometerModes) {
    throw SizeLimitError("haar_random_unitary: m = " + std::to_string(m) + " outside 1.." +
                         std::to_string(kMaxInterferometerModes));
  }
  std::mt19937_64 rng(seed);
  const ComplexMatrix z = random_gaussian_matrix(m, m, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(m, m);
  const ComplexMatrix& r = qr.matrixQR();
  for (int k = 0; k < m; ++k) {
    const Complex d = r(k, k);
    const double mag = std::abs(d);
    q.col(k) *= (mag > 0.0) ? d / mag : Complex(1.0, 0.0);
  }
  return q;
}

double unitarity_deviation(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) throw DimensionError("unitarity_deviation: matrix is not square");
  const ComplexMatrix g = u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols());
  return g.cwiseAbs().maxCoeff();
}

ComplexMatrix submatrix(const ComplexMatrix& u, std::span<const int> input_rows,
                        std::span<const int> output_cols) {
  auto check = [](std::span<const int> idx, Eigen::Index limit, const char* what) {
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] < 0 || idx[k] >= limit) {
        throw ValidationError(std::string("submatrix: ") + what + " index " + std::to_string(idx[k]) +
                              " out of range");
      }
      if (k > 0 && idx[k] <= idx[k - 1]) {
        throw ValidationError(std::string("submatrix: ") + what +
                              " indices must be strictly increasing without duplicates");
      }
    }
  };
  check(input_rows, u.rows(), "row");
  check(output_cols, u.cols(), "column");
  if (input_rows.size() != output_cols.size() || input_rows.empty()) {
    throw DimensionError("submatrix: need equally many (and at least one) rows and columns");
  }
  const auto n = static_cast<Eigen::Index>(input_rows.size());
  ComplexMatrix out(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) out(r, c) = u(input_rows[static_cast<std::size_t>(r)], output_cols[static_cast<std::size_t>(c)]);
  }
  return out;
}

ComplexMatrix layer_matrix(const BeamsplitterLayer& layer, int m) {
  if (layer.i < 0 || layer.j >= m || layer.i >= layer.j) {
    throw ValidationError("beamsplitter layer needs 0 <= i < j < m");
  }
  ComplexMatrix t = ComplexMatrix::Identity(m, m);
  const Complex phase = std::polar(1.0, layer.phi);
  const double c = std::cos(layer.theta);
  const double s = std::sin(layer.theta);
  t(layer.i, layer.i) = phase * c;
  t(layer.i, layer.j) = -s;
  t(layer.j, layer.i) = phase * s;
  t(layer.j, layer.j) = c;
  return t;
}

namespace {

// Right-multiplies w by the inverse of `layer` in place (columns i and j).
void apply_inverse_on_right(ComplexMatrix& w, const BeamsplitterLayer& layer) {
  const Complex conj_phase = std::polar(1.0, -layer.phi);
  const double c = std::cos(layer.theta);
  const double s = std::sin(layer.theta);
  for (Eigen::Index r = 0; r < w.rows(); ++r) {
    const Complex a = w(r, layer.i);
    const Complex b = w(r, layer.j);
    w(r, layer.i) = a * conj_phase * c - b * s;
    w(r, layer.j) = a * conj_phase * s + b * c;
  }
}

double wrap_angle(double phi) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  phi = std::fmod(phi, two_pi);
  if (phi < 0.0) phi += two_pi;
  if (phi >= two_pi) phi = 0.0;
  return phi;
}

}  // namespace

Decomposition decompose(const ComplexMatrix& u) {
  if (u.rows() != u.cols() || u.rows() < 1) throw DimensionError("decompose: matrix must be square");
  const double deviation = unitarity_deviation(u);
  if (deviation > kDecomposeUnitarityTolerance) {
    std::ostringstream os;
    os << "decompose: matrix is not unitary (max |U^dagger U - I| = " << deviation << ")";
    throw UnitarityError(os.str(), deviation);
  }
  const int m = static_cast<int>(u.rows());
  Decomposition out;
  out.modes = m;
  ComplexMatrix w = u;
  for (int row = m - 1; row >= 1; --row) {
    for (int col = 0; col < row; ++col) {
      // Clear w(row, col) by mixing columns col and row.
      const Complex a = w(row, col);
      const Complex b = w(row, row);
      BeamsplitterLayer layer{col, row, 0.0, 0.0};
      layer.theta = std::atan2(std::abs(a), std::abs(b));
      if (std::abs(a) > 0.0) {
        layer.phi = wrap_angle(std::arg(a) - (std::abs(b) > 0.0 ? std::arg(b) : 0.0));
      }
      apply_inverse_on_right(w, layer);
      w(row, col) = 0.0;
      out.layers.push_back(layer);
    }
  }
  out.phases.resize(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) out.phases[static_cast<std::size_t>(k)] = wrap_angle(std::arg(w(k, k)));
  return out;
}

ComplexMatrix reconstruct(const Decomposition& d) {
  const int m = d.modes;
  if (m < 1) throw ValidationError("reconstruct: decomposition has no modes");
  if (static_cast<int>(d.phases.size()) != m) {
    throw DimensionError("reconstruct: expected " + std::to_string(m) + " phases, got " +
                         std::to_string(d.phases.size()));
  }
  ComplexMatrix u = ComplexMatrix::Identity(m, m);
  for (const auto& layer : d.layers) u = layer_matrix(layer, m) * u;
  for (int k = 0; k < m; ++k) u.row(k) *= std::polar(1.0, d.phases[static_cast<std::size_t>(k)]);
  return u;
}

}  // namespace immanant
