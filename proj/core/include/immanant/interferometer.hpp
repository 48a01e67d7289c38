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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "immanant/matrix.hpp"

namespace immanant {

inline constexpr int kMaxInterferometerModes = 16;

// Haar-distributed m x m unitary (QR of a complex Ginibre matrix with the
// R-diagonal phases absorbed). Deterministic for a given seed.
ComplexMatrix haar_random_unitary(int m, std::uint64_t seed);

// max_ij |(U^dagger U - I)_ij|; throws DimensionError for non-square input.
double unitarity_deviation(const ComplexMatrix& u);

// Keeps the listed rows (input channels) and columns (detected channels),
// 0-based and strictly increasing. The result is generally not unitary.
ComplexMatrix submatrix(const ComplexMatrix& u, std::span<const int> input_rows,
                        std::span<const int> output_cols);

// Two-channel mixer acting on modes i < j (0-based):
//   [[e^{i phi} cos(theta), -sin(theta)],
//    [e^{i phi} sin(theta),  cos(theta)]]
// theta in [0, pi/2], phi in [0, 2 pi).
struct BeamsplitterLayer {
  int i;
  int j;
  double theta;
  double phi;
};

// U = diag(e^{i phases}) * T_K * ... * T_1 with layers stored in application
// order (T_1 acts first).
struct Decomposition {
  int modes = 0;
  std::vector<BeamsplitterLayer> layers;
  std::vector<double> phases;
};

// m x m matrix of a single layer.
ComplexMatrix layer_matrix(const BeamsplitterLayer& layer, int m);

// Triangular (Reck-style) nulling: for each row from the bottom up, the
// entries left of the diagonal are cleared one column at a time. Produces at
// most m(m-1)/2 layers. Throws UnitarityError when the input deviates from
// unitarity by more than 1e-8.
Decomposition decompose(const ComplexMatrix& u);

ComplexMatrix reconstruct(const Decomposition& d);

inline constexpr double kDecomposeUnitarityTolerance = 1e-8;

}  // namespace immanant
