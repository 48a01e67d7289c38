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

#include <cmath>
#include <cstdint>
#include <random>
#include <span>

#include "immanant/immanants.hpp"
#include "immanant/matrix.hpp"
#include "immanant/partition.hpp"
#include "immanant/permutation.hpp"

namespace immanant {

struct BasisProjectionOptions {
  std::uint64_t seed = 0x1de5a11;
  // Random matrices drawn beyond the minimum of 2 |basis|^2.
  int extra_samples = 8;
  double residual_tolerance = 1e-8;
};

struct BasisProjection {
  // a(b, b') over ordered basis pairs; Hermitian whenever the input map is.
  CoefficientMap coefficients;
  // ||fit - target|| / ||target|| over the sampled matrices.
  double residual = 0.0;
  std::size_t samples = 0;
};

// Rewrites F(U) = sum a(s,s') J_s conj(J_s'), J_s = imm^lambda(permute_rows(U, s)),
// over a smaller set of row permutations by least squares on random complex
// Gaussian matrices. Throws DependentBasisError if the basis immanants are
// linearly dependent and BasisSpanError if the fit residual exceeds the
// tolerance (the basis does not span the map's immanants).
BasisProjection project_onto_basis(const CoefficientMap& rate_map, const Partition& lambda,
                                   std::span<const Permutation> basis,
                                   const BasisProjectionOptions& options = {});

// Linear relations among the n! row-permuted lambda-immanants. Column c of
// the result satisfies sum_k c_k imm^lambda(permute_rows(U, enumerate(n)[k])) = 0
// for every U; columns are orthonormal. The number of columns is
// n! - dim(lambda)^2. Limited to n <= 5.
ComplexMatrix row_permutation_relations(const Partition& lambda, std::uint64_t seed = 0x1de5a11);

// Draws an rows x cols matrix of independent standard complex Gaussians
// (real and imaginary parts each of variance 1/2).
template <class Rng>
ComplexMatrix random_gaussian_matrix(int rows, int cols, Rng& rng);

template <class Rng>
ComplexMatrix random_gaussian_matrix(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  ComplexMatrix m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(i, j) = Complex(re, im);
    }
  }
  return m;
}

}  // namespace immanant
