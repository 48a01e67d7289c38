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

#include "immanant/basis.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "immanant/characters.hpp"
#include "immanant/errors.hpp"
#include "immanant/optics.hpp"

namespace immanant {
namespace {

constexpr double kRankTolerance = 1e-9;

Eigen::VectorXd singular_values(const ComplexMatrix& m) {
  return Eigen::BDCSVD<ComplexMatrix>(m).singularValues();
}

}  // namespace

BasisProjection project_onto_basis(const CoefficientMap& rate_map, const Partition& lambda,
                                   std::span<const Permutation> basis,
                                   const BasisProjectionOptions& options) {
  const int n = lambda.size();
  if (basis.empty()) throw ValidationError("project_onto_basis: empty basis");
  if (n > kMaxRateOrder) {
    throw SizeLimitError("project_onto_basis: n = " + std::to_string(n) + " exceeds " +
                         std::to_string(kMaxRateOrder));
  }
  std::set<Permutation> distinct;
  for (const auto& b : basis) {
    if (b.size() != n) throw DimensionError("project_onto_basis: basis permutation size mismatch");
    if (!distinct.insert(b).second) {
      throw DependentBasisError("project_onto_basis: basis lists " + b.to_cycle_string() + " twice");
    }
  }
  if (!rate_map.empty() && rate_map.order() != n) {
    throw DimensionError("project_onto_basis: map keys act on " + std::to_string(rate_map.order()) +
                         " symbols, partition has size " + std::to_string(n));
  }

  const std::size_t nb = basis.size();
  const std::size_t unknowns = nb * nb;
  const std::size_t samples = 2 * unknowns + static_cast<std::size_t>(std::max(options.extra_samples, 0));

  std::vector<std::size_t> basis_rank(nb);
  for (std::size_t b = 0; b < nb; ++b) basis_rank[b] = lexicographic_rank(basis[b]);

  std::vector<std::pair<std::size_t, std::size_t>> map_ranks;
  std::vector<Complex> map_values;
  for (const auto& [key, a] : rate_map) {
    map_ranks.emplace_back(lexicographic_rank(key.first), lexicographic_rank(key.second));
    map_values.push_back(a);
  }

  std::mt19937_64 rng(options.seed);
  ComplexMatrix basis_values(static_cast<Eigen::Index>(samples), static_cast<Eigen::Index>(nb));
  ComplexMatrix design(static_cast<Eigen::Index>(samples), static_cast<Eigen::Index>(unknowns));
  Eigen::VectorXcd target(static_cast<Eigen::Index>(samples));

  for (std::size_t r = 0; r < samples; ++r) {
    const ComplexMatrix u = random_gaussian_matrix(n, n, rng);
    const auto imms = row_permuted_immanants(u, lambda);
    Complex f{0.0, 0.0};
    for (std::size_t k = 0; k < map_values.size(); ++k) {
      f += map_values[k] * imms[map_ranks[k].first] * std::conj(imms[map_ranks[k].second]);
    }
    target(static_cast<Eigen::Index>(r)) = f;
    for (std::size_t b = 0; b < nb; ++b) {
      basis_values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(b)) = imms[basis_rank[b]];
    }
    for (std::size_t b = 0; b < nb; ++b) {
      for (std::size_t c = 0; c < nb; ++c) {
        design(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(b * nb + c)) =
            imms[basis_rank[b]] * std::conj(imms[basis_rank[c]]);
      }
    }
  }

  // Column-normalize before the rank test so immanant magnitude does not
  // masquerade as dependence.
  ComplexMatrix normalized = basis_values;
  for (Eigen::Index c = 0; c < normalized.cols(); ++c) {
    const double norm = normalized.col(c).norm();
    if (norm == 0.0) {
      throw DependentBasisError("project_onto_basis: basis immanant " + basis[static_cast<std::size_t>(c)].to_cycle_string() +
                                " vanishes identically");
    }
    normalized.col(c) /= norm;
  }
  const Eigen::VectorXd sv = singular_values(normalized);
  if (sv.minCoeff() < kRankTolerance * sv.maxCoeff()) {
    throw DependentBasisError("project_onto_basis: basis immanants are linearly dependent for " +
                              lambda.to_string());
  }

  const Eigen::VectorXcd solution = design.colPivHouseholderQr().solve(target);
  const double target_norm = target.norm();
  const double misfit = (design * solution - target).norm();
  const double residual = target_norm > 0.0 ? misfit / target_norm : misfit;
  if (!(residual <= options.residual_tolerance)) {
    throw BasisSpanError("project_onto_basis: basis does not span the map (residual " +
                             std::to_string(residual) + ")",
                         residual);
  }

  BasisProjection out;
  out.residual = residual;
  out.samples = samples;
  for (std::size_t b = 0; b < nb; ++b) {
    for (std::size_t c = 0; c < nb; ++c) {
      out.coefficients.set(basis[b], basis[c], solution(static_cast<Eigen::Index>(b * nb + c)));
    }
  }
  return out;
}

ComplexMatrix row_permutation_relations(const Partition& lambda, std::uint64_t seed) {
  const int n = lambda.size();
  if (n > kMaxRateOrder) {
    throw SizeLimitError("row_permutation_relations: n = " + std::to_string(n) + " exceeds " +
                         std::to_string(kMaxRateOrder));
  }
  const auto count = static_cast<Eigen::Index>(factorial(n));
  const Eigen::Index samples = count + 16;
  std::mt19937_64 rng(seed);
  ComplexMatrix values(samples, count);
  for (Eigen::Index r = 0; r < samples; ++r) {
    const auto imms = row_permuted_immanants(random_gaussian_matrix(n, n, rng), lambda);
    for (Eigen::Index k = 0; k < count; ++k) values(r, k) = imms[static_cast<std::size_t>(k)];
  }
  Eigen::BDCSVD<ComplexMatrix> svd(values, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  Eigen::Index rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    if (sv(k) > kRankTolerance * sv(0)) ++rank;
  }
  return svd.matrixV().rightCols(count - rank);
}

}  // namespace immanant
