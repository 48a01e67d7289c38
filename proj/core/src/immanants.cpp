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

#include "immanant/immanants.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

#include "immanant/characters.hpp"
#include "immanant/errors.hpp"

namespace immanant {
namespace {

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw DimensionError(std::string(what) + ": matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected square");
  }
  if (m.rows() < 1) throw DimensionError(std::string(what) + ": empty matrix");
}

void require_immanant_args(const ComplexMatrix& m, const Partition& lambda, const char* what) {
  require_square(m, what);
  if (lambda.size() != m.rows()) {
    throw DimensionError(std::string(what) + ": partition " + lambda.to_string() + " does not match a " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.rows()) + " matrix");
  }
  if (m.rows() > kMaxImmanantOrder) {
    throw SizeLimitError(std::string(what) + ": n = " + std::to_string(m.rows()) + " exceeds " +
                         std::to_string(kMaxImmanantOrder));
  }
}

// Permutations with a nonzero character, stored flat (n images each).
struct WeightedTerms {
  int n = 0;
  std::vector<std::uint8_t> images;
  std::vector<double> weights;
};

std::shared_ptr<const WeightedTerms> weighted_terms(const Partition& lambda) {
  static std::shared_mutex mutex;
  static std::map<Partition, std::shared_ptr<const WeightedTerms>> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(lambda); it != cache.end()) return it->second;
  }
  auto terms = std::make_shared<WeightedTerms>();
  terms->n = lambda.size();
  const auto perms = enumerate(terms->n);
  const auto chi = character_values(lambda, perms);
  for (std::size_t k = 0; k < perms.size(); ++k) {
    if (chi[k] == 0) continue;
    for (int v : perms[k].images()) terms->images.push_back(static_cast<std::uint8_t>(v));
    terms->weights.push_back(chi[k]);
  }
  std::unique_lock lock(mutex);
  return cache.emplace(lambda, std::move(terms)).first->second;
}

Complex weighted_sum(const ComplexMatrix& m, const WeightedTerms& terms) {
  Complex total{0.0, 0.0};
  const int n = terms.n;
  const std::uint8_t* s = terms.images.data();
  for (double w : terms.weights) {
    Complex term = m(0, s[0]);
    for (int i = 1; i < n; ++i) term *= m(i, s[i]);
    total += w * term;
    s += n;
  }
  return total;
}

}  // namespace

Complex immanant(const ComplexMatrix& m, const Partition& lambda) {
  require_immanant_args(m, lambda, "immanant");
  return weighted_sum(m, *weighted_terms(lambda));
}

Complex permanent(const ComplexMatrix& m) {
  require_square(m, "permanent");
  const int n = static_cast<int>(m.rows());
  if (n > kMaxPermanentOrder) {
    throw SizeLimitError("permanent: n = " + std::to_string(n) + " exceeds " +
                         std::to_string(kMaxPermanentOrder));
  }
  if (n == 1) return m(0, 0);

  // per(A) = (-1)^(n-1) 2 sum_{S subset of first n-1 columns} (-1)^|S|
  //          prod_i (x_i + sum_{j in S} a_ij),  x_i = a_i,n-1 - (1/2) sum_j a_ij
  std::vector<Complex> sums(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) sums[static_cast<std::size_t>(i)] = m(i, n - 1) - 0.5 * m.row(i).sum();

  auto row_product = [&] {
    Complex p = sums[0];
    for (int i = 1; i < n; ++i) p *= sums[static_cast<std::size_t>(i)];
    return p;
  };

  Complex total = row_product();
  const std::uint64_t subsets = std::uint64_t{1} << (n - 1);
  std::uint64_t gray = 0;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const int j = std::countr_zero(k);
    const std::uint64_t bit = std::uint64_t{1} << j;
    gray ^= bit;
    const double sign_update = (gray & bit) ? 1.0 : -1.0;
    for (int i = 0; i < n; ++i) sums[static_cast<std::size_t>(i)] += sign_update * m(i, j);
    const double sign = (std::popcount(gray) % 2 == 0) ? 1.0 : -1.0;
    total += sign * row_product();
  }
  const double lead = ((n - 1) % 2 == 0) ? 2.0 : -2.0;
  return lead * total;
}

Complex determinant(const ComplexMatrix& m) {
  require_square(m, "determinant");
  return m.partialPivLu().determinant();
}

std::vector<Complex> row_permuted_immanants(const ComplexMatrix& m, const Partition& lambda) {
  require_immanant_args(m, lambda, "row_permuted_immanants");
  const auto perms = enumerate(static_cast<int>(m.rows()));
  const auto terms = weighted_terms(lambda);
  std::vector<Complex> out;
  out.reserve(perms.size());
  for (const auto& p : perms) out.push_back(weighted_sum(permute_rows(m, p), *terms));
  return out;
}

Complex column_permuted_immanant_sum(const ComplexMatrix& m, const Partition& lambda) {
  require_immanant_args(m, lambda, "column_permuted_immanant_sum");
  const auto perms = enumerate(static_cast<int>(m.rows()));
  const auto terms = weighted_terms(lambda);
  Complex total{0.0, 0.0};
  for (const auto& p : perms) total += weighted_sum(permute_columns(m, p), *terms);
  return total;
}

void CoefficientMap::check_order(const Permutation& first, const Permutation& second) {
  if (first.size() != second.size()) {
    throw DimensionError("coefficient key permutations act on different sizes");
  }
  if (order_ != 0 && first.size() != order_) {
    throw DimensionError("coefficient key acts on " + std::to_string(first.size()) +
                         " symbols, map holds " + std::to_string(order_));
  }
  order_ = first.size();
}

void CoefficientMap::set(const Permutation& first, const Permutation& second, Complex value) {
  check_order(first, second);
  entries_[{first, second}] = value;
}

void CoefficientMap::add(const Permutation& first, const Permutation& second, Complex value) {
  check_order(first, second);
  entries_[{first, second}] += value;
}

Complex CoefficientMap::get(const Permutation& first, const Permutation& second) const {
  const auto it = entries_.find({first, second});
  return it == entries_.end() ? Complex{0.0, 0.0} : it->second;
}

bool CoefficientMap::is_hermitian(double tol) const {
  for (const auto& [key, value] : entries_) {
    if (std::abs(value - std::conj(get(key.second, key.first))) > tol) return false;
  }
  return true;
}

Complex quadratic_form(const ComplexMatrix& m, const Partition& lambda, const CoefficientMap& coeffs) {
  if (coeffs.empty()) return {0.0, 0.0};
  require_immanant_args(m, lambda, "quadratic_form");
  if (coeffs.order() != m.rows()) {
    throw DimensionError("quadratic_form: coefficient keys act on " + std::to_string(coeffs.order()) +
                         " symbols, matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.rows()));
  }
  const auto perms = enumerate(static_cast<int>(m.rows()));
  const auto terms = weighted_terms(lambda);
  std::map<Permutation, Complex> values;
  auto imm_of = [&](const Permutation& p) -> Complex {
    auto it = values.find(p);
    if (it == values.end()) it = values.emplace(p, weighted_sum(permute_rows(m, p), *terms)).first;
    return it->second;
  };
  Complex total{0.0, 0.0};
  for (const auto& [key, a] : coeffs) total += a * imm_of(key.first) * std::conj(imm_of(key.second));
  return total;
}

}  // namespace immanant
