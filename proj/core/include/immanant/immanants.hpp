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

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "immanant/matrix.hpp"
#include "immanant/partition.hpp"
#include "immanant/permutation.hpp"

namespace immanant {

// The immanant sum has n! terms; permanent uses a 2^(n-1) Gray-code loop.
inline constexpr int kMaxImmanantOrder = 8;
inline constexpr int kMaxPermanentOrder = 24;

// imm^lambda(M) = sum_sigma chi^lambda(sigma) prod_i M(i, sigma(i)), summed
// over sigma in lexicographic order so results are bit-reproducible.
// Throws DimensionError for non-square input or |lambda| != n, and
// SizeLimitError beyond kMaxImmanantOrder.
Complex immanant(const ComplexMatrix& m, const Partition& lambda);

// Ryser's formula in the Nijenhuis-Wilf form (row sums centred on half the
// row total, Gray-code subset walk).
Complex permanent(const ComplexMatrix& m);

// LU with partial pivoting.
Complex determinant(const ComplexMatrix& m);

// Entry k is imm^lambda(permute_rows(m, enumerate(n)[k])).
std::vector<Complex> row_permuted_immanants(const ComplexMatrix& m, const Partition& lambda);

// sum_sigma imm^lambda(permute_columns(m, sigma)). Equals
// (sum_sigma chi^lambda(sigma)) * per(m), hence zero unless lambda = [n].
Complex column_permuted_immanant_sum(const ComplexMatrix& m, const Partition& lambda);

// Coefficients a(sigma, sigma') of a quadratic form in row-permuted
// immanants. Keys are ordered lexicographically, so iteration (and any
// serialization built on it) is deterministic.
class CoefficientMap {
 public:
  using Key = std::pair<Permutation, Permutation>;
  using Storage = std::map<Key, Complex>;

  // Inserts or overwrites. Throws DimensionError when the two permutations,
  // or this key and earlier keys, act on different numbers of symbols.
  void set(const Permutation& first, const Permutation& second, Complex value);
  void add(const Permutation& first, const Permutation& second, Complex value);

  // Zero when the pair is absent.
  Complex get(const Permutation& first, const Permutation& second) const;

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  // Number of symbols the keys act on; zero for an empty map.
  int order() const noexcept { return order_; }

  Storage::const_iterator begin() const noexcept { return entries_.begin(); }
  Storage::const_iterator end() const noexcept { return entries_.end(); }

  // a(s, s') == conj(a(s', s)) for every stored pair, within `tol`.
  bool is_hermitian(double tol = 1e-12) const;

 private:
  void check_order(const Permutation& first, const Permutation& second);

  Storage entries_;
  int order_ = 0;
};

// F(M) = sum a(s, s') imm(permute_rows(M, s)) conj(imm(permute_rows(M, s'))).
Complex quadratic_form(const ComplexMatrix& m, const Partition& lambda, const CoefficientMap& coeffs);

}  // namespace immanant
