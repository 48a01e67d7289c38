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

#include "immanant/partition.hpp"
#include "immanant/permutation.hpp"

namespace immanant {

// Irreducible character chi^lambda evaluated on the class of cycle type `mu`,
// by the Murnaghan-Nakayama rule. Results are memoized; the cache is safe
// for concurrent use. Throws DimensionError if |lambda| != |mu|.
int character(const Partition& lambda, const Partition& mu);

int character(const Partition& lambda, const Permutation& sigma);

// chi^lambda(sigma) for each sigma in `perms`, in order.
std::vector<int> character_values(const Partition& lambda, std::span<const Permutation> perms);

// Degree of the irrep, by the hook-length formula.
std::int64_t dimension(const Partition& lambda);

// Full character table of S_n. Irreps are listed [n] first, classes are
// listed by cycle type [1^n] first and [n] last.
class CharacterTable {
 public:
  explicit CharacterTable(int n);

  int n() const noexcept { return n_; }
  const std::vector<Partition>& irreps() const noexcept { return irreps_; }
  const std::vector<Partition>& classes() const noexcept { return classes_; }

  int operator()(std::size_t irrep, std::size_t cls) const {
    return values_[irrep * classes_.size() + cls];
  }
  // Lookup by labels; throws ValidationError for unknown labels.
  int at(const Partition& irrep, const Partition& cls) const;

 private:
  int n_;
  std::vector<Partition> irreps_;
  std::vector<Partition> classes_;
  std::vector<int> values_;
};

}  // namespace immanant
