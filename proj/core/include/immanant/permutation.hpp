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

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "immanant/matrix.hpp"
#include "immanant/partition.hpp"

namespace immanant {

// Bijection of {0, ..., n-1}. Stored as the image array, so the natural
// ordering is lexicographic on images. Cycle notation is 1-based:
// "(1 3 2)" is the cycle 1 -> 3, 3 -> 2, 2 -> 1.
class Permutation {
 public:
  static Permutation identity(int n);

  // `images[i]` is the image of i (0-based). Throws ValidationError unless
  // the array is a bijection.
  static Permutation from_images(std::vector<int> images);

  // Cycles use 1-based labels. Labels not mentioned are fixed points.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  // Parses cycle notation such as "(1 3 2)(4)", "(132)" or "(1,3,2)". When
  // `n` is zero the size is the largest label seen. "()" or "e" is the
  // identity (requires n > 0).
  static Permutation parse(std::string_view text, int n = 0);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  std::span<const int> images() const noexcept { return images_; }
  bool is_identity() const noexcept;

  // Disjoint cycles of length > 1, smallest label first; "()" for identity.
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}
  std::vector<int> images_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

// (p o q)(i) = p(q(i)): q is applied first.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

// +1 for even permutations, -1 for odd.
int parity(const Permutation& p);

Partition cycle_type(const Permutation& p);

// All n! permutations in lexicographic order of their image arrays; the
// identity comes first. Throws SizeLimitError outside 1..kMaxSymmetricOrder.
std::vector<Permutation> enumerate(int n);

// Position of `p` in enumerate(p.size()).
std::size_t lexicographic_rank(const Permutation& p);

// result(i, j) = m(p(i), j)
ComplexMatrix permute_rows(const ComplexMatrix& m, const Permutation& p);

// result(i, j) = m(i, p(j))
ComplexMatrix permute_columns(const ComplexMatrix& m, const Permutation& p);

}  // namespace immanant
