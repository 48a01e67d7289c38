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
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace immanant {

// Largest n for which partitions(n) and the n!-sized enumerations are served.
inline constexpr int kMaxSymmetricOrder = 8;

// Integer partition of n: weakly decreasing positive parts. Used both as an
// irrep label and as a cycle type.
class Partition {
 public:
  // Throws ValidationError unless `parts` is non-empty, positive and weakly
  // decreasing.
  explicit Partition(std::vector<int> parts);

  // Accepts "3,1", "[3,1]", "3 1" and "(3,1)".
  static Partition parse(std::string_view text);
  static Partition single_row(int n);     // [n]
  static Partition single_column(int n);  // [1^n]

  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  std::span<const int> parts() const noexcept { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }

  bool is_single_row() const noexcept { return parts_.size() == 1; }
  bool is_single_column() const noexcept {
    return static_cast<int>(parts_.size()) == size_;
  }

  Partition conjugate() const;

  // "[3,1]"
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

// All partitions of n in reverse-lexicographic order: [n] first, [1^n] last.
// Throws SizeLimitError outside 1 <= n <= kMaxSymmetricOrder.
std::vector<Partition> partitions(int n);

// Number of permutations of cycle type `mu`: n! / z_mu.
std::int64_t class_size(const Partition& mu);

std::int64_t factorial(int n);

}  // namespace immanant
