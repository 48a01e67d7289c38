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

#include "immanant/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <ostream>
#include <sstream>

#include "immanant/errors.hpp"

namespace immanant {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw ValidationError("partition must have at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw ValidationError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw ValidationError("partition parts must be weakly decreasing: " + to_string());
    }
    size_ += parts_[i];
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      int value = 0;
      auto [end, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc()) throw ParseError("partition part out of range in '" + std::string(text) + "'");
      parts.push_back(value);
      i = static_cast<std::size_t>(end - text.data());
    } else if (c == ',' || c == ' ' || c == '[' || c == ']' || c == '(' || c == ')' || c == '\t') {
      ++i;
    } else {
      throw ParseError("unexpected character '" + std::string(1, c) + "' in partition '" +
                       std::string(text) + "'");
    }
  }
  if (parts.empty()) throw ParseError("empty partition '" + std::string(text) + "'");
  try {
    return Partition(std::move(parts));
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
}

Partition Partition::single_row(int n) {
  return Partition(std::vector<int>{n});
}

Partition Partition::single_column(int n) {
  if (n < 1) throw ValidationError("partition size must be positive");
  return Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
}

Partition Partition::conjugate() const {
  std::vector<int> out(static_cast<std::size_t>(parts_.front()), 0);
  for (int p : parts_) {
    for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << p.to_string();
}

namespace {

void fill_partitions(int remaining, int max_part, std::vector<int>& prefix,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    fill_partitions(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 1 || n > kMaxSymmetricOrder) {
    throw SizeLimitError("partitions: n = " + std::to_string(n) + " outside 1.." +
                         std::to_string(kMaxSymmetricOrder));
  }
  std::vector<Partition> out;
  std::vector<int> prefix;
  fill_partitions(n, n, prefix, out);
  return out;
}

std::int64_t factorial(int n) {
  if (n < 0 || n > 20) throw SizeLimitError("factorial: n = " + std::to_string(n) + " out of range");
  std::int64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

std::int64_t class_size(const Partition& mu) {
  // z_mu = prod_k k^{m_k} m_k!
  std::map<int, int> multiplicity;
  for (int part : mu.parts()) ++multiplicity[part];
  std::int64_t z = 1;
  for (auto [k, m] : multiplicity) {
    for (int r = 0; r < m; ++r) z *= k;
    z *= factorial(m);
  }
  return factorial(mu.size()) / z;
}

}  // namespace immanant
