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

#include "immanant/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <ostream>

#include "immanant/errors.hpp"

namespace immanant {

Permutation Permutation::identity(int n) {
  if (n < 1) throw ValidationError("permutation size must be positive");
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  if (n < 1) throw ValidationError("permutation size must be positive");
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
      throw ValidationError("image array is not a bijection on 0.." + std::to_string(n - 1));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Permutation p = identity(n);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (const auto& cycle : cycles) {
    for (int label : cycle) {
      if (label < 1 || label > n) {
        throw ValidationError("cycle label " + std::to_string(label) + " outside 1.." +
                              std::to_string(n));
      }
      if (used[static_cast<std::size_t>(label - 1)]) {
        throw ValidationError("cycle label " + std::to_string(label) + " repeated");
      }
      used[static_cast<std::size_t>(label - 1)] = true;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int from = cycle[k] - 1;
      const int to = cycle[(k + 1) % cycle.size()] - 1;
      p.images_[static_cast<std::size_t>(from)] = to;
    }
  }
  return p;
}

Permutation Permutation::parse(std::string_view text, int n) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  int largest = 0;
  bool saw_identity_token = false;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == 'e' || c == 'I') {
      saw_identity_token = true;
      ++i;
      continue;
    }
    if (c != '(') {
      throw ParseError("expected '(' in cycle notation '" + std::string(text) + "'");
    }
    const std::size_t close = text.find(')', i);
    if (close == std::string_view::npos) {
      throw ParseError("unbalanced parenthesis in '" + std::string(text) + "'");
    }
    const std::string_view body = text.substr(i + 1, close - i - 1);
    const bool separated = body.find_first_of(" ,\t") != std::string_view::npos;
    std::vector<int> cycle;
    std::size_t k = 0;
    while (k < body.size()) {
      const char b = body[k];
      if (b == ' ' || b == ',' || b == '\t') {
        ++k;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(b))) {
        throw ParseError("unexpected character '" + std::string(1, b) + "' in '" +
                         std::string(text) + "'");
      }
      int label = 0;
      if (separated) {
        auto [end, ec] = std::from_chars(body.data() + k, body.data() + body.size(), label);
        if (ec != std::errc()) throw ParseError("bad label in '" + std::string(text) + "'");
        k = static_cast<std::size_t>(end - body.data());
      } else {
        label = b - '0';
        ++k;
      }
      cycle.push_back(label);
      largest = std::max(largest, label);
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    i = close + 1;
  }
  if (n == 0) n = largest;
  if (n == 0) {
    throw ParseError(saw_identity_token || !text.empty()
                         ? "identity needs an explicit size"
                         : "empty cycle notation");
  }
  if (largest > n) {
    throw ParseError("label " + std::to_string(largest) + " exceeds size " + std::to_string(n));
  }
  try {
    return from_cycles(n, cycles);
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

std::string Permutation::to_cycle_string() const {
  const bool spaced = size() > 9;
  std::string s;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 0; start < size(); ++start) {
    if (seen[static_cast<std::size_t>(start)] || images_[static_cast<std::size_t>(start)] == start) {
      continue;
    }
    s += '(';
    int j = start;
    bool first = true;
    while (!seen[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      if (!first && spaced) s += ' ';
      s += std::to_string(j + 1);
      first = false;
      j = images_[static_cast<std::size_t>(j)];
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << p.to_cycle_string();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw DimensionError("compose: sizes " + std::to_string(p.size()) + " and " +
                         std::to_string(q.size()) + " differ");
  }
  std::vector<int> images(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) images[static_cast<std::size_t>(i)] = p(q(i));
  return Permutation::from_images(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> images(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) images[static_cast<std::size_t>(p(i))] = i;
  return Permutation::from_images(std::move(images));
}

int parity(const Permutation& p) {
  // (-1)^(n - #cycles)
  std::vector<bool> seen(static_cast<std::size_t>(p.size()), false);
  int cycles = 0;
  for (int i = 0; i < p.size(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    ++cycles;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p(j)) seen[static_cast<std::size_t>(j)] = true;
  }
  return ((p.size() - cycles) % 2 == 0) ? 1 : -1;
}

Partition cycle_type(const Permutation& p) {
  std::vector<bool> seen(static_cast<std::size_t>(p.size()), false);
  std::vector<int> lengths;
  for (int i = 0; i < p.size(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p(j)) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return Partition(std::move(lengths));
}

std::vector<Permutation> enumerate(int n) {
  if (n < 1 || n > kMaxSymmetricOrder) {
    throw SizeLimitError("enumerate: n = " + std::to_string(n) + " outside 1.." +
                         std::to_string(kMaxSymmetricOrder));
  }
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i;
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(factorial(n)));
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::size_t lexicographic_rank(const Permutation& p) {
  // Lehmer code read as a factorial-base number.
  const int n = p.size();
  std::size_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller_later = 0;
    for (int j = i + 1; j < n; ++j) {
      if (p(j) < p(i)) ++smaller_later;
    }
    rank = rank * static_cast<std::size_t>(n - i) + static_cast<std::size_t>(smaller_later);
  }
  return rank;
}

ComplexMatrix permute_rows(const ComplexMatrix& m, const Permutation& p) {
  if (m.rows() != p.size()) {
    throw DimensionError("permute_rows: matrix has " + std::to_string(m.rows()) +
                         " rows, permutation acts on " + std::to_string(p.size()));
  }
  ComplexMatrix out(m.rows(), m.cols());
  for (int i = 0; i < p.size(); ++i) out.row(i) = m.row(p(i));
  return out;
}

ComplexMatrix permute_columns(const ComplexMatrix& m, const Permutation& p) {
  if (m.cols() != p.size()) {
    throw DimensionError("permute_columns: matrix has " + std::to_string(m.cols()) +
                         " columns, permutation acts on " + std::to_string(p.size()));
  }
  ComplexMatrix out(m.rows(), m.cols());
  for (int j = 0; j < p.size(); ++j) out.col(j) = m.col(p(j));
  return out;
}

}  // namespace immanant
