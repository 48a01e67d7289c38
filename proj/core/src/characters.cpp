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

#include "immanant/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

#include "immanant/errors.hpp"

namespace immanant {
namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;

struct Cache {
  std::shared_mutex mutex;
  std::map<Key, int> values;
};

Cache& cache() {
  static Cache c;
  return c;
}

// `lambda` may be empty (the partition of zero). `mu` is consumed from the
// front; its parts can be in any order.
int murnaghan_nakayama(const std::vector<int>& lambda, std::span<const int> mu) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;

  Key key{lambda, std::vector<int>(mu.begin(), mu.end())};
  {
    std::shared_lock lock(cache().mutex);
    auto it = cache().values.find(key);
    if (it != cache().values.end()) return it->second;
  }

  const int r = mu.front();
  const auto rest = mu.subspan(1);
  const int len = static_cast<int>(lambda.size());

  // Beta set (first-column hook lengths), strictly decreasing.
  std::vector<int> beta(lambda.size());
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);

  int total = 0;
  for (int i = 0; i < len; ++i) {
    const int from = beta[static_cast<std::size_t>(i)];
    const int to = from - r;
    if (to < 0) continue;
    if (std::find(beta.begin(), beta.end(), to) != beta.end()) continue;

    // Removing a rim hook of length r: slide one bead down by r. The hook's
    // leg length is the number of beads jumped over.
    int jumped = 0;
    for (int b : beta) {
      if (b > to && b < from) ++jumped;
    }
    std::vector<int> next_beta = beta;
    next_beta[static_cast<std::size_t>(i)] = to;
    std::sort(next_beta.begin(), next_beta.end(), std::greater<>());
    std::vector<int> next;
    for (int k = 0; k < len; ++k) {
      const int part = next_beta[static_cast<std::size_t>(k)] - (len - 1 - k);
      if (part > 0) next.push_back(part);
    }
    const int sign = (jumped % 2 == 0) ? 1 : -1;
    total += sign * murnaghan_nakayama(next, rest);
  }

  std::unique_lock lock(cache().mutex);
  cache().values.emplace(std::move(key), total);
  return total;
}

}  // namespace

int character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) {
    throw DimensionError("character: irrep " + lambda.to_string() + " and class " +
                         mu.to_string() + " have different sizes");
  }
  const std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
  return murnaghan_nakayama(parts, mu.parts());
}

int character(const Partition& lambda, const Permutation& sigma) {
  return character(lambda, cycle_type(sigma));
}

std::vector<int> character_values(const Partition& lambda, std::span<const Permutation> perms) {
  std::vector<int> out;
  out.reserve(perms.size());
  std::map<Partition, int> by_class;
  for (const auto& p : perms) {
    const Partition mu = cycle_type(p);
    auto it = by_class.find(mu);
    if (it == by_class.end()) it = by_class.emplace(mu, character(lambda, mu)).first;
    out.push_back(it->second);
  }
  return out;
}

std::int64_t dimension(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  std::int64_t hooks = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j) {
      const int arm = lambda[static_cast<std::size_t>(i)] - j - 1;
      const int leg = conj[static_cast<std::size_t>(j)] - i - 1;
      hooks *= arm + leg + 1;
    }
  }
  return factorial(lambda.size()) / hooks;
}

CharacterTable::CharacterTable(int n) : n_(n), irreps_(partitions(n)) {
  classes_.assign(irreps_.rbegin(), irreps_.rend());
  values_.reserve(irreps_.size() * classes_.size());
  for (const auto& lambda : irreps_) {
    for (const auto& mu : classes_) values_.push_back(character(lambda, mu));
  }
}

int CharacterTable::at(const Partition& irrep, const Partition& cls) const {
  const auto ri = std::find(irreps_.begin(), irreps_.end(), irrep);
  const auto ci = std::find(classes_.begin(), classes_.end(), cls);
  if (ri == irreps_.end() || ci == classes_.end()) {
    throw ValidationError("character table of S_" + std::to_string(n_) + " has no entry for " +
                          irrep.to_string() + " x " + cls.to_string());
  }
  return (*this)(static_cast<std::size_t>(ri - irreps_.begin()),
                 static_cast<std::size_t>(ci - classes_.begin()));
}

}  // namespace immanant
