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

#include <benchmark/benchmark.h>

#include "immanant/characters.hpp"
#include "immanant/interferometer.hpp"
#include "immanant/optics.hpp"

namespace {

using namespace immanant;

Partition mixed(int n) {
  std::vector<int> parts{n - 1, 1};
  return Partition(parts);
}

void BM_RateDirect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ComplexMatrix u = haar_random_unitary(n, 3);
  const Partition lambda = mixed(n);
  for (auto _ : state) benchmark::DoNotOptimize(rate_direct(u, lambda, 0.8));
}
BENCHMARK(BM_RateDirect)->DenseRange(3, 5)->Unit(benchmark::kMicrosecond);

void BM_RateViaImmanants(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ComplexMatrix u = haar_random_unitary(n, 3);
  const Partition lambda = mixed(n);
  for (auto _ : state) benchmark::DoNotOptimize(rate_via_immanants(u, lambda, 0.8));
}
BENCHMARK(BM_RateViaImmanants)->DenseRange(3, 5)->Unit(benchmark::kMicrosecond);

void BM_RatePolynomial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ComplexMatrix u = haar_random_unitary(n, 3);
  const Partition lambda = mixed(n);
  const auto d = DelayScheme::equally_spaced(n, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(rate_polynomial(u, lambda, d));
}
BENCHMARK(BM_RatePolynomial)->DenseRange(3, 5)->Unit(benchmark::kMicrosecond);

// One rate polynomial, then each delay costs a Horner evaluation.
void BM_ScanFromPolynomial(benchmark::State& state) {
  const ComplexMatrix u = haar_random_unitary(4, 3);
  const auto poly = rate_polynomial(u, mixed(4), DelayScheme::equally_spaced(4, 1.0));
  for (auto _ : state) {
    double acc = 0.0;
    for (int k = 0; k < 121; ++k) acc += poly.evaluate(gtilde(0.025 * k));
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_ScanFromPolynomial);

}  // namespace
