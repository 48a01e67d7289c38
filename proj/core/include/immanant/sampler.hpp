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
#include <optional>
#include <vector>

#include "immanant/matrix.hpp"
#include "immanant/optics.hpp"
#include "immanant/partition.hpp"

namespace immanant {

enum class IntervalKind {
  kWald,    // l/L +- (z/L) sqrt(l(L-l)/L)
  kWilson,  // score interval; nonzero width at l = 0 and l = L
};

// Outcome of L simulated coincidence trials.
struct SamplingReport {
  std::int64_t trials = 0;     // L
  std::int64_t successes = 0;  // l
  double estimate = 0.0;       // l / L (Wald) or the Wilson centre
  double z = 1.96;
  double half_width = 0.0;
  std::uint64_t seed = 0;
  IntervalKind interval = IntervalKind::kWald;
  // The probability the trials were drawn with, when known.
  std::optional<double> exact_probability;

  double lower() const { return estimate - half_width; }
  double upper() const { return estimate + half_width; }
  bool covers(double p) const { return lower() <= p && p <= upper(); }
};

inline constexpr double kDefaultZ = 1.96;

// Trials up to this count are drawn one Bernoulli at a time.
inline constexpr std::int64_t kBernoulliTrialLimit = 1'000'000;

// Wald half width (z/L) sqrt(l(L-l)/L).
double wald_half_width(std::int64_t successes, std::int64_t trials, double z = kDefaultZ);

// Fills estimate and half_width from (successes, trials, z, kind).
void apply_interval(SamplingReport& report);

// Draws l ~ Binomial(L, p). Throws ValidationError for p outside [0, 1],
// L < 1 or z <= 0.
SamplingReport simulate(double p, std::int64_t trials, std::uint64_t seed, double z = kDefaultZ,
                        IntervalKind kind = IntervalKind::kWald);

// Smallest L with z sqrt(p(1-p)/L) <= epsilon, at least 1. A p_guess of 0
// or 1 is replaced by the worst case 1/2 (with a warning).
std::int64_t required_trials(double p_guess, double epsilon, double z = kDefaultZ);

// simulate(normalized_rate(u, lambda, tau, s), ...) with the exact
// probability recorded in the report.
SamplingReport estimate_rate(const ComplexMatrix& u, const Partition& lambda, double tau,
                             const SpectralProfile& s, std::int64_t trials, std::uint64_t seed,
                             double z = kDefaultZ, IntervalKind kind = IntervalKind::kWald);

// Seed for replication `index` of a study seeded with `seed`.
std::uint64_t replication_seed(std::uint64_t seed, std::uint64_t index);

// `replications` independent runs of simulate(p, trials, replication_seed(seed, r)).
std::vector<SamplingReport> replicate(double p, std::int64_t trials, std::int64_t replications,
                                      std::uint64_t seed, double z = kDefaultZ,
                                      IntervalKind kind = IntervalKind::kWald);

// Fraction of replicate(...) intervals that contain p.
double coverage(double p, std::int64_t trials, std::int64_t replications, std::uint64_t seed,
                double z = kDefaultZ, IntervalKind kind = IntervalKind::kWald);

}  // namespace immanant
