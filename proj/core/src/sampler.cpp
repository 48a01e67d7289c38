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

#include "immanant/sampler.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "immanant/diagnostics.hpp"
#include "immanant/errors.hpp"

namespace immanant {
namespace {

// Normalized rates of sub-unitary matrices may overshoot 1 by round-off.
constexpr double kProbabilitySlack = 1e-10;

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream os;
    os << "probability " << p << " outside [0, 1]";
    throw ValidationError(os.str());
  }
}

std::int64_t draw_successes(double p, std::int64_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  if (trials <= kBernoulliTrialLimit) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::int64_t l = 0;
    for (std::int64_t t = 0; t < trials; ++t) {
      if (unit(rng) < p) ++l;
    }
    return l;
  }
  std::binomial_distribution<std::int64_t> binomial(trials, p);
  return binomial(rng);
}

}  // namespace

double wald_half_width(std::int64_t successes, std::int64_t trials, double z) {
  const double l = static_cast<double>(successes);
  const double total = static_cast<double>(trials);
  return (z / total) * std::sqrt(l * (total - l) / total);
}

void apply_interval(SamplingReport& report) {
  const double total = static_cast<double>(report.trials);
  const double phat = static_cast<double>(report.successes) / total;
  if (report.interval == IntervalKind::kWald) {
    report.estimate = phat;
    report.half_width = wald_half_width(report.successes, report.trials, report.z);
    return;
  }
  const double z2 = report.z * report.z;
  const double denom = 1.0 + z2 / total;
  report.estimate = (phat + z2 / (2.0 * total)) / denom;
  report.half_width =
      (report.z / denom) * std::sqrt(phat * (1.0 - phat) / total + z2 / (4.0 * total * total));
}

SamplingReport simulate(double p, std::int64_t trials, std::uint64_t seed, double z, IntervalKind kind) {
  check_probability(p);
  if (trials < 1) throw ValidationError("trial count must be positive");
  if (!(z > 0.0)) throw ValidationError("z must be positive");
  SamplingReport report;
  report.trials = trials;
  report.successes = draw_successes(p, trials, seed);
  report.z = z;
  report.seed = seed;
  report.interval = kind;
  apply_interval(report);
  return report;
}

std::int64_t required_trials(double p_guess, double epsilon, double z) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw ValidationError("epsilon must lie in (0, 1)");
  if (!(z > 0.0)) throw ValidationError("z must be positive");
  check_probability(p_guess);
  if (p_guess == 0.0 || p_guess == 1.0) {
    warn("required_trials: degenerate p_guess, using worst case p = 1/2");
    p_guess = 0.5;
  }
  const double exact = z * z * p_guess * (1.0 - p_guess) / (epsilon * epsilon);
  // Values a few ulps above an integer are that integer.
  const double trials = std::ceil(exact * (1.0 - 1e-12));
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(trials));
}

SamplingReport estimate_rate(const ComplexMatrix& u, const Partition& lambda, double tau,
                             const SpectralProfile& s, std::int64_t trials, std::uint64_t seed, double z,
                             IntervalKind kind) {
  double p = normalized_rate(u, lambda, tau, s);
  if (p > 1.0 && p <= 1.0 + kProbabilitySlack) p = 1.0;
  if (p > 1.0) {
    std::ostringstream os;
    os << "normalized rate " << p << " exceeds 1; the matrix is not a submatrix of a unitary";
    throw ValidationError(os.str());
  }
  SamplingReport report = simulate(p, trials, seed, z, kind);
  report.exact_probability = p;
  return report;
}

std::uint64_t replication_seed(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

std::vector<SamplingReport> replicate(double p, std::int64_t trials, std::int64_t replications,
                                      std::uint64_t seed, double z, IntervalKind kind) {
  if (replications < 1) throw ValidationError("replication count must be positive");
  std::vector<SamplingReport> out;
  out.reserve(static_cast<std::size_t>(replications));
  for (std::int64_t r = 0; r < replications; ++r) {
    out.push_back(simulate(p, trials, replication_seed(seed, static_cast<std::uint64_t>(r)), z, kind));
  }
  return out;
}

double coverage(double p, std::int64_t trials, std::int64_t replications, std::uint64_t seed, double z,
                IntervalKind kind) {
  const auto reports = replicate(p, trials, replications, seed, z, kind);
  std::int64_t covered = 0;
  for (const auto& r : reports) {
    if (r.covers(p)) ++covered;
  }
  return static_cast<double>(covered) / static_cast<double>(replications);
}

}  // namespace immanant
