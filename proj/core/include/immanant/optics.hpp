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

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "immanant/immanants.hpp"
#include "immanant/matrix.hpp"
#include "immanant/partition.hpp"
#include "immanant/permutation.hpp"

namespace immanant {

// The direct rate visits (n!)^2 permutation pairs.
inline constexpr int kMaxRateOrder = 5;

// Rates in [-tol * max(1, scale), 0) are treated as round-off and clamped to
// zero; `scale` is the sum of absolute pair contributions.
inline constexpr double kNegativeRateTolerance = 1e-12;

// Gaussian source spectrum with carrier omega0 and bandwidth sigma0.
struct SpectralProfile {
  double omega0 = 0.0;
  double sigma0 = 1.0;

  // Throws ValidationError unless sigma0 > 0 and both fields are finite.
  void validate() const;
};

// Arrival-time offsets of the n photons, stored as multiples of a unit delay.
class DelayScheme {
 public:
  // Equally spaced about zero: (n+1-2i) tau for even n, (n+1-2i) tau / 2 for
  // odd n, i = 1..n. Every pair overlap is then an integer power of
  // exp(-sigma0^2 tau^2).
  static DelayScheme equally_spaced(int n, double tau);

  // Arbitrary delays with unit 1.
  static DelayScheme custom(std::vector<double> delays);

  int size() const noexcept { return static_cast<int>(offsets_.size()); }
  double unit() const noexcept { return unit_; }
  std::span<const double> offsets() const noexcept { return offsets_; }
  double delay(int i) const { return offsets_[static_cast<std::size_t>(i)] * unit_; }
  std::vector<double> delays() const;

 private:
  DelayScheme(std::vector<double> offsets, double unit)
      : offsets_(std::move(offsets)), unit_(unit) {}

  std::vector<double> offsets_;
  double unit_;
};

DelayScheme delay_vector(int n, double tau);

// G~(tau) = exp(-sigma0^2 tau^2).
double gtilde(double tau, const SpectralProfile& s = {});

// Highest power of G~ reachable with equally spaced delays:
// (2/3) n (n^2-1) for even n, (1/6) n (n^2-1) for odd n.
int max_degree(int n);

// Frequency-integrated overlap of two time-bin orderings:
//   value = (1/n!) exp(-(sigma0^2/2) sum_j Delta_j^2),
//   Delta_j = tau_{first^-1(j)} - tau_{second^-1(j)}.
// The carrier phase exp(-i omega0 sum_j Delta_j) is identically one because
// both orderings visit the same multiset of delays. `exponent` is
// sum_j Delta_j^2 / (2 unit^2) when that is an integer, so that
// value = G~(unit)^exponent / n!.
struct OverlapCoefficient {
  Permutation first;
  Permutation second;
  double value;
  std::optional<int> exponent;
};

OverlapCoefficient overlap_coefficient(const Permutation& first, const Permutation& second,
                                       const DelayScheme& d, const SpectralProfile& s = {});

// All (n!)^2 overlaps as a CoefficientMap ready for quadratic_form: the
// overlap of (p1, p2) is stored under (inverse(p1), inverse(p2)), since the
// pair's amplitudes are immanants of permute_rows(U, inverse(p)).
CoefficientMap overlap_coefficient_map(const DelayScheme& d, const SpectralProfile& s = {});

// Coincidence rate summed directly over time-bin pairs:
//   rate = sum_{p1,p2} overlap(p1,p2) B(p1) conj(B(p2)),
//   B(p) = sum_sigma chi(sigma) prod_i U(i, p(sigma(i))).
// U need not be unitary. Throws SizeLimitError beyond kMaxRateOrder and
// ConsistencyError if the result is clearly negative or complex.
double rate_direct(const ComplexMatrix& u, const Partition& lambda, const DelayScheme& d,
                   const SpectralProfile& s = {});
double rate_direct(const ComplexMatrix& u, const Partition& lambda, double tau,
                   const SpectralProfile& s = {});

// The same rate assembled as quadratic_form(U, lambda, overlap_coefficient_map).
double rate_via_immanants(const ComplexMatrix& u, const Partition& lambda, const DelayScheme& d,
                          const SpectralProfile& s = {});
double rate_via_immanants(const ComplexMatrix& u, const Partition& lambda, double tau,
                          const SpectralProfile& s = {});

// Rate collected by powers of G~: rate = sum_k c_k G~^k.
struct RatePolynomial {
  Partition lambda;
  std::map<int, double> coefficients;

  double evaluate(double gtilde_value) const;
  int degree() const;  // largest populated exponent, -1 when empty
  double coefficient_sum() const;
};

// Groups pair contributions by overlap exponent. Requires every pair
// exponent to be an integer (UnsupportedSchemeError otherwise); the delay
// unit itself does not enter.
RatePolynomial rate_polynomial(const ComplexMatrix& u, const Partition& lambda, const DelayScheme& d);

// Norm of the time-bin-entangled input state: the rate through the n x n
// identity.
double state_norm(const Partition& lambda, const DelayScheme& d, const SpectralProfile& s = {});
double state_norm(const Partition& lambda, double tau, const SpectralProfile& s = {});

// Norms below this are treated as a vanishing state.
inline constexpr double kDegenerateNormThreshold = 1e-12;

// rate_direct / state_norm. Throws DegenerateStateError when the norm
// vanishes (e.g. the antisymmetric state at zero delay).
double normalized_rate(const ComplexMatrix& u, const Partition& lambda, const DelayScheme& d,
                       const SpectralProfile& s = {});
double normalized_rate(const ComplexMatrix& u, const Partition& lambda, double tau,
                       const SpectralProfile& s = {});

}  // namespace immanant
