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

#include "immanant/optics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "immanant/characters.hpp"
#include "immanant/diagnostics.hpp"
#include "immanant/errors.hpp"

namespace immanant {
namespace {

constexpr double kExponentTolerance = 1e-9;
constexpr double kSilentClampTolerance = 1e-14;

void require_rate_args(const ComplexMatrix& u, const Partition& lambda, const DelayScheme& d,
                       const char* what) {
  if (u.rows() != u.cols() || u.rows() < 1) {
    throw DimensionError(std::string(what) + ": matrix must be square and non-empty");
  }
  const int n = static_cast<int>(u.rows());
  if (lambda.size() != n) {
    throw DimensionError(std::string(what) + ": partition " + lambda.to_string() + " does not match n = " +
                         std::to_string(n));
  }
  if (d.size() != n) {
    throw DimensionError(std::string(what) + ": delay scheme has " + std::to_string(d.size()) +
                         " entries, expected " + std::to_string(n));
  }
  if (n > kMaxRateOrder) {
    throw SizeLimitError(std::string(what) + ": n = " + std::to_string(n) + " exceeds " +
                         std::to_string(kMaxRateOrder));
  }
}

// sum_j Delta_j^2 in offset units.
double squared_offset_distance(const Permutation& first, const Permutation& second,
                               std::span<const double> offsets) {
  const Permutation inv_first = inverse(first);
  const Permutation inv_second = inverse(second);
  double total = 0.0;
  for (int j = 0; j < first.size(); ++j) {
    const double delta = offsets[static_cast<std::size_t>(inv_first(j))] -
                         offsets[static_cast<std::size_t>(inv_second(j))];
    total += delta * delta;
  }
  return total;
}

std::optional<int> integer_exponent(double squared_distance) {
  const double k = squared_distance / 2.0;
  const double rounded = std::round(k);
  if (std::abs(k - rounded) > kExponentTolerance) return std::nullopt;
  return static_cast<int>(rounded);
}

// B(p) for every p in lexicographic order.
std::vector<Complex> pair_amplitudes(const ComplexMatrix& u, const Partition& lambda,
                                     std::span<const Permutation> perms) {
  const auto chi = character_values(lambda, perms);
  const int n = static_cast<int>(u.rows());
  std::vector<Complex> out;
  out.reserve(perms.size());
  for (const auto& p : perms) {
    Complex b{0.0, 0.0};
    for (std::size_t k = 0; k < perms.size(); ++k) {
      if (chi[k] == 0) continue;
      const Permutation& sigma = perms[k];
      Complex term = u(0, p(sigma(0)));
      for (int i = 1; i < n; ++i) term *= u(i, p(sigma(i)));
      b += static_cast<double>(chi[k]) * term;
    }
    out.push_back(b);
  }
  return out;
}

double settle_rate(Complex total, double scale, const char* what) {
  const double floor = std::max(1.0, scale);
  if (std::abs(total.imag()) > 1e-10 * floor) {
    std::ostringstream os;
    os << what << ": rate has imaginary part " << total.imag() << " (scale " << scale << ")";
    throw ConsistencyError(os.str());
  }
  const double re = total.real();
  if (re >= 0.0) return re;
  if (re >= -kNegativeRateTolerance * floor) {
    // Cancellation noise of a few ulps is expected for vanishing rates; only
    // larger clamps are worth reporting.
    if (re < -kSilentClampTolerance * floor) {
      std::ostringstream os;
      os << what << ": clamped negative rate " << re << " to 0";
      warn(os.str());
    }
    return 0.0;
  }
  std::ostringstream os;
  os << what << ": negative rate " << re << " beyond tolerance (scale " << scale << ")";
  throw ConsistencyError(os.str());
}

}  // namespace

void SpectralProfile::validate() const {
  if (!std::isfinite(omega0)) throw ValidationError("omega0 must be finite");
  if (!(sigma0 > 0.0) || !std::isfinite(sigma0)) {
    throw ValidationError("sigma0 must be positive and finite");
  }
}

DelayScheme DelayScheme::equally_spaced(int n, double tau) {
  if (n < 1) throw ValidationError("delay scheme needs n >= 1");
  if (!(tau >= 0.0) || !std::isfinite(tau)) throw ValidationError("tau must be finite and >= 0");
  std::vector<double> offsets(static_cast<std::size_t>(n));
  const double step = (n % 2 == 0) ? 1.0 : 0.5;
  for (int i = 1; i <= n; ++i) offsets[static_cast<std::size_t>(i - 1)] = step * (n + 1 - 2 * i);
  return DelayScheme(std::move(offsets), tau);
}

DelayScheme DelayScheme::custom(std::vector<double> delays) {
  if (delays.empty()) throw ValidationError("delay scheme needs n >= 1");
  for (double t : delays) {
    if (!std::isfinite(t)) throw ValidationError("delays must be finite");
  }
  return DelayScheme(std::move(delays), 1.0);
}

std::vector<double> DelayScheme::delays() const {
  std::vector<double> out(offsets_.size());
  for (std::size_t i = 0; i < offsets_.size(); ++i) out[i] = offsets_[i] * unit_;
  return out;
}

DelayScheme delay_vector(int n, double tau) { return DelayScheme::equally_spaced(n, tau); }

double gtilde(double tau, const SpectralProfile& s) {
  return std::exp(-s.sigma0 * s.sigma0 * tau * tau);
}

int max_degree(int n) {
  if (n < 1) throw ValidationError("max_degree needs n >= 1");
  const int cubic = n * (n * n - 1);
  return (n % 2 == 0) ? 2 * cubic / 3 : cubic / 6;
}

OverlapCoefficient overlap_coefficient(const Permutation& first, const Permutation& second,
                                       const DelayScheme& d, const SpectralProfile& s) {
  s.validate();
  if (first.size() != second.size() || first.size() != d.size()) {
    throw DimensionError("overlap_coefficient: permutations and delay scheme differ in size");
  }
  const double offset_sq = squared_offset_distance(first, second, d.offsets());
  const double unit_sq = d.unit() * d.unit();
  const double value = std::exp(-0.5 * s.sigma0 * s.sigma0 * unit_sq * offset_sq) /
                       static_cast<double>(factorial(d.size()));
  return {first, second, value, integer_exponent(offset_sq)};
}

CoefficientMap overlap_coefficient_map(const DelayScheme& d, const SpectralProfile& s) {
  s.validate();
  const auto perms = enumerate(d.size());
  std::vector<Permutation> inverses;
  inverses.reserve(perms.size());
  for (const auto& p : perms) inverses.push_back(inverse(p));
  CoefficientMap map;
  for (std::size_t a = 0; a < perms.size(); ++a) {
    for (std::size_t b = 0; b < perms.size(); ++b) {
      const auto c = overlap_coefficient(perms[a], perms[b], d, s);
      map.set(inverses[a], inverses[b], c.value);
    }
  }
  return map;
}

double rate_direct(const ComplexMatrix& u, const Partition& lambda, const DelayScheme& d,
                   const SpectralProfile& s) {
  require_rate_args(u, lambda, d, "rate_direct");
  s.validate();
  const auto perms = enumerate(static_cast<int>(u.rows()));
  const auto amplitudes = pair_amplitudes(u, lambda, perms);
  Complex total{0.0, 0.0};
  double scale = 0.0;
  for (std::size_t a = 0; a < perms.size(); ++a) {
    for (std::size_t b = 0; b < perms.size(); ++b) {
      const double w = overlap_coefficient(perms[a], perms[b], d, s).value;
      const Complex term = w * amplitudes[a] * std::conj(amplitudes[b]);
      total += term;
      scale += std::abs(term);
    }
  }
  return settle_rate(total, scale, "rate_direct");
}

double rate_direct(const ComplexMatrix& u, const Partition& lambda, double tau, const SpectralProfile& s) {
  return rate_direct(u, lambda, DelayScheme::equally_spaced(static_cast<int>(u.rows()), tau), s);
}

double rate_via_immanants(const ComplexMatrix& u, const Partition& lambda, const DelayScheme& d,
                          const SpectralProfile& s) {
  require_rate_args(u, lambda, d, "rate_via_immanants");
  const CoefficientMap coeffs = overlap_coefficient_map(d, s);
  const Complex total = quadratic_form(u, lambda, coeffs);

  const auto perms = enumerate(static_cast<int>(u.rows()));
  const auto imms = row_permuted_immanants(u, lambda);
  double scale = 0.0;
  for (const auto& [key, a] : coeffs) {
    scale += std::abs(a) * std::abs(imms[lexicographic_rank(key.first)]) *
             std::abs(imms[lexicographic_rank(key.second)]);
  }
  return settle_rate(total, scale, "rate_via_immanants");
}

double rate_via_immanants(const ComplexMatrix& u, const Partition& lambda, double tau,
                          const SpectralProfile& s) {
  return rate_via_immanants(u, lambda, DelayScheme::equally_spaced(static_cast<int>(u.rows()), tau), s);
}

double RatePolynomial::evaluate(double g) const {
  // Horner over the dense coefficient range.
  const int top = degree();
  double acc = 0.0;
  for (int k = top; k >= 0; --k) {
    const auto it = coefficients.find(k);
    acc = acc * g + (it == coefficients.end() ? 0.0 : it->second);
  }
  return acc;
}

int RatePolynomial::degree() const {
  return coefficients.empty() ? -1 : coefficients.rbegin()->first;
}

double RatePolynomial::coefficient_sum() const {
  double total = 0.0;
  for (const auto& [k, c] : coefficients) total += c;
  return total;
}

RatePolynomial rate_polynomial(const ComplexMatrix& u, const Partition& lambda, const DelayScheme& d) {
  require_rate_args(u, lambda, d, "rate_polynomial");
  const auto perms = enumerate(static_cast<int>(u.rows()));
  const auto amplitudes = pair_amplitudes(u, lambda, perms);
  const double inv_fact = 1.0 / static_cast<double>(factorial(static_cast<int>(u.rows())));
  RatePolynomial poly{lambda, {}};
  for (std::size_t a = 0; a < perms.size(); ++a) {
    for (std::size_t b = 0; b < perms.size(); ++b) {
      const double sq = squared_offset_distance(perms[a], perms[b], d.offsets());
      const auto k = integer_exponent(sq);
      if (!k) {
        std::ostringstream os;
        os << "rate_polynomial: pair " << perms[a] << ", " << perms[b]
           << " has non-integer exponent " << sq / 2.0 << "; delays are not equally spaced";
        throw UnsupportedSchemeError(os.str());
      }
      poly.coefficients[*k] += inv_fact * (amplitudes[a] * std::conj(amplitudes[b])).real();
    }
  }
  return poly;
}

double state_norm(const Partition& lambda, const DelayScheme& d, const SpectralProfile& s) {
  const int n = lambda.size();
  return rate_direct(ComplexMatrix::Identity(n, n), lambda, d, s);
}

double state_norm(const Partition& lambda, double tau, const SpectralProfile& s) {
  return state_norm(lambda, DelayScheme::equally_spaced(lambda.size(), tau), s);
}

double normalized_rate(const ComplexMatrix& u, const Partition& lambda, const DelayScheme& d,
                       const SpectralProfile& s) {
  const double raw = rate_direct(u, lambda, d, s);
  const double norm = state_norm(lambda, d, s);
  if (norm <= kDegenerateNormThreshold) {
    std::ostringstream os;
    os << "input state for " << lambda << " has vanishing norm " << norm
       << " at this delay; the normalized rate is undefined";
    throw DegenerateStateError(os.str());
  }
  return raw / norm;
}

double normalized_rate(const ComplexMatrix& u, const Partition& lambda, double tau,
                       const SpectralProfile& s) {
  return normalized_rate(u, lambda, DelayScheme::equally_spaced(static_cast<int>(u.rows()), tau), s);
}

}  // namespace immanant
