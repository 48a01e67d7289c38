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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when everything passes).
//
//   immanant_acceptance [--errata PATH]
//
// The errata report lists every closed-form coefficient that disagrees with
// the quadrature oracle (default path: errata.txt in the working directory).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "immanant/immanant.hpp"
#include "oracles/fixtures.hpp"
#include "oracles/oracles.hpp"

namespace {

using namespace immanant;

// Pinned tolerances.
constexpr double kKernelRelTol = 1e-10;       // criterion 1
constexpr double kKernelSeconds = 10.0;
constexpr double kIdentityRelTol = 1e-10;     // criterion 4
constexpr double kIdentityRateFloor = 1e-4;   // rates below this compare in absolute terms
constexpr double kIdentitySeconds = 60.0;
constexpr double kQuadratureAbsTol = 1e-8;    // criterion 5
constexpr double kStructureTol = 1e-10;       // criterion 6
constexpr double kColumnSumTol = 1e-10;       // criterion 7, relative to sum of |terms|
constexpr double kPhysicsTol = 1e-12;         // criterion 8
constexpr double kRoundTripTol = 1e-10;       // criterion 9
constexpr double kIntervalTol = 1e-4;         // criterion 10
constexpr double kCoverageLow = 0.93;
constexpr double kCoverageHigh = 0.97;
constexpr double kCoefficientTol = 1e-8;      // criterion 11

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string sci(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << v;
  return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }

ComplexMatrix haar_block(int n, std::uint64_t seed) { return haar_random_unitary(n + 2, seed).topLeftCorner(n, n); }

Outcome kernel_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(101);
  double worst = 0.0;
  int count = 0;
  for (int n = 2; n <= 6; ++n) {
    for (int k = 0; k < 10; ++k, ++count) {
      const ComplexMatrix m = random_gaussian_matrix(n, n, rng);
      worst = std::max(worst, rel(immanant::immanant(m, Partition::single_row(n)), permanent(m)));
      worst = std::max(worst, rel(immanant::immanant(m, Partition::single_column(n)), determinant(m)));
    }
  }
  const double t = seconds_since(start);
  return {worst < kKernelRelTol && t < kKernelSeconds,
          std::to_string(count) + " matrices n=2..6, max rel err " + sci(worst) + ", " + sci(t) + " s"};
}

Outcome expansion_fixture() {
  const Partition lambda({3, 1});
  int matched = 0;
  int zero_ok = 0;
  std::vector<bool> listed(24, false);
  for (const auto& mono : fixtures::kImm31Expansion) {
    ComplexMatrix p = ComplexMatrix::Zero(4, 4);
    std::vector<int> images;
    for (int i = 0; i < 4; ++i) {
      p(i, mono.columns[static_cast<std::size_t>(i)] - 1) = 1.0;
      images.push_back(mono.columns[static_cast<std::size_t>(i)] - 1);
    }
    listed[lexicographic_rank(Permutation::from_images(images))] = true;
    if (immanant::immanant(p, lambda) == Complex(mono.coefficient, 0.0)) ++matched;
  }
  const auto perms = enumerate(4);
  for (std::size_t k = 0; k < perms.size(); ++k) {
    if (listed[k]) continue;
    ComplexMatrix p = ComplexMatrix::Zero(4, 4);
    for (int i = 0; i < 4; ++i) p(i, perms[k](i)) = 1.0;
    if (immanant::immanant(p, lambda) == Complex(0.0, 0.0)) ++zero_ok;
  }
  const bool pass = matched == 16 && zero_ok == 8;
  return {pass, std::to_string(matched) + "/16 monomial coefficients exact, " + std::to_string(zero_ok) +
                    "/8 unlisted monomials vanish"};
}

Outcome character_fixtures() {
  int wrong = 0;
  const Partition mixed({2, 1});
  const std::vector<Partition> s3_classes{Partition({1, 1, 1}), Partition({2, 1}), Partition({3})};
  for (std::size_t k = 0; k < 3; ++k) {
    if (character(mixed, s3_classes[k]) != fixtures::kS3Mixed[k]) ++wrong;
  }
  const CharacterTable table(4);
  for (std::size_t r = 0; r < 5; ++r) {
    for (std::size_t c = 0; c < 5; ++c) {
      if (table.at(Partition(fixtures::kS4Irreps[r]), Partition(fixtures::kS4Classes[c])) != fixtures::kS4Table[r][c]) {
        ++wrong;
      }
    }
  }
  return {wrong == 0, "n=3 [2,1] row and 25 S_4 entries checked, " + std::to_string(wrong) + " mismatches"};
}

Outcome central_identity() {
  const auto start = std::chrono::steady_clock::now();
  const auto rule = oracles::gauss_hermite(64);
  double worst = 0.0;
  double worst_oracle = 0.0;
  int cases = 0;
  for (int n = 2; n <= 4; ++n) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const ComplexMatrix u = haar_block(n, 1000 * n + seed);
      for (const auto& lambda : partitions(n)) {
        const auto chi = character_values(lambda, enumerate(n));
        for (double tau : {0.0, 0.5, 1.5}) {
          const auto d = DelayScheme::equally_spaced(n, tau);
          const double a = rate_direct(u, lambda, d);
          const double b = rate_via_immanants(u, lambda, d);
          const double c = rate_polynomial(u, lambda, d).evaluate(gtilde(tau));
          const double floor = std::max(std::abs(a), kIdentityRateFloor);
          worst = std::max({worst, std::abs(a - b) / floor, std::abs(a - c) / floor, std::abs(b - c) / floor});
          if (n <= 3 && seed <= 3) {
            const double o = oracles::coincidence_rate(u, chi, oracles::equally_spaced_delays(n, tau), {}, rule);
            worst_oracle = std::max(worst_oracle, std::abs(a - o) / std::max(std::abs(o), kIdentityRateFloor));
          }
          ++cases;
        }
      }
    }
  }
  const double t = seconds_since(start);
  return {worst < kIdentityRelTol && worst_oracle < kIdentityRelTol && t < kIdentitySeconds,
          std::to_string(cases) + " cases, max pairwise rel err " + sci(worst) + ", first-principles oracle " +
              sci(worst_oracle) + ", " + sci(t) + " s"};
}

Outcome quadrature_oracle() {
  // The 64-node rule resolves exp(-i w t) for |sigma0 t| up to about 8;
  // the delays below keep every n <= 4 pair inside that range.
  const auto rule = oracles::gauss_hermite(64);
  std::mt19937_64 rng(55);
  double worst = 0.0;
  int pairs = 0;
  for (int n = 1; n <= 4; ++n) {
    const auto perms = enumerate(n);
    const auto raw = oracles::all_permutations(n);
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    std::uniform_real_distribution<double> width(0.5, 1.0);
    for (int k = 0; k < 100; ++k, ++pairs) {
      const std::size_t a = pick(rng);
      const std::size_t b = pick(rng);
      const SpectralProfile s{0.0, width(rng)};
      for (double tau : {0.3, 0.7, 1.2}) {
        const auto d = DelayScheme::equally_spaced(n, tau);
        const double closed = overlap_coefficient(perms[a], perms[b], d, s).value;
        const Complex q = oracles::overlap(raw[a], raw[b], d.delays(), {s.omega0, s.sigma0}, rule);
        worst = std::max(worst, std::abs(closed - q));
      }
    }
  }
  return {worst < kQuadratureAbsTol,
          std::to_string(pairs) + " pairs x 3 delays, max abs err " + sci(worst)};
}

Outcome structural_claims() {
  double worst_sum = 0.0;
  double worst_perm = 0.0;
  bool odd_found = false;
  std::string degrees;
  bool degree_ok = true;
  const int expected_degree[] = {0, 0, 4, 4, 40};
  for (int n = 2; n <= 4; ++n) {
    const auto d = DelayScheme::equally_spaced(n, 1.0);
    int top = 0;
    const auto perms = enumerate(n);
    for (const auto& p : perms) {
      for (const auto& q : perms) top = std::max(top, overlap_coefficient(p, q, d).exponent.value_or(-1));
    }
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const ComplexMatrix u = haar_block(n, 77 * n + seed);
      for (const auto& lambda : partitions(n)) {
        const auto poly = rate_polynomial(u, lambda, d);
        if (lambda != Partition::single_row(n)) worst_sum = std::max(worst_sum, std::abs(poly.coefficient_sum()));
        if (n == 4) {
          for (const auto& [k, c] : poly.coefficients) odd_found = odd_found || (k % 2 != 0 && c != 0.0);
        }
        if (poly.degree() > top) degree_ok = false;
      }
      const double expected = static_cast<double>(factorial(n)) * std::norm(permanent(u));
      worst_perm = std::max(worst_perm, std::abs(rate_direct(u, Partition::single_row(n), 0.0) - expected));
    }
    degree_ok = degree_ok && top == expected_degree[n] && max_degree(n) == expected_degree[n];
    degrees += (degrees.empty() ? "" : ",") + std::to_string(top);
  }
  const bool pass = worst_sum < kStructureTol && worst_perm < kStructureTol && !odd_found && degree_ok;
  return {pass, "(a) max |sum c_k| " + sci(worst_sum) + ", |rate[n](0) - n!|per|^2| " + sci(worst_perm) +
                    "; (b) odd exponents for n=4: " + (odd_found ? "yes" : "none") + "; (c) max exponents " +
                    degrees};
}

Outcome column_sum_rule() {
  std::mt19937_64 rng(7);
  const Partition lambda({2, 1});
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const ComplexMatrix m = random_gaussian_matrix(3, 3, rng);
    double scale = 0.0;
    for (const auto& p : enumerate(3)) scale += std::abs(immanant::immanant(permute_columns(m, p), lambda));
    worst = std::max(worst, std::abs(column_permuted_immanant_sum(m, lambda)) / scale);
  }
  return {worst < kColumnSumTol, "20 random 3x3, max |sum| / scale " + sci(worst)};
}

Outcome physics_sanity() {
  ComplexMatrix bs(2, 2);
  const double h = 1.0 / std::sqrt(2.0);
  bs << h, h, h, -h;
  double worst_sym = 0.0;
  for (int k = 0; k <= 50; ++k) {
    const double tau = 0.1 * k;
    worst_sym = std::max(worst_sym, std::abs(rate_direct(bs, Partition({2}), tau)));
    worst_sym = std::max(worst_sym, std::abs(rate_via_immanants(bs, Partition({2}), tau)));
  }
  const double far = normalized_rate(bs, Partition({1, 1}), 8.0);
  double worst_carrier = 0.0;
  const ComplexMatrix u = haar_block(3, 4);
  for (const ComplexMatrix* m : std::vector<const ComplexMatrix*>{&bs, &u}) {
    const int n = static_cast<int>(m->rows());
    for (const auto& lambda : partitions(n)) {
      for (double tau : {0.0, 0.4, 1.3}) {
        const double base = rate_direct(*m, lambda, tau, {0.0, 1.0});
        for (double w : {5.0, 100.0}) {
          worst_carrier = std::max(worst_carrier, std::abs(rate_direct(*m, lambda, tau, {w, 1.0}) - base));
          worst_carrier = std::max(worst_carrier, std::abs(rate_via_immanants(*m, lambda, tau, {w, 1.0}) - base));
        }
      }
    }
  }
  const bool pass = worst_sym < kPhysicsTol && std::abs(far - 1.0) < kPhysicsTol && worst_carrier < kPhysicsTol;
  return {pass, "beamsplitter max |rate[2]| " + sci(worst_sym) + ", normalized [1,1] at tau=8 is 1" +
                    (far >= 1.0 ? "+" : "-") + sci(std::abs(far - 1.0)) + ", omega0 drift " + sci(worst_carrier)};
}

Outcome decomposition_round_trip() {
  double worst = 0.0;
  double worst_rate = 0.0;
  bool layers_ok = true;
  for (int m = 1; m <= 8; ++m) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const ComplexMatrix u = haar_random_unitary(m, 500 * m + seed);
      const Decomposition d = decompose(u);
      layers_ok = layers_ok && d.layers.size() <= static_cast<std::size_t>(m * (m - 1) / 2);
      const ComplexMatrix r = reconstruct(d);
      worst = std::max(worst, (r - u).norm());
      if (m >= 3) {
        const std::vector<int> rows{0, 1, m - 1};
        const std::vector<int> cols{0, m / 2, m - 1};
        const ComplexMatrix a = submatrix(u, rows, cols);
        const ComplexMatrix b = submatrix(r, rows, cols);
        for (const auto& lambda : partitions(3)) {
          const double x = rate_direct(a, lambda, 0.7);
          worst_rate = std::max(worst_rate, std::abs(x - rate_direct(b, lambda, 0.7)) / std::max(x, 1e-6));
        }
      }
    }
  }
  return {layers_ok && worst < kRoundTripTol && worst_rate < kRoundTripTol,
          "m=1..8, layer bound " + std::string(layers_ok ? "held" : "violated") + ", max Frobenius err " +
              sci(worst) + ", max rate rel change " + sci(worst_rate)};
}

Outcome sampling_statistics() {
  SamplingReport r;
  r.trials = 1000;
  r.successes = 500;
  r.z = 1.96;
  apply_interval(r);
  const bool interval_ok = std::abs(r.estimate - 0.5) < 1e-15 && std::abs(r.half_width - 0.0310) < kIntervalTol;

  // The Wald interval is only nominal when L p (1 - p) is large, so the
  // coverage run uses the first seeded 3-photon instance with a moderate
  // probability. The Wilson figure at a small probability is reported too.
  double p = 0.0;
  for (std::uint64_t seed = 1; seed < 100; ++seed) {
    p = normalized_rate(haar_block(3, seed), Partition({2, 1}), 1.0);
    if (p > 0.2 && p < 0.8) break;
  }
  const double cov = coverage(p, 1000, 1000, 2718);
  const double small_p = normalized_rate(haar_block(3, 12), Partition({2, 1}), 1.0);
  const double wald_small = coverage(small_p, 1000, 1000, 2718);
  const double wilson_small = coverage(small_p, 1000, 1000, 2718, 1.96, IntervalKind::kWilson);
  const auto need = required_trials(0.5, 0.01, 1.96);
  const bool pass = interval_ok && cov >= kCoverageLow && cov <= kCoverageHigh && need == 9604;
  std::ostringstream os;
  os << "l=500 L=1000: " << r.estimate << " +- " << std::setprecision(6) << r.half_width << "; coverage " << cov
     << " at p=" << std::setprecision(4) << p << " (p=" << small_p << ": Wald " << wald_small << ", Wilson "
     << wilson_small << "); required_trials " << need;
  return {pass, os.str()};
}

struct ErrataLine {
  std::string pair;
  double tau;
  double printed;
  double computed;
  double oracle;
};

Outcome appendix_adjudication(const std::string& errata_path) {
  const Partition lambda({2, 1});
  const std::vector<Permutation> basis{Permutation::identity(3), Permutation::parse("(23)", 3),
                                       Permutation::parse("(12)", 3), Permutation::parse("(123)", 3)};
  std::vector<std::vector<int>> rows;
  for (const auto& b : basis) rows.emplace_back(b.images().begin(), b.images().end());
  const auto chi = character_values(lambda, enumerate(3));
  const auto rule = oracles::gauss_hermite(64);
  auto index_of = [&](const std::string& name) {
    const Permutation p = Permutation::parse(name, 3);
    return static_cast<std::size_t>(std::find(basis.begin(), basis.end(), p) - basis.begin());
  };

  bool pass = true;
  std::size_t independent = 0;
  int from_appendix = 0;
  int from_oracle = 0;
  int pair_total = 0;
  std::vector<ErrataLine> errata;
  const double sigma0 = 1.0;
  for (double tau : {0.4, 0.9, 1.6}) {
    const auto proj = project_onto_basis(overlap_coefficient_map(DelayScheme::equally_spaced(3, tau)), lambda, basis);
    const auto oracle =
        oracles::reduce_rate(chi, rows, oracles::equally_spaced_delays(3, tau), {0.0, sigma0}, rule, 4242, 48);
    pass = pass && oracle.residual < 1e-10 && proj.coefficients.is_hermitian(kCoefficientTol);

    // Distinct unordered pairs (b <= c) carry all the information of a Hermitian map.
    std::size_t count = 0;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      for (std::size_t c = b; c < basis.size(); ++c) {
        if (std::abs(proj.coefficients.get(basis[b], basis[c]).imag()) < kCoefficientTol) ++count;
      }
    }
    independent = count;

    for (const auto& form : fixtures::kMixedThreeForms) {
      const std::size_t b = index_of(form.first);
      const std::size_t c = index_of(form.second);
      const Complex computed = proj.coefficients.get(basis[b], basis[c]);
      const Complex reference = oracle.coefficients[b * basis.size() + c];
      const double printed = form.value(sigma0, tau);
      const bool appendix_match = std::abs(computed - printed) < kCoefficientTol;
      const bool oracle_match = std::abs(computed - reference) < kCoefficientTol;
      if (appendix_match) {
        ++from_appendix;
      } else if (oracle_match) {
        ++from_oracle;
      } else {
        pass = false;
      }
      if (!appendix_match && std::abs(2.0 * computed - printed) < kCoefficientTol) ++pair_total;
      if (!appendix_match) {
        errata.push_back({"a(" + form.first + "," + form.second + ")", tau, printed, computed.real(), reference.real()});
      }
    }
  }
  pass = pass && independent == 10;

  // lambda = [1,1]: the single coefficient on basis {e}.
  std::vector<ErrataLine> two;
  for (double tau : {0.4, 0.9, 1.6}) {
    const std::vector<Permutation> e{Permutation::identity(2)};
    const auto proj = project_onto_basis(overlap_coefficient_map(DelayScheme::equally_spaced(2, tau)), Partition({1, 1}), e);
    const auto chi2 = character_values(Partition({1, 1}), enumerate(2));
    const auto oracle =
        oracles::reduce_rate(chi2, {{0, 1}}, oracles::equally_spaced_delays(2, tau), {0.0, sigma0}, rule, 99, 8);
    const double printed = fixtures::antisymmetric_two_form(sigma0, tau);
    const double computed = proj.coefficients.get(e[0], e[0]).real();
    if (std::abs(computed - printed) >= kCoefficientTol) {
      two.push_back({"a(e,e)", tau, printed, computed, oracle.coefficients[0].real()});
    }
  }

  std::ofstream out(errata_path);
  out << "# Closed-form overlap coefficients that disagree with the quadrature oracle\n"
      << "# sigma0 = 1; 'computed' is the library projection, 'oracle' the least-squares\n"
      << "# reduction of the first-principles rate with Gauss-Hermite overlaps.\n"
      << "# Coefficients are per ordered pair (b, c); the map is symmetric.\n\n";
  auto dump = [&](const std::string& title, const std::vector<ErrataLine>& lines) {
    out << title << '\n';
    out << std::left << std::setw(18) << "coefficient" << std::setw(6) << "tau" << std::setw(16) << "printed"
        << std::setw(16) << "computed" << std::setw(16) << "oracle" << "printed/oracle\n";
    for (const auto& l : lines) {
      out << std::left << std::setw(18) << l.pair << std::setw(6) << l.tau << std::setw(16) << l.printed
          << std::setw(16) << l.computed << std::setw(16) << l.oracle;
      if (std::abs(l.oracle) > 1e-12) out << std::setprecision(6) << l.printed / l.oracle;
      out << '\n';
    }
    out << '\n';
  };
  dump("lambda = [2,1], basis e, (23), (12), (123)", errata);
  dump("lambda = [1,1], basis e", two);

  std::ostringstream detail;
  detail << independent << " independent symmetric coefficients; " << from_appendix << " checks match the closed form, "
         << from_oracle << " match only the oracle (" << pair_total
         << " of those agree once both orderings are summed); " << errata.size() + two.size() << " errata lines written to "
         << errata_path;
  return {pass, detail.str()};
}

}  // namespace

int main(int argc, char** argv) {
  std::string errata_path = "errata.txt";
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--errata" && i + 1 < argc) {
      errata_path = argv[++i];
    } else {
      std::cerr << "usage: " << argv[0] << " [--errata PATH]\n";
      return 2;
    }
  }
  immanant::ScopedWarningSink quiet([](std::string_view) {});

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 immanant kernel equivalence", kernel_equivalence},
      {"AC2 [3,1] expansion fixture", expansion_fixture},
      {"AC3 character fixtures", character_fixtures},
      {"AC4 rate identity (direct = immanant form = polynomial)", central_identity},
      {"AC5 overlap coefficients vs Gauss-Hermite quadrature", quadrature_oracle},
      {"AC6 structural claims", structural_claims},
      {"AC7 column-permutation sum rule", column_sum_rule},
      {"AC8 physics sanity", physics_sanity},
      {"AC9 decomposition round trip", decomposition_round_trip},
      {"AC10 sampling statistics", sampling_statistics},
      {"AC11 closed-form coefficient adjudication", [&] { return appendix_adjudication(errata_path); }},
  };

  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << ": " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed;
}
