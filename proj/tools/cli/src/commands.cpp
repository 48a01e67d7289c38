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

#include "immanant_cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "immanant/immanant.hpp"
#include "immanant_cli/format.hpp"
#include "immanant_cli/matrix_io.hpp"

namespace immanant::cli {
namespace {

using nlohmann::json;

// Re-raises validation failures with the flag that caused them.
template <class F>
auto for_field(const std::string& field, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw ParseError(field + ": " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(field + ": " + e.what());
  }
}

json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return round_significant(v);
}

json complex_pair(Complex c) { return json::array({number(c.real()), number(c.imag())}); }

json partition_json(const Partition& p) { return json(std::vector<int>(p.parts().begin(), p.parts().end())); }

std::string csv_label(const Partition& p) { return "\"" + p.to_string() + "\""; }

OutputFormat resolve_format(const RunConfig& c, std::initializer_list<OutputFormat> allowed) {
  const OutputFormat f = c.format.value_or(default_format(c.command));
  for (OutputFormat a : allowed) {
    if (a == f) return f;
  }
  throw ValidationError("--format: '" + to_string(f) + "' is not supported by '" + to_string(c.command) + "'");
}

std::vector<int> zero_based(const std::vector<int>& labels) {
  std::vector<int> out;
  out.reserve(labels.size());
  for (int v : labels) out.push_back(v - 1);
  return out;
}

struct Problem {
  ComplexMatrix matrix;
  Partition lambda;
};

// Loads --matrix, applies --rows/--cols, and checks --lambda against the size.
Problem load_problem(const RunConfig& c) {
  if (c.matrix_path.empty()) throw ValidationError("--matrix: a matrix file is required");
  ComplexMatrix m = for_field("--matrix", [&] { return read_matrix(c.matrix_path); });
  if (!c.rows.empty() || !c.cols.empty()) {
    const std::vector<int> rows = c.rows.empty() ? c.cols : c.rows;
    const std::vector<int> cols = c.cols.empty() ? c.rows : c.cols;
    m = for_field("--rows/--cols", [&] { return submatrix(m, zero_based(rows), zero_based(cols)); });
  }
  if (m.rows() != m.cols()) {
    throw ValidationError("--matrix: expected a square matrix (or --rows/--cols selecting one), got " +
                          std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  if (c.lambda.empty()) throw ValidationError("--lambda: a partition such as \"2,1\" is required");
  Partition lambda = for_field("--lambda", [&] { return Partition::parse(c.lambda); });
  if (lambda.size() != m.rows()) {
    throw ValidationError("--lambda: partition " + lambda.to_string() + " has size " +
                          std::to_string(lambda.size()) + " but the matrix is " + std::to_string(m.rows()) +
                          "x" + std::to_string(m.rows()));
  }
  return {std::move(m), std::move(lambda)};
}

SpectralProfile load_profile(const RunConfig& c) {
  SpectralProfile s{c.omega0, c.sigma0};
  for_field("--sigma0/--omega0", [&] { s.validate(); });
  return s;
}

void check_tau(double tau, const char* field) {
  if (!(tau >= 0.0) || !std::isfinite(tau)) {
    throw ValidationError(std::string(field) + ": delay must be finite and >= 0");
  }
}

std::optional<double> try_normalized(const ComplexMatrix& u, const Partition& lambda, double tau,
                                     const SpectralProfile& s) {
  try {
    return normalized_rate(u, lambda, tau, s);
  } catch (const DegenerateStateError&) {
    return std::nullopt;
  }
}

void run_characters(const RunConfig& c, std::ostream& out) {
  const OutputFormat f = resolve_format(c, {OutputFormat::kText, OutputFormat::kJson, OutputFormat::kCsv});
  if (c.n < 1 || c.n > kMaxSymmetricOrder) {
    throw SizeLimitError("--n: expected 1.." + std::to_string(kMaxSymmetricOrder) + ", got " + std::to_string(c.n));
  }
  const CharacterTable table(c.n);
  if (f == OutputFormat::kJson) {
    json irreps = json::array();
    json classes = json::array();
    json values = json::array();
    for (const auto& p : table.irreps()) irreps.push_back(partition_json(p));
    for (const auto& p : table.classes()) classes.push_back(partition_json(p));
    for (std::size_t r = 0; r < table.irreps().size(); ++r) {
      json row = json::array();
      for (std::size_t k = 0; k < table.classes().size(); ++k) row.push_back(table(r, k));
      values.push_back(std::move(row));
    }
    out << json{{"n", c.n}, {"irreps", irreps}, {"classes", classes}, {"table", values}}.dump(2) << '\n';
    return;
  }
  if (f == OutputFormat::kCsv) {
    out << "irrep";
    for (const auto& mu : table.classes()) out << ',' << csv_label(mu);
    out << '\n';
    for (std::size_t r = 0; r < table.irreps().size(); ++r) {
      out << csv_label(table.irreps()[r]);
      for (std::size_t k = 0; k < table.classes().size(); ++k) out << ',' << table(r, k);
      out << '\n';
    }
    return;
  }
  std::size_t width = 6;
  for (const auto& p : table.irreps()) width = std::max(width, p.to_string().size() + 2);
  out << "Characters of S_" << c.n << " (rows: irrep, columns: cycle type)\n";
  out << std::left << std::setw(static_cast<int>(width)) << "irrep";
  for (const auto& mu : table.classes()) out << std::right << std::setw(static_cast<int>(width)) << mu.to_string();
  out << '\n';
  for (std::size_t r = 0; r < table.irreps().size(); ++r) {
    out << std::left << std::setw(static_cast<int>(width)) << table.irreps()[r].to_string();
    for (std::size_t k = 0; k < table.classes().size(); ++k) {
      out << std::right << std::setw(static_cast<int>(width)) << table(r, k);
    }
    out << '\n';
  }
}

void run_imm(const RunConfig& c, std::ostream& out) {
  const OutputFormat f = resolve_format(c, {OutputFormat::kJson, OutputFormat::kCsv, OutputFormat::kText});
  const Problem p = load_problem(c);
  Complex value;
  const int n = static_cast<int>(p.matrix.rows());
  if (n > kMaxImmanantOrder && p.lambda.is_single_row()) {
    value = permanent(p.matrix);
  } else if (n > kMaxImmanantOrder && p.lambda.is_single_column()) {
    value = determinant(p.matrix);
  } else {
    value = immanant(p.matrix, p.lambda);
  }
  switch (f) {
    case OutputFormat::kJson:
      out << json{{"lambda", partition_json(p.lambda)}, {"n", n}, {"immanant", complex_pair(value)}}.dump(2)
          << '\n';
      break;
    case OutputFormat::kCsv:
      out << "re,im\n" << format_number(value.real()) << ',' << format_number(value.imag()) << '\n';
      break;
    case OutputFormat::kText:
      out << format_number(value.real()) << ' ' << format_number(value.imag()) << '\n';
      break;
  }
}

void run_rate(const RunConfig& c, std::ostream& out) {
  const OutputFormat f = resolve_format(c, {OutputFormat::kJson, OutputFormat::kCsv});
  const Problem p = load_problem(c);
  const SpectralProfile s = load_profile(c);
  check_tau(c.tau, "--tau");
  const bool want_raw = c.rate_view != RateView::kNormalized;
  const bool want_norm = c.rate_view != RateView::kRaw;

  const double raw = rate_direct(p.matrix, p.lambda, c.tau, s);
  std::optional<double> normalized;
  if (c.rate_view == RateView::kNormalized) {
    normalized = normalized_rate(p.matrix, p.lambda, c.tau, s);
  } else if (want_norm) {
    normalized = try_normalized(p.matrix, p.lambda, c.tau, s);
  }
  const double g = gtilde(c.tau, s);

  if (f == OutputFormat::kJson) {
    json j{{"lambda", partition_json(p.lambda)},
           {"n", p.matrix.rows()},
           {"tau", number(c.tau)},
           {"sigma0", number(s.sigma0)},
           {"omega0", number(s.omega0)},
           {"gtilde", number(g)}};
    if (want_raw) j["rate_raw"] = number(raw);
    if (want_norm) j["rate_normalized"] = normalized ? number(*normalized) : json(nullptr);
    out << j.dump(2) << '\n';
    return;
  }
  out << "tau";
  if (want_raw) out << ",rate_raw";
  if (want_norm) out << ",rate_normalized";
  out << ",gtilde\n" << format_number(c.tau);
  if (want_raw) out << ',' << format_number(raw);
  if (want_norm) out << ',' << format_number(normalized ? *normalized : std::nan(""));
  out << ',' << format_number(g) << '\n';
}

void run_scan(const RunConfig& c, std::ostream& out) {
  const OutputFormat f = resolve_format(c, {OutputFormat::kCsv, OutputFormat::kJson});
  const Problem p = load_problem(c);
  const SpectralProfile s = load_profile(c);
  check_tau(c.tau_start, "--tau-start");
  check_tau(c.tau_stop, "--tau-stop");
  if (c.steps < 1) throw ValidationError("--steps: must be at least 1");

  json rows = json::array();
  if (f == OutputFormat::kCsv) out << "tau,rate_raw,rate_normalized,gtilde\n";
  for (int k = 0; k < c.steps; ++k) {
    const double tau =
        c.steps == 1 ? c.tau_start : c.tau_start + (c.tau_stop - c.tau_start) * k / (c.steps - 1);
    const double raw = rate_direct(p.matrix, p.lambda, tau, s);
    const std::optional<double> norm = try_normalized(p.matrix, p.lambda, tau, s);
    const double g = gtilde(tau, s);
    if (f == OutputFormat::kCsv) {
      out << format_number(tau) << ',' << format_number(raw) << ','
          << format_number(norm ? *norm : std::nan("")) << ',' << format_number(g) << '\n';
    } else {
      rows.push_back({{"tau", number(tau)},
                      {"rate_raw", number(raw)},
                      {"rate_normalized", norm ? number(*norm) : json(nullptr)},
                      {"gtilde", number(g)}});
    }
  }
  if (f == OutputFormat::kJson) out << rows.dump(2) << '\n';
}

void run_sample(const RunConfig& c, std::ostream& out) {
  const OutputFormat f = resolve_format(c, {OutputFormat::kJson, OutputFormat::kCsv});
  const Problem p = load_problem(c);
  const SpectralProfile s = load_profile(c);
  check_tau(c.tau, "--tau");
  if (c.trials < 1) throw ValidationError("--trials: must be at least 1");
  if (!(c.z > 0.0)) throw ValidationError("--z: must be positive");
  const SamplingReport r = estimate_rate(p.matrix, p.lambda, c.tau, s, c.trials, c.seed, c.z,
                                         c.wilson ? IntervalKind::kWilson : IntervalKind::kWald);
  const std::string interval = r.interval == IntervalKind::kWald ? "wald" : "wilson";
  if (f == OutputFormat::kJson) {
    out << json{{"lambda", partition_json(p.lambda)},
                {"tau", number(c.tau)},
                {"trials", r.trials},
                {"successes", r.successes},
                {"estimate", number(r.estimate)},
                {"z", number(r.z)},
                {"half_width", number(r.half_width)},
                {"lower", number(r.lower())},
                {"upper", number(r.upper())},
                {"interval", interval},
                {"seed", r.seed},
                {"exact_probability", r.exact_probability ? number(*r.exact_probability) : json(nullptr)}}
               .dump(2)
        << '\n';
    return;
  }
  out << "trials,successes,estimate,z,half_width,lower,upper,interval,seed,exact_probability\n"
      << r.trials << ',' << r.successes << ',' << format_number(r.estimate) << ',' << format_number(r.z) << ','
      << format_number(r.half_width) << ',' << format_number(r.lower()) << ',' << format_number(r.upper())
      << ',' << interval << ',' << r.seed << ','
      << format_number(r.exact_probability.value_or(std::nan(""))) << '\n';
}

void run_decompose(const RunConfig& c, std::ostream& out) {
  resolve_format(c, {OutputFormat::kJson});
  if (c.matrix_path.empty()) throw ValidationError("--matrix: a matrix file is required");
  const ComplexMatrix u = for_field("--matrix", [&] { return read_matrix(c.matrix_path); });
  if (u.rows() != u.cols()) throw ValidationError("--matrix: decompose needs a square matrix");
  if (u.rows() > kMaxInterferometerModes) {
    throw SizeLimitError("--matrix: at most " + std::to_string(kMaxInterferometerModes) + " modes");
  }
  out << decomposition_to_json(decompose(u)).dump(2) << '\n';
}

void dispatch(const RunConfig& c, std::ostream& out) {
  switch (c.command) {
    case Command::kCharacters:
      return run_characters(c, out);
    case Command::kImm:
      return run_imm(c, out);
    case Command::kRate:
      return run_rate(c, out);
    case Command::kScan:
      return run_scan(c, out);
    case Command::kSample:
      return run_sample(c, out);
    case Command::kDecompose:
      return run_decompose(c, out);
  }
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.out_path.empty()) {
      dispatch(config, out);
    } else {
      // Render fully before touching the file so failures leave no partial output.
      std::ostringstream buffer;
      dispatch(config, buffer);
      std::ofstream file(config.out_path);
      if (!file) throw ValidationError("--out: cannot write '" + config.out_path + "'");
      file << buffer.str();
    }
    return kExitOk;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const ComputationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config.seed = default_seed();
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  CLI::App app{
      "Immanants of interferometer submatrices and the coincidence rates of "
      "character-weighted time-bin-entangled photons."};
  app.require_subcommand(1, 1);
  std::string format;

  auto add_common = [&](CLI::App* sub, bool with_lambda) {
    sub->add_option("--matrix", config.matrix_path, "Matrix JSON file: {\"rows\": [[[re, im], ...], ...]}");
    if (with_lambda) {
      sub->add_option("--lambda", config.lambda, "Partition of n, e.g. \"2,1\"");
      sub->add_option("--rows", config.rows, "Input channels kept (1-based, increasing)")->delimiter(',');
      sub->add_option("--cols", config.cols, "Detected channels kept (1-based, increasing)")->delimiter(',');
    }
    sub->add_option("--format", format, "Output format: json, csv or text");
    sub->add_option("--out", config.out_path, "Write output to this file instead of stdout");
  };
  auto add_spectrum = [&](CLI::App* sub) {
    sub->add_option("--sigma0", config.sigma0, "Source bandwidth (default 1)");
    sub->add_option("--omega0", config.omega0, "Carrier frequency (rates do not depend on it)");
  };

  CLI::App* characters = app.add_subcommand(
      "characters", "Irreducible characters chi^lambda(mu) of S_n, rows by irrep lambda, columns by cycle type mu.");
  characters->add_option("--n", config.n, "Number of symbols, 1..8")->required();
  characters->add_option("--format", format, "Output format: text, json or csv");
  characters->add_option("--out", config.out_path, "Write output to this file instead of stdout");

  CLI::App* imm = app.add_subcommand(
      "imm",
      "imm^lambda(U) = sum over sigma of chi^lambda(sigma) prod_i U(i, sigma(i)). lambda = [n] is the "
      "permanent and [1^n] the determinant.");
  add_common(imm, true);

  CLI::App* rate = app.add_subcommand(
      "rate",
      "Coincidence rate for one photon per detector when the input is the lambda character-weighted "
      "superposition of time-bin orderings. Equals a quadratic form in the lambda-immanants of the "
      "row-permuted matrix with Gaussian overlap coefficients, a polynomial in exp(-sigma0^2 tau^2).");
  add_common(rate, true);
  add_spectrum(rate);
  rate->add_option("--tau", config.tau, "Delay unit tau (>= 0)")->required();
  auto* raw_flag = rate->add_flag_callback("--raw", [&] { config.rate_view = RateView::kRaw; },
                                           "Report only the raw rate");
  auto* norm_flag = rate->add_flag_callback("--normalized", [&] { config.rate_view = RateView::kNormalized; },
                                            "Report only the rate divided by the input-state norm");
  raw_flag->excludes(norm_flag);

  CLI::App* scan = app.add_subcommand(
      "scan", "Sweep tau over [tau-start, tau-stop]; CSV columns tau,rate_raw,rate_normalized,gtilde.");
  add_common(scan, true);
  add_spectrum(scan);
  scan->add_option("--tau-start", config.tau_start, "First delay");
  scan->add_option("--tau-stop", config.tau_stop, "Last delay");
  scan->add_option("--steps", config.steps, "Number of delays, endpoints included");

  CLI::App* sample = app.add_subcommand(
      "sample",
      "Simulate L trials at the normalized rate and report l/L +- (z/L) sqrt(l(L-l)/L). The default "
      "seed comes from $IMMANANT_SEED.");
  add_common(sample, true);
  add_spectrum(sample);
  sample->add_option("--tau", config.tau, "Delay unit tau (>= 0)")->required();
  sample->add_option("--trials", config.trials, "Number of trials L");
  sample->add_option("--seed", config.seed, "Random seed");
  sample->add_option("--z", config.z, "Confidence factor (1.96 for 95%)");
  sample->add_flag("--wilson", config.wilson, "Use the Wilson score interval instead of Wald");

  CLI::App* decompose_cmd = app.add_subcommand(
      "decompose",
      "Factor a unitary into at most m(m-1)/2 two-channel beamsplitter layers (application order) "
      "followed by output phases.");
  add_common(decompose_cmd, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitValidation;
  }

  for (const auto* sub : app.get_subcommands()) config.command = command_from_string(sub->get_name());
  if (!format.empty()) {
    try {
      config.format = format_from_string(format);
    } catch (const ValidationError& e) {
      err << "error: --format: " << e.what() << '\n';
      return kExitValidation;
    }
  }
  return run(config, out, err);
}

}  // namespace immanant::cli
