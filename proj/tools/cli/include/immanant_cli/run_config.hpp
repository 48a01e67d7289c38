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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace immanant::cli {

enum class Command { kCharacters, kImm, kRate, kScan, kSample, kDecompose };
enum class OutputFormat { kText, kJson, kCsv };
enum class RateView { kBoth, kRaw, kNormalized };

// Environment variable consulted for the default --seed.
inline constexpr const char* kSeedEnvVar = "IMMANANT_SEED";
inline constexpr std::uint64_t kFallbackSeed = 1;

// Everything a single invocation needs. Channel indices in `rows` / `cols`
// are 1-based, as on the command line.
struct RunConfig {
  Command command = Command::kCharacters;
  std::string matrix_path;
  std::string lambda;
  int n = 0;
  double tau = 0.0;
  double tau_start = 0.0;
  double tau_stop = 3.0;
  int steps = 121;
  double sigma0 = 1.0;
  double omega0 = 0.0;
  std::vector<int> rows;
  std::vector<int> cols;
  std::int64_t trials = 100000;
  std::uint64_t seed = kFallbackSeed;
  double z = 1.96;
  bool wilson = false;
  RateView rate_view = RateView::kBoth;
  std::optional<OutputFormat> format;
  std::string out_path;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

std::string to_string(Command c);
Command command_from_string(const std::string& s);
std::string to_string(OutputFormat f);
OutputFormat format_from_string(const std::string& s);

void to_json(nlohmann::json& j, const RunConfig& c);
void from_json(const nlohmann::json& j, RunConfig& c);

// The format used when --format is not given.
OutputFormat default_format(Command c);

// Default seed: $IMMANANT_SEED when set to an unsigned integer, else 1.
std::uint64_t default_seed();

}  // namespace immanant::cli
