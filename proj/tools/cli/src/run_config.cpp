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

#include "immanant_cli/run_config.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

#include "immanant/errors.hpp"

namespace immanant::cli {
namespace {

struct CommandName {
  Command command;
  const char* name;
};

constexpr CommandName kCommands[] = {
    {Command::kCharacters, "characters"}, {Command::kImm, "imm"},       {Command::kRate, "rate"},
    {Command::kScan, "scan"},             {Command::kSample, "sample"}, {Command::kDecompose, "decompose"},
};

std::string view_name(RateView v) {
  switch (v) {
    case RateView::kRaw:
      return "raw";
    case RateView::kNormalized:
      return "normalized";
    case RateView::kBoth:
      break;
  }
  return "both";
}

RateView view_from_string(const std::string& s) {
  if (s == "raw") return RateView::kRaw;
  if (s == "normalized") return RateView::kNormalized;
  if (s == "both") return RateView::kBoth;
  throw ParseError("unknown rate view '" + s + "'");
}

}  // namespace

std::string to_string(Command c) {
  for (const auto& [command, name] : kCommands) {
    if (command == c) return name;
  }
  return "unknown";
}

Command command_from_string(const std::string& s) {
  for (const auto& [command, name] : kCommands) {
    if (s == name) return command;
  }
  throw ParseError("unknown subcommand '" + s + "'");
}

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::kJson:
      return "json";
    case OutputFormat::kCsv:
      return "csv";
    case OutputFormat::kText:
      break;
  }
  return "text";
}

OutputFormat format_from_string(const std::string& s) {
  if (s == "json") return OutputFormat::kJson;
  if (s == "csv") return OutputFormat::kCsv;
  if (s == "text") return OutputFormat::kText;
  throw ParseError("unknown output format '" + s + "' (expected json, csv or text)");
}

OutputFormat default_format(Command c) {
  switch (c) {
    case Command::kCharacters:
      return OutputFormat::kText;
    case Command::kScan:
      return OutputFormat::kCsv;
    default:
      return OutputFormat::kJson;
  }
}

std::uint64_t default_seed() {
  const char* env = std::getenv(kSeedEnvVar);
  if (env == nullptr || *env == '\0') return kFallbackSeed;
  std::uint64_t seed = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, seed);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(std::string(kSeedEnvVar) + " is not an unsigned integer: '" + env + "'");
  }
  return seed;
}

void to_json(nlohmann::json& j, const RunConfig& c) {
  j = nlohmann::json{
      {"command", to_string(c.command)},
      {"matrix", c.matrix_path},
      {"lambda", c.lambda},
      {"n", c.n},
      {"tau", c.tau},
      {"tau_start", c.tau_start},
      {"tau_stop", c.tau_stop},
      {"steps", c.steps},
      {"sigma0", c.sigma0},
      {"omega0", c.omega0},
      {"rows", c.rows},
      {"cols", c.cols},
      {"trials", c.trials},
      {"seed", c.seed},
      {"z", c.z},
      {"wilson", c.wilson},
      {"rate_view", view_name(c.rate_view)},
      {"format", c.format ? nlohmann::json(to_string(*c.format)) : nlohmann::json(nullptr)},
      {"out", c.out_path},
  };
}

void from_json(const nlohmann::json& j, RunConfig& c) {
  try {
    c.command = command_from_string(j.at("command").get<std::string>());
    j.at("matrix").get_to(c.matrix_path);
    j.at("lambda").get_to(c.lambda);
    j.at("n").get_to(c.n);
    j.at("tau").get_to(c.tau);
    j.at("tau_start").get_to(c.tau_start);
    j.at("tau_stop").get_to(c.tau_stop);
    j.at("steps").get_to(c.steps);
    j.at("sigma0").get_to(c.sigma0);
    j.at("omega0").get_to(c.omega0);
    j.at("rows").get_to(c.rows);
    j.at("cols").get_to(c.cols);
    j.at("trials").get_to(c.trials);
    j.at("seed").get_to(c.seed);
    j.at("z").get_to(c.z);
    j.at("wilson").get_to(c.wilson);
    c.rate_view = view_from_string(j.at("rate_view").get<std::string>());
    const auto& f = j.at("format");
    c.format = f.is_null() ? std::nullopt : std::optional(format_from_string(f.get<std::string>()));
    j.at("out").get_to(c.out_path);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("run config: ") + e.what());
  }
}

}  // namespace immanant::cli
