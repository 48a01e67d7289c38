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

#include <iosfwd>

#include "immanant_cli/run_config.hpp"

namespace immanant::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitValidation = 2;

// Executes one validated configuration. Results go to `config.out_path` when
// set, otherwise to `out`; diagnostics go to `err`. Returns 0 on success, 2
// for validation errors (the message names the offending field) and 1 for
// computation errors such as a degenerate state or a non-unitary matrix.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv and runs. --help prints usage and returns 0.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace immanant::cli
