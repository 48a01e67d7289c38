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

#include "immanant_cli/format.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

namespace immanant::cli {

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";
  char buf[64];
  // Round to 15 significant digits first, then print the shortest
  // representation of the rounded value.
  const double rounded = round_significant(value);
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, rounded);
  return std::string(buf, end);
}

double round_significant(double value) {
  if (!std::isfinite(value) || value == 0.0) return value;
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::scientific,
                                 kSignificantDigits - 1);
  double out = value;
  std::from_chars(buf, end, out);
  return out;
}

}  // namespace immanant::cli
