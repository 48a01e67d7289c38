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

#include <string>

namespace immanant::cli {

inline constexpr int kSignificantDigits = 15;

// Locale-independent shortest form with at most 15 significant digits;
// "nan", "inf" and "-inf" for non-finite values.
std::string format_number(double value);

// `value` rounded to 15 significant digits, for JSON emission.
double round_significant(double value);

}  // namespace immanant::cli
