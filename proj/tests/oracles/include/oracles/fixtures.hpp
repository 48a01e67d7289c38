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

// Published values transcribed by hand for fixture tests.

#include <array>
#include <cmath>
#include <string>
#include <vector>

namespace fixtures {

// S_4 characters. Rows: irreps [4], [3,1], [2,2], [2,1,1], [1,1,1,1].
// Columns: cycle types [4], [3,1], [2,2], [2,1,1], [1,1,1,1].
inline const std::array<std::vector<int>, 5> kS4Irreps = {{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}}};
inline const std::array<std::vector<int>, 5> kS4Classes = {{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}}};
inline const std::array<std::array<int, 5>, 5> kS4Table = {{
    {1, 1, 1, 1, 1},
    {-1, 0, -1, 1, 3},
    {0, -1, 2, 0, 2},
    {1, 0, -1, -1, 3},
    {-1, 1, 1, -1, 1},
}};

// chi^[2,1] on the identity, transpositions and 3-cycles.
inline constexpr std::array<int, 3> kS3Mixed = {2, 0, -1};

// imm^[3,1] of a 4x4 matrix written out monomial by monomial. `columns`
// holds the 1-based column of U_{1,.}, U_{2,.}, U_{3,.}, U_{4,.}.
struct Monomial {
  std::array<int, 4> columns;
  int coefficient;
};
inline const std::vector<Monomial> kImm31Expansion = {
    {{4, 3, 2, 1}, -1}, {{3, 4, 2, 1}, -1}, {{4, 2, 3, 1}, 1},  {{2, 3, 4, 1}, -1},
    {{4, 3, 1, 2}, -1}, {{3, 4, 1, 2}, -1}, {{1, 4, 3, 2}, 1},  {{3, 1, 4, 2}, -1},
    {{2, 4, 1, 3}, -1}, {{4, 1, 2, 3}, -1}, {{2, 1, 4, 3}, -1}, {{1, 2, 4, 3}, 1},
    {{3, 2, 1, 4}, 1},  {{1, 3, 2, 4}, 1},  {{2, 1, 3, 4}, 1},  {{1, 2, 3, 4}, 3},
};

// Closed forms printed for lambda = [2,1] with the basis e, (23), (12), (123),
// transcribed literally (including the unsquared sigma0 in two exponents).
struct PairedForm {
  std::string first;
  std::string second;
  double (*value)(double sigma0, double tau);
};
inline const std::vector<PairedForm> kMixedThreeForms = {
    {"e", "e", [](double s, double t) { return 2.0 / 3.0 * (1.0 - std::exp(s * s * t * t)); }},
    {"(23)", "(23)", [](double s, double t) { return 2.0 / 3.0 * (1.0 - std::exp(s * s * t * t)); }},
    {"(12)", "(12)", [](double s, double t) { return 2.0 / 3.0 * (1.0 - std::exp(s * s * t * t)); }},
    {"(123)", "(123)", [](double s, double t) { return 2.0 / 3.0 * (1.0 - std::exp(s * s * t * t)); }},
    {"e", "(12)", [](double s, double t) { return -1.0 / 3.0 * (std::exp(-4 * s * t * t) + std::exp(-s * s * t * t)); }},
    {"(23)", "(123)", [](double s, double t) { return -1.0 / 3.0 * (std::exp(-4 * s * t * t) + std::exp(-s * s * t * t)); }},
    {"(12)", "(123)", [](double s, double t) { return -1.0 / 3.0 * (std::exp(-4 * s * t * t) + std::exp(-s * s * t * t)); }},
    {"e", "(23)", [](double s, double t) { return 2.0 / 3.0 * (std::exp(-4 * s * t * t) + std::exp(-s * s * t * t)); }},
    {"e", "(123)", [](double s, double t) { return 1.0 / 3.0 * (1.0 - std::exp(-3 * s * s * t * t)); }},
    {"(23)", "(12)", [](double s, double t) { return 1.0 / 3.0 * (1.0 - std::exp(-3 * s * s * t * t)); }},
};

// lambda = [1,1], basis {e}.
inline double antisymmetric_two_form(double s, double t) { return 0.5 * (1.0 - 4.0 * std::exp(-4 * s * s * t * t)); }

}  // namespace fixtures
