// Copyright 2026 The lglab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Textual specifications of groups and surfaces used by the command line.
//
//   groups:   r3 | nil3 | sol3:c | e2tilde:c | h3 | nonuni:D,b
//   surfaces: round:r:level | control:level | obj:path

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lglab/group.hpp"
#include "lglab/surface.hpp"

namespace lglab {

// Comma separated reals. Throws Parse on malformed input or a count other than
// expected.
std::vector<double> parse_real_list(std::string_view text, std::size_t expected);

Mat2 parse_group_spec(std::string_view spec);
SphereMesh parse_surface_spec(std::string_view spec);

struct ModuliRow {
  double D = 0.0;
  double b = 0.0;
  double a = 0.0;  // meaningful only when valid
  bool valid = false;
};

// steps x steps grid over [Dmin, Dmax] x [0, bmax], D outer, both inclusive.
std::vector<ModuliRow> moduli_grid(double Dmin, double Dmax, double bmax, int steps);
std::string moduli_csv(const std::vector<ModuliRow>& rows);

}  // namespace lglab
