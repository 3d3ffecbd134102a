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

// Shared helpers for the unit and acceptance tests.

#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "lglab/algebra.hpp"
#include "lglab/group.hpp"

namespace lglab::testing {

inline double mat_dist(const Mat2& p, const Mat2& q) { return (p - q).max_abs(); }
inline double vec_dist(const Vec3& p, const Vec3& q) { return max_abs(p - q); }

inline Mat2 random_matrix(std::mt19937_64& rng, double lo = -3.0, double hi = 3.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  const double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
  return {a, b, c, d};
}

inline GroupPoint random_point(std::mt19937_64& rng, double bound) {
  std::uniform_real_distribution<double> u(-bound, bound);
  const double x = u(rng), y = u(rng), z = u(rng);
  return {x, y, z};
}

struct NamedModel {
  const char* name;
  Mat2 A;
};

// The models of the group identity suite.
inline std::vector<NamedModel> identity_suite() {
  return {{"R3", r3_matrix()},
          {"Nil3", nil3_matrix()},
          {"Sol3(1)", sol3_matrix(1.0)},
          {"Sol3(2)", sol3_matrix(2.0)},
          {"E2tilde(1)", e2tilde_matrix(1.0)},
          {"H3", h3_matrix()},
          {"nonuni(0,0)", nonunimodular_matrix(0.0, 0.0)},
          {"nonuni(0.5,1)", nonunimodular_matrix(0.5, 1.0)}};
}

// Open book groups carrying the round sphere suite.
inline std::vector<NamedModel> sphere_suite() {
  return {{"R3", r3_matrix()},
          {"Nil3", nil3_matrix()},
          {"Sol3(1)", sol3_matrix(1.0)},
          {"H3", h3_matrix()},
          {"H2xR", nonunimodular_matrix(0.0, 0.0)},
          {"nonuni(0.5,1)", nonunimodular_matrix(0.5, 1.0)}};
}

}  // namespace lglab::testing
