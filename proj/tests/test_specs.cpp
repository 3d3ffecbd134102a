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

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "doctest.h"
#include "lglab/error.hpp"
#include "lglab/specs.hpp"
#include "support.hpp"

using namespace lglab;
using lglab::testing::mat_dist;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("real lists") {
  CHECK(parse_real_list("1,2.5,-3e2", 3) == std::vector<double>{1.0, 2.5, -300.0});
  CHECK(parse_real_list(" 0.5 , +1", 2) == std::vector<double>{0.5, 1.0});
  CHECK(code_of([] { parse_real_list("1,2", 3); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_real_list("1,x", 2); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_real_list("1,,2", 3); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_real_list("inf", 1); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_real_list("nan", 1); }) == ErrorCode::Parse);
}

TEST_CASE("group specs") {
  CHECK(mat_dist(parse_group_spec("r3"), r3_matrix()) == 0.0);
  CHECK(mat_dist(parse_group_spec("nil3"), nil3_matrix()) == 0.0);
  CHECK(mat_dist(parse_group_spec("h3"), h3_matrix()) == 0.0);
  CHECK(mat_dist(parse_group_spec("sol3:2"), sol3_matrix(2.0)) == 0.0);
  CHECK(mat_dist(parse_group_spec("e2tilde:2.5"), e2tilde_matrix(2.5)) == 0.0);
  CHECK(mat_dist(parse_group_spec("nonuni:0.5,1"), nonunimodular_matrix(0.5, 1.0)) == 0.0);
  for (const char* bad : {"", "r4", "r3:1", "sol3", "sol3:", "sol3:1,2", "nonuni:1", "nonuni:a,b", "SOL3:1", "e2tilde:0.5", "sol3:0.5"})
    CHECK_MESSAGE(code_of([&] { parse_group_spec(bad); }) == ErrorCode::Parse, bad);
}

TEST_CASE("surface specs") {
  const SphereMesh r = parse_surface_spec("round:0.2:2");
  CHECK(r.vertex_count() == 162);
  CHECK(r.face_count() == 320);
  for (const GroupPoint& p : r.vertices()) CHECK(norm(p) == doctest::Approx(0.2));
  const SphereMesh c = parse_surface_spec("control:2");
  CHECK(c.euler_characteristic() == 2);
  CHECK(c.vertex_count() == make_self_intersecting_sphere(2).vertex_count());
  for (const char* bad : {"round", "round:0.2", "round:x:2", "round:0.2:2.5", "control", "control:x", "cube:1", "obj:"})
    CHECK_MESSAGE(code_of([&] { parse_surface_spec(bad); }) == ErrorCode::Parse, bad);
  CHECK(code_of([] { parse_surface_spec("round:-1:2"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_surface_spec("obj:/nonexistent/x.obj"); }) == ErrorCode::Io);
}

TEST_CASE("moduli grid") {
  const auto rows = moduli_grid(0.0, 4.0, 3.0, 5);
  REQUIRE(rows.size() == 25);
  CHECK(rows.front().D == 0.0);
  CHECK(rows.front().b == 0.0);
  CHECK(rows.back().D == 4.0);
  CHECK(rows.back().b == 3.0);
  CHECK(rows[1].D == 0.0);
  CHECK(rows[1].b == 0.75);
  for (const ModuliRow& r : rows) {
    bool ok = true;
    double a = 0.0;
    try {
      a = solve_a_from_Db(r.D, r.b);
    } catch (const Error&) {
      ok = false;
    }
    CHECK(r.valid == ok);
    if (ok) CHECK(r.a == a);
  }
  CHECK_THROWS_AS(moduli_grid(0.0, 4.0, 3.0, 1), Error);
  CHECK_THROWS_AS(moduli_grid(4.0, 0.0, 3.0, 5), Error);
  CHECK_THROWS_AS(moduli_grid(0.0, 4.0, -1.0, 5), Error);
}

TEST_CASE("moduli csv") {
  std::vector<ModuliRow> rows(2);
  rows[0] = {2.0, 1.0, 0.0, true};
  rows[1] = {2.0, 0.5, 0.0, false};
  CHECK(moduli_csv(rows) == "D,b,a,valid\n2,1,0,1\n2,0.5,,0\n");
  const std::string csv = moduli_csv(moduli_grid(0.0, 4.0, 3.0, 50));
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "D,b,a,valid");
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    CHECK(std::count(line.begin(), line.end(), ',') == 3);
  }
  CHECK(n == 2500);
}
