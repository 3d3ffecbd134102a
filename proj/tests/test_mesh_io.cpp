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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "lglab/error.hpp"
#include "lglab/surface.hpp"

using namespace lglab;

namespace {

ErrorCode parse_code(const std::string& text) {
  try {
    parse_obj(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Io;  // sentinel: no error
}

// n x m quad torus, a valid closed oriented manifold with chi = 0.
std::string torus_obj(int n, int m) {
  std::string s;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      const double u = 2 * M_PI * i / n, v = 2 * M_PI * j / m;
      s += "v " + std::to_string((2 + std::cos(v)) * std::cos(u)) + " " + std::to_string((2 + std::cos(v)) * std::sin(u)) +
           " " + std::to_string(std::sin(v)) + "\n";
    }
  auto id = [&](int i, int j) { return ((i + n) % n) * m + (j + m) % m + 1; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      s += "f " + std::to_string(id(i, j)) + " " + std::to_string(id(i + 1, j)) + " " + std::to_string(id(i + 1, j + 1)) + "\n";
      s += "f " + std::to_string(id(i, j)) + " " + std::to_string(id(i + 1, j + 1)) + " " + std::to_string(id(i, j + 1)) + "\n";
    }
  return s;
}

const char* kTetra =
    "v 0 0 0\n"
    "v 1 0 0\n"
    "v 0 1 0\n"
    "v 0 0 1\n"
    "f 1 3 2\n"
    "f 1 2 4\n"
    "f 2 3 4\n"
    "f 1 4 3\n";

}  // namespace

TEST_CASE("parse a tetrahedron") {
  const SphereMesh m = parse_obj(kTetra);
  CHECK(m.vertex_count() == 4);
  CHECK(m.face_count() == 4);
  CHECK(m.euler_characteristic() == 2);
  CHECK(m.faces()[0] == Face{0, 2, 1});
  CHECK(parse_obj(std::string("# comment\n\n") + kTetra + "\n# trailing\n").face_count() == 4);
  CHECK(parse_obj("v 0 0 0\r\nv 1 0 0\r\nv 0 1 0\r\nv 0 0 1\r\nf 1 3 2\r\nf 1 2 4\r\nf 2 3 4\r\nf 1 4 3\r\n").face_count() == 4);
}

TEST_CASE("round trip preserves coordinates and connectivity exactly") {
  for (int level : {0, 3}) {
    const SphereMesh m = make_round_sphere({0.1, 0.2, -0.3}, 0.7, level);
    const SphereMesh back = parse_obj(to_obj(m));
    CHECK(back.faces() == m.faces());
    for (std::size_t v = 0; v < m.vertex_count(); ++v) {
      CHECK(back.vertices()[v].x == m.vertices()[v].x);
      CHECK(back.vertices()[v].y == m.vertices()[v].y);
      CHECK(back.vertices()[v].z == m.vertices()[v].z);
    }
    CHECK(to_obj(back) == to_obj(m));
  }
}

TEST_CASE("save and load through a file") {
  const auto path = std::filesystem::temp_directory_path() / "lglab_mesh_io_test.obj";
  const SphereMesh m = make_self_intersecting_sphere(2);
  save_mesh(m, path);
  const SphereMesh back = load_mesh(path);
  CHECK(back.faces() == m.faces());
  CHECK(to_obj(back) == to_obj(m));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_mesh(path), Error);
  CHECK_THROWS_AS(save_mesh(m, "/nonexistent-dir/x.obj"), Error);
  try {
    save_mesh(m, "/nonexistent-dir/x.obj");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Io);
  }
}

TEST_CASE("writer emits shortest round-trip decimals") {
  const SphereMesh m = parse_obj("v 0.1 0 0\nv 1 0 0\nv 0 1 0\nv 0 0 1e-3\nf 1 3 2\nf 1 2 4\nf 2 3 4\nf 1 4 3\n");
  const std::string text = to_obj(m);
  CHECK(text.find("v 0.1 0 0\n") == 0);
  CHECK(text.find("v 0 0 0.001\n") != std::string::npos);
  CHECK(text.find("f 1 3 2\n") != std::string::npos);
}

TEST_CASE("distinct errors for malformed input") {
  CHECK(parse_code("v 0 0\n") == ErrorCode::Parse);
  CHECK(parse_code("v 0 0 x\n") == ErrorCode::Parse);
  CHECK(parse_code("v 0 0 0\nv 1 0 0\nv 0 1 0\nv 0 0 1\nf 1 2 3 4\n") == ErrorCode::Parse);
  CHECK(parse_code("v 0 0 0\nf 1 2 3\n") == ErrorCode::Parse);
  CHECK(parse_code("v 0 0 0\nv 1 0 0\nv 0 1 0\nf 0 1 2\n") == ErrorCode::Parse);
  CHECK(parse_code("vn 0 0 1\n") == ErrorCode::Parse);
  CHECK(parse_code("v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1/1 2/2 3/3\n") == ErrorCode::Parse);
  // An edge shared by three faces.
  CHECK(parse_code(std::string(kTetra) + "v 1 1 1\nf 1 2 5\n") == ErrorCode::NonManifold);
  CHECK(parse_code(torus_obj(8, 6)) == ErrorCode::WrongTopology);
  try {
    parse_obj("v 0 0 0\nv 1 0 0\nbogus\n");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}
