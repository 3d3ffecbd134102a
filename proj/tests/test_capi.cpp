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

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "lglab/lglab.h"

namespace {

struct Owned {
  char* p = nullptr;
  ~Owned() { lglab_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(lglab_version()).size() > 0);
  CHECK(std::string(lglab_status_name(LGLAB_OK)) == "Ok");
  CHECK(std::string(lglab_status_name(LGLAB_E_PARSE)) == "Parse");
  CHECK(std::string(lglab_status_name(LGLAB_E_UNCLASSIFIED)) == "Unclassified");
}

TEST_CASE("models through the C interface") {
  lglab_model* m = nullptr;
  REQUIRE(lglab_model_from_spec("sol3:2", &m) == LGLAB_OK);
  lglab_model_info info{};
  REQUIRE(lglab_model_get_info(m, &info) == LGLAB_OK);
  CHECK(info.kind == 2);
  CHECK(info.unimodular == 1);
  CHECK(info.c == doctest::Approx(2.0));
  CHECK(info.admits_open_book == 1);
  Owned label;
  REQUIRE(lglab_model_label(m, &label.p) == LGLAB_OK);
  CHECK(label.str() == "Sol3(2)");
  Owned json;
  REQUIRE(lglab_model_to_json(m, &json.p) == LGLAB_OK);
  CHECK(nlohmann::json::parse(json.str())["label"] == "Sol3(2)");
  const double g1[3] = {1, 2, 3}, g2[3] = {0, 0, 0};
  double out[3];
  REQUIRE(lglab_multiply(m, g1, g2, out) == LGLAB_OK);
  CHECK(out[0] == 1.0);
  CHECK(out[1] == 2.0);
  CHECK(out[2] == 3.0);
  lglab_model_free(m);

  REQUIRE(lglab_model_from_Db(0.5, 1.0, &m) == LGLAB_OK);
  REQUIRE(lglab_model_get_info(m, &info) == LGLAB_OK);
  CHECK(info.kind == 5);
  CHECK(info.D == doctest::Approx(0.5));
  lglab_model_free(m);

  m = reinterpret_cast<lglab_model*>(0x1);
  CHECK(lglab_model_from_Db(2.0, 0.5, &m) == LGLAB_E_DOMAIN);
  CHECK(m == nullptr);
  CHECK(std::string(lglab_last_error()).size() > 0);
  CHECK(lglab_model_from_spec("sol4:1", &m) == LGLAB_E_PARSE);
  CHECK(lglab_model_from_matrix(NAN, 0, 0, 0, &m) != LGLAB_OK);
  CHECK(lglab_model_from_spec(nullptr, &m) == LGLAB_E_INVALID_ARGUMENT);
  CHECK(lglab_model_get_info(nullptr, &info) == LGLAB_E_INVALID_ARGUMENT);
  lglab_model_free(nullptr);
}

TEST_CASE("moduli through the C interface") {
  CHECK(lglab_m_of_D(1.0) == doctest::Approx(0.0).epsilon(1e-12));
  double a = -1.0;
  CHECK(lglab_solve_a_from_Db(2.0, 1.0, &a) == LGLAB_OK);
  CHECK(a == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(lglab_solve_a_from_Db(2.0, 0.5, &a) == LGLAB_E_DOMAIN);
  Owned csv;
  REQUIRE(lglab_moduli_csv(0, 4, 3, 3, &csv.p) == LGLAB_OK);
  CHECK(csv.str().rfind("D,b,a,valid\n", 0) == 0);
}

TEST_CASE("meshes and verification through the C interface") {
  lglab_mesh* mesh = nullptr;
  REQUIRE(lglab_mesh_round(0, 0, 0, 0.2, 3, &mesh) == LGLAB_OK);
  int V = 0, E = 0, F = 0, chi = 0;
  REQUIRE(lglab_mesh_counts(mesh, &V, &E, &F, &chi) == LGLAB_OK);
  CHECK(V == 642);
  CHECK(E == 1920);
  CHECK(F == 1280);
  CHECK(chi == 2);

  Owned obj;
  REQUIRE(lglab_mesh_to_obj(mesh, &obj.p) == LGLAB_OK);
  lglab_mesh* parsed = nullptr;
  REQUIRE(lglab_mesh_parse(obj.p, &parsed) == LGLAB_OK);
  Owned obj2;
  REQUIRE(lglab_mesh_to_obj(parsed, &obj2.p) == LGLAB_OK);
  CHECK(obj.str() == obj2.str());
  lglab_mesh_free(parsed);

  const auto path = std::filesystem::temp_directory_path() / "lglab_capi_test.obj";
  REQUIRE(lglab_mesh_save(mesh, path.string().c_str()) == LGLAB_OK);
  lglab_mesh* loaded = nullptr;
  REQUIRE(lglab_mesh_load(path.string().c_str(), &loaded) == LGLAB_OK);
  lglab_mesh_free(loaded);
  std::filesystem::remove(path);
  CHECK(lglab_mesh_save(mesh, "/nonexistent/dir/x.obj") == LGLAB_E_IO);
  CHECK(lglab_mesh_parse("v 0 0 0\nf 1 2 3\n", &parsed) == LGLAB_E_PARSE);
  CHECK(lglab_mesh_from_spec("round:0.2", &parsed) == LGLAB_E_PARSE);

  lglab_model* model = nullptr;
  REQUIRE(lglab_model_from_spec("nil3", &model) == LGLAB_OK);
  lglab_verify_config cfg;
  lglab_verify_config_default(&cfg);
  CHECK(cfg.z_samples == 32);
  CHECK(cfg.fiber_grid == 64);
  Owned report;
  lglab_outcome outcome = LGLAB_ASSERTION_FAILED;
  REQUIRE(lglab_verify(model, mesh, &cfg, &report.p, &outcome) == LGLAB_OK);
  CHECK(outcome == LGLAB_CONSISTENT);
  const auto j = nlohmann::json::parse(report.str());
  CHECK(j["verdict"] == "Embedded");
  CHECK(j["seed"] == cfg.seed);

  lglab_mesh* control = nullptr;
  REQUIRE(lglab_mesh_control(3, &control) == LGLAB_OK);
  Owned report2;
  REQUIRE(lglab_verify(model, control, nullptr, &report2.p, &outcome) == LGLAB_OK);
  CHECK(outcome == LGLAB_CONSISTENT);
  CHECK(nlohmann::json::parse(report2.str())["verdict"] == "NotEmbedded");

  cfg.fiber_grid = 0;
  char* none = nullptr;
  CHECK(lglab_verify(model, mesh, &cfg, &none, &outcome) == LGLAB_E_INVALID_ARGUMENT);
  CHECK(none == nullptr);

  lglab_mesh_free(control);
  lglab_model_free(model);
  lglab_mesh_free(mesh);
}
