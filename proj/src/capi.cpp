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

#include "lglab/lglab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "json.hpp"
#include "lglab/error.hpp"
#include "lglab/specs.hpp"
#include "lglab/verify.hpp"

struct lglab_model {
  lglab::LieGroupModel model;
};

struct lglab_mesh {
  lglab::SphereMesh mesh;
};

namespace {

thread_local std::string g_last_error;

lglab_status to_status(lglab::ErrorCode code) { return static_cast<lglab_status>(static_cast<int>(code)); }

template <class Fn>
lglab_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    fn();
    return LGLAB_OK;
  } catch (const lglab::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown failure";
  }
  return LGLAB_E_INTERNAL;
}

void require(bool cond, const char* what) {
  if (!cond) throw lglab::Error(lglab::ErrorCode::InvalidArgument, what);
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

lglab_status make_model(const lglab::Mat2& A, lglab_model** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = nullptr;
    *out = new lglab_model{lglab::classify(A)};
  });
}

template <class Make>
lglab_status make_mesh(lglab_mesh** out, Make&& make) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = nullptr;
    *out = new lglab_mesh{make()};
  });
}

}  // namespace

extern "C" {

const char* lglab_version(void) { return "1.0.0"; }

const char* lglab_last_error(void) { return g_last_error.c_str(); }

const char* lglab_status_name(lglab_status status) {
  if (status == LGLAB_OK) return "Ok";
  if (status == LGLAB_E_INTERNAL) return "Internal";
  if (status >= LGLAB_E_INVALID_ARGUMENT && status <= LGLAB_E_IO)
    return lglab::error_code_name(static_cast<lglab::ErrorCode>(static_cast<int>(status)));
  return "Unknown";
}

void lglab_string_free(char* s) { std::free(s); }

lglab_status lglab_model_from_matrix(double a, double b, double c, double d, lglab_model** out) {
  return make_model({a, b, c, d}, out);
}

lglab_status lglab_model_from_Db(double D, double b, lglab_model** out) {
  lglab::Mat2 A;
  const lglab_status st = guarded([&] { A = lglab::nonunimodular_matrix(D, b); });
  if (st != LGLAB_OK) {
    if (out) *out = nullptr;
    return st;
  }
  return make_model(A, out);
}

lglab_status lglab_model_from_spec(const char* spec, lglab_model** out) {
  lglab::Mat2 A;
  const lglab_status st = guarded([&] {
    require(spec != nullptr, "null group spec");
    A = lglab::parse_group_spec(spec);
  });
  if (st != LGLAB_OK) {
    if (out) *out = nullptr;
    return st;
  }
  return make_model(A, out);
}

void lglab_model_free(lglab_model* model) { delete model; }

lglab_status lglab_model_get_info(const lglab_model* model, lglab_model_info* out) {
  return guarded([&] {
    require(model != nullptr && out != nullptr, "null argument");
    const lglab::LieGroupModel& m = model->model;
    out->kind = static_cast<int>(m.label.kind);
    out->unimodular = m.traceClass == lglab::TraceClass::Unimodular;
    out->c = m.label.c;
    out->D = m.D;
    out->a = m.a;
    out->b = m.b;
    out->scale = m.scale;
    out->orientation_flip = m.orientationFlip;
    out->admits_open_book = m.admitsOpenBook;
  });
}

lglab_status lglab_model_label(const lglab_model* model, char** out) {
  return guarded([&] {
    require(model != nullptr && out != nullptr, "null argument");
    *out = dup_string(model->model.label.to_string());
  });
}

lglab_status lglab_model_to_json(const lglab_model* model, char** out) {
  return guarded([&] {
    require(model != nullptr && out != nullptr, "null argument");
    const lglab::LieGroupModel& m = model->model;
    nlohmann::ordered_json j;
    j["label"] = m.label.to_string();
    j["traceClass"] = m.traceClass == lglab::TraceClass::Unimodular ? "unimodular" : "non-unimodular";
    j["matrix"] = {{m.input.a, m.input.b}, {m.input.c, m.input.d}};
    j["workingMatrix"] = {{m.A.a, m.A.b}, {m.A.c, m.A.d}};
    j["D"] = m.D;
    if (m.traceClass != lglab::TraceClass::Unimodular) {
      j["a"] = m.a;
      j["b"] = m.b;
    }
    j["scale"] = m.scale;
    j["orientationFlip"] = m.orientationFlip;
    j["admitsOpenBook"] = m.admitsOpenBook;
    *out = dup_string(j.dump());
  });
}

lglab_status lglab_multiply(const lglab_model* model, const double g1[3], const double g2[3], double out[3]) {
  return guarded([&] {
    require(model != nullptr && g1 != nullptr && g2 != nullptr && out != nullptr, "null argument");
    const lglab::GroupPoint r =
        lglab::multiply(model->model.input, {g1[0], g1[1], g1[2]}, {g2[0], g2[1], g2[2]});
    out[0] = r.x;
    out[1] = r.y;
    out[2] = r.z;
  });
}

double lglab_m_of_D(double D) { return lglab::m_of_D(D); }

lglab_status lglab_solve_a_from_Db(double D, double b, double* a) {
  return guarded([&] {
    require(a != nullptr, "null output pointer");
    *a = lglab::solve_a_from_Db(D, b);
  });
}

lglab_status lglab_moduli_csv(double D_min, double D_max, double b_max, int steps, char** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = nullptr;
    *out = dup_string(lglab::moduli_csv(lglab::moduli_grid(D_min, D_max, b_max, steps)));
  });
}

lglab_status lglab_mesh_round(double cx, double cy, double cz, double r, int level, lglab_mesh** out) {
  return make_mesh(out, [&] { return lglab::make_round_sphere({cx, cy, cz}, r, level); });
}

lglab_status lglab_mesh_control(int level, lglab_mesh** out) {
  return make_mesh(out, [&] { return lglab::make_self_intersecting_sphere(level); });
}

lglab_status lglab_mesh_from_spec(const char* spec, lglab_mesh** out) {
  return make_mesh(out, [&] {
    require(spec != nullptr, "null surface spec");
    return lglab::parse_surface_spec(spec);
  });
}

lglab_status lglab_mesh_load(const char* path, lglab_mesh** out) {
  return make_mesh(out, [&] {
    require(path != nullptr, "null path");
    return lglab::load_mesh(path);
  });
}

lglab_status lglab_mesh_parse(const char* obj_text, lglab_mesh** out) {
  return make_mesh(out, [&] {
    require(obj_text != nullptr, "null text");
    return lglab::parse_obj(obj_text);
  });
}

lglab_status lglab_mesh_save(const lglab_mesh* mesh, const char* path) {
  return guarded([&] {
    require(mesh != nullptr && path != nullptr, "null argument");
    lglab::save_mesh(mesh->mesh, path);
  });
}

lglab_status lglab_mesh_to_obj(const lglab_mesh* mesh, char** out) {
  return guarded([&] {
    require(mesh != nullptr && out != nullptr, "null argument");
    *out = dup_string(lglab::to_obj(mesh->mesh));
  });
}

lglab_status lglab_mesh_counts(const lglab_mesh* mesh, int* vertices, int* edges, int* faces, int* euler) {
  return guarded([&] {
    require(mesh != nullptr, "null mesh");
    const lglab::SphereMesh& m = mesh->mesh;
    if (vertices) *vertices = static_cast<int>(m.vertex_count());
    if (edges) *edges = static_cast<int>(m.edge_count());
    if (faces) *faces = static_cast<int>(m.face_count());
    if (euler) *euler = m.euler_characteristic();
  });
}

void lglab_mesh_free(lglab_mesh* mesh) { delete mesh; }

void lglab_verify_config_default(lglab_verify_config* config) {
  if (!config) return;
  const lglab::VerifyConfig d;
  config->z_samples = d.zSamples;
  config->fiber_grid = d.fiberGrid;
  config->jacobian_tol = d.jacobianTol;
  config->seed = d.seed;
}

lglab_status lglab_verify(const lglab_model* model, const lglab_mesh* mesh, const lglab_verify_config* config,
                          char** report_json, lglab_outcome* outcome) {
  return guarded([&] {
    require(model != nullptr && mesh != nullptr && report_json != nullptr, "null argument");
    *report_json = nullptr;
    lglab::VerifyConfig cfg;
    if (config) {
      cfg.zSamples = config->z_samples;
      cfg.fiberGrid = config->fiber_grid;
      cfg.jacobianTol = config->jacobian_tol;
      cfg.seed = config->seed;
    }
    const lglab::VerificationReport rep = lglab::full_report(model->model, mesh->mesh, cfg);
    *report_json = dup_string(lglab::report_to_json(rep));
    if (outcome) {
      if (!rep.consistent())
        *outcome = LGLAB_ASSERTION_FAILED;
      else if (rep.embeddedVerdict == lglab::Verdict::Inconclusive)
        *outcome = LGLAB_INCONCLUSIVE;
      else
        *outcome = LGLAB_CONSISTENT;
    }
  });
}

}  // extern "C"
