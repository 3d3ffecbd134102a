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

// lglab command line front end. Talks to the library only through lglab.h.

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lglab/lglab.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitParse = 2;
constexpr int kExitUnclassified = 3;
constexpr int kExitUnwritable = 4;
constexpr int kExitInconclusive = 5;

struct Failure {
  int exit_code;
  std::string message;
};

struct ModelDeleter {
  void operator()(lglab_model* m) const { lglab_model_free(m); }
};
struct MeshDeleter {
  void operator()(lglab_mesh* m) const { lglab_mesh_free(m); }
};
struct StringDeleter {
  void operator()(char* s) const { lglab_string_free(s); }
};
using ModelPtr = std::unique_ptr<lglab_model, ModelDeleter>;
using MeshPtr = std::unique_ptr<lglab_mesh, MeshDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

[[noreturn]] void fail(int exit_code, const std::string& message) { throw Failure{exit_code, message}; }

std::string status_message(lglab_status st) {
  return std::string(lglab_status_name(st)) + ": " + lglab_last_error();
}

int exit_for_group_error(lglab_status st) {
  switch (st) {
    case LGLAB_E_PARSE:
    case LGLAB_E_INVALID_ARGUMENT:
      return kExitParse;
    default:
      return kExitUnclassified;
  }
}

std::vector<double> split_reals(const std::string& text, std::size_t expected, const char* flag) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string tok = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    double v = 0.0;
    const char* b = tok.data();
    if (!tok.empty() && tok[0] == '+') ++b;
    const auto res = std::from_chars(b, tok.data() + tok.size(), v);
    if (tok.empty() || res.ec != std::errc() || res.ptr != tok.data() + tok.size() || !std::isfinite(v))
      fail(kExitParse, std::string(flag) + ": bad number '" + tok + "'");
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.size() != expected)
    fail(kExitParse, std::string(flag) + ": expected " + std::to_string(expected) + " comma separated numbers");
  return out;
}

ModelPtr build_model(const std::string& matrix, const std::string& Db, const std::string& group) {
  const int given = !matrix.empty() + !Db.empty() + !group.empty();
  if (given != 1) fail(kExitParse, "give exactly one of --matrix, --Db, --group");
  lglab_model* raw = nullptr;
  lglab_status st = LGLAB_OK;
  if (!matrix.empty()) {
    const auto v = split_reals(matrix, 4, "--matrix");
    st = lglab_model_from_matrix(v[0], v[1], v[2], v[3], &raw);
  } else if (!Db.empty()) {
    const auto v = split_reals(Db, 2, "--Db");
    st = lglab_model_from_Db(v[0], v[1], &raw);
  } else {
    st = lglab_model_from_spec(group.c_str(), &raw);
  }
  if (st != LGLAB_OK) fail(exit_for_group_error(st), status_message(st));
  return ModelPtr(raw);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(kExitUnwritable, "cannot write " + path);
  out << text;
  out.close();
  if (!out) fail(kExitUnwritable, "write failed for " + path);
}

const char* kind_name(int kind) {
  switch (kind) {
    case 0: return "R3";
    case 1: return "Nil3";
    case 2: return "Sol3";
    case 3: return "E2tilde";
    case 4: return "H3";
    default: return "NonUnimodular";
  }
}

std::optional<std::uint64_t> seed_from_env() {
  const char* env = std::getenv("LGLAB_SEED");
  if (!env || !*env) return std::nullopt;
  std::uint64_t v = 0;
  const std::string s(env);
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) fail(kExitParse, "LGLAB_SEED: not an unsigned integer");
  return v;
}

int run_classify(const std::string& matrix, const std::string& Db, const std::string& group) {
  const ModelPtr model = build_model(matrix, Db, group);
  lglab_model_info info{};
  lglab_model_get_info(model.get(), &info);
  char* label = nullptr;
  char* json = nullptr;
  lglab_model_label(model.get(), &label);
  lglab_model_to_json(model.get(), &json);
  const StringPtr label_owner(label), json_owner(json);
  std::cout << "label: " << label << "\n";
  std::cout << "kind: " << kind_name(info.kind) << "\n";
  std::cout << "trace class: " << (info.unimodular ? "unimodular" : "non-unimodular") << "\n";
  std::cout << "D: " << info.D << "\n";
  if (!info.unimodular) std::cout << "a: " << info.a << "\nb: " << info.b << "\n";
  std::cout << "admits open book: " << (info.admits_open_book ? "yes" : "no") << "\n";
  std::cout << json << "\n";
  return kExitOk;
}

int run_moduli(double Dmin, double Dmax, double bmax, int steps, const std::string& out) {
  char* csv = nullptr;
  const lglab_status st = lglab_moduli_csv(Dmin, Dmax, bmax, steps, &csv);
  if (st != LGLAB_OK) fail(kExitParse, status_message(st));
  const StringPtr owner(csv);
  write_output(out, csv);
  return kExitOk;
}

int run_make_surface(const std::string& kind, double r, int level, const std::string& out) {
  lglab_mesh* raw = nullptr;
  lglab_status st = LGLAB_OK;
  if (kind == "round")
    st = lglab_mesh_round(0.0, 0.0, 0.0, r, level, &raw);
  else
    st = lglab_mesh_control(level, &raw);
  if (st != LGLAB_OK) fail(kExitParse, status_message(st));
  const MeshPtr mesh(raw);
  char* obj = nullptr;
  lglab_mesh_to_obj(mesh.get(), &obj);
  const StringPtr owner(obj);
  write_output(out, obj);
  int V = 0, E = 0, F = 0, chi = 0;
  lglab_mesh_counts(mesh.get(), &V, &E, &F, &chi);
  std::ostream& info = (out.empty() || out == "-") ? std::cerr : std::cout;
  info << "V=" << V << " E=" << E << " F=" << F << " chi=" << chi << "\n";
  return kExitOk;
}

int run_verify(const std::string& matrix, const std::string& Db, const std::string& group, const std::string& surface,
               lglab_verify_config cfg, const std::string& out) {
  if (const auto env = seed_from_env()) cfg.seed = *env;
  const ModelPtr model = build_model(matrix, Db, group);
  lglab_mesh* raw = nullptr;
  const lglab_status st = lglab_mesh_from_spec(surface.c_str(), &raw);
  if (st != LGLAB_OK) fail(kExitParse, status_message(st));
  const MeshPtr mesh(raw);
  char* json = nullptr;
  lglab_outcome outcome = LGLAB_CONSISTENT;
  const lglab_status vs = lglab_verify(model.get(), mesh.get(), &cfg, &json, &outcome);
  if (vs != LGLAB_OK) fail(vs == LGLAB_E_INVALID_ARGUMENT ? kExitParse : kExitAssertion, status_message(vs));
  const StringPtr owner(json);
  write_output(out, json);
  switch (outcome) {
    case LGLAB_ASSERTION_FAILED: return kExitAssertion;
    case LGLAB_INCONCLUSIVE: return kExitInconclusive;
    default: return kExitOk;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lglab: metric Lie groups R^2 x_A R, Gauss maps and embedded spheres"};
  app.require_subcommand(1);

  std::string matrix, Db, group;
  auto* classify = app.add_subcommand("classify", "classify a group by its matrix or (D, b)");
  classify->add_option("--matrix", matrix, "a,b,c,d (row major)");
  classify->add_option("--Db", Db, "D,b of the trace-2 family");
  classify->add_option("--group", group, "named group");

  double Dmin = 0.0, Dmax = 4.0, bmax = 3.0;
  int steps = 50;
  std::string moduli_out;
  auto* moduli = app.add_subcommand("moduli", "CSV grid of the non-unimodular moduli space");
  moduli->add_option("--Dmin", Dmin, "smallest D");
  moduli->add_option("--Dmax", Dmax, "largest D");
  moduli->add_option("--bmax", bmax, "largest b");
  moduli->add_option("--steps", steps, "grid points per axis");
  moduli->add_option("--out", moduli_out, "CSV path (default stdout)");

  std::string kind;
  double radius = 0.2;
  int level = 4;
  std::string surface_out;
  auto* make_surface = app.add_subcommand("make-surface", "write a test sphere as OBJ");
  make_surface->add_option("kind", kind, "round | control")->required()->check(CLI::IsMember({"round", "control"}));
  make_surface->add_option("--r", radius, "radius of the round sphere");
  make_surface->add_option("--level", level, "subdivision level");
  make_surface->add_option("--out", surface_out, "OBJ path (default stdout)");

  std::string vmatrix, vDb, vgroup, vsurface, verify_out;
  lglab_verify_config cfg;
  lglab_verify_config_default(&cfg);
  auto* verify = app.add_subcommand("verify", "run the embeddedness checks and write a JSON report");
  verify->add_option("--group", vgroup, "named group");
  verify->add_option("--matrix", vmatrix, "a,b,c,d (row major)");
  verify->add_option("--Db", vDb, "D,b of the trace-2 family");
  verify->add_option("--surface", vsurface, "round:r:level | control:level | obj:path")->required();
  verify->add_option("--zsamples", cfg.z_samples, "level curve samples");
  verify->add_option("--grid", cfg.fiber_grid, "fiber grid per axis");
  verify->add_option("--jacobian-tol", cfg.jacobian_tol, "Gauss map Jacobian threshold");
  verify->add_option("--seed", cfg.seed, "jitter seed (LGLAB_SEED overrides)");
  verify->add_option("--out", verify_out, "JSON path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*classify) return run_classify(matrix, Db, group);
    if (*moduli) return run_moduli(Dmin, Dmax, bmax, steps, moduli_out);
    if (*make_surface) return run_make_surface(kind, radius, level, surface_out);
    return run_verify(vmatrix, vDb, vgroup, vsurface, cfg, verify_out);
  } catch (const Failure& f) {
    std::cerr << "lglab: " << f.message << "\n";
    return f.exit_code;
  }
}
