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

#include "lglab/specs.hpp"

#include <charconv>
#include <cmath>

#include "lglab/error.hpp"
#include "lglab/format.hpp"

namespace lglab {

namespace {

[[noreturn]] void bad(std::string_view what, std::string_view text) {
  throw Error(ErrorCode::Parse, std::string(what) + ": '" + std::string(text) + "'");
}

double parse_real(std::string_view tok) {
  while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
  while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  double v = 0.0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || res.ec != std::errc() || res.ptr != tok.data() + tok.size() || !std::isfinite(v))
    bad("not a finite number", tok);
  return v;
}

int parse_int(std::string_view tok) {
  int v = 0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || res.ec != std::errc() || res.ptr != tok.data() + tok.size()) bad("not an integer", tok);
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto p = s.find(sep, start);
    out.push_back(s.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start));
    if (p == std::string_view::npos) break;
    start = p + 1;
  }
  return out;
}

}  // namespace

std::vector<double> parse_real_list(std::string_view text, std::size_t expected) {
  const auto parts = split(text, ',');
  if (parts.size() != expected)
    bad("expected " + std::to_string(expected) + " comma separated numbers", text);
  std::vector<double> out;
  for (auto p : parts) out.push_back(parse_real(p));
  return out;
}

Mat2 parse_group_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  const bool has_arg = colon != std::string_view::npos;
  try {
    if (name == "r3" && !has_arg) return r3_matrix();
    if (name == "nil3" && !has_arg) return nil3_matrix();
    if (name == "h3" && !has_arg) return h3_matrix();
    if (name == "sol3" && has_arg) return sol3_matrix(parse_real_list(arg, 1)[0]);
    if (name == "e2tilde" && has_arg) return e2tilde_matrix(parse_real_list(arg, 1)[0]);
    if (name == "nonuni" && has_arg) {
      const auto v = parse_real_list(arg, 2);
      return nonunimodular_matrix(v[0], v[1]);
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Parse) throw;
    throw Error(ErrorCode::Parse, "group '" + std::string(spec) + "': " + e.what());
  }
  bad("unknown group (r3, nil3, sol3:c, e2tilde:c, h3, nonuni:D,b)", spec);
}

SphereMesh parse_surface_spec(std::string_view spec) {
  const auto parts = split(spec, ':');
  const std::string_view kind = parts[0];
  if (kind == "obj" && spec.size() > 4) return load_mesh(std::string(spec.substr(4)));
  try {
    if (kind == "round" && parts.size() == 3) return make_round_sphere({0.0, 0.0, 0.0}, parse_real(parts[1]), parse_int(parts[2]));
    if (kind == "control" && parts.size() == 2) return make_self_intersecting_sphere(parse_int(parts[1]));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Parse) throw;
    throw Error(ErrorCode::Parse, "surface '" + std::string(spec) + "': " + e.what());
  }
  bad("unknown surface (round:r:level, control:level, obj:path)", spec);
}

std::vector<ModuliRow> moduli_grid(double Dmin, double Dmax, double bmax, int steps) {
  if (steps < 2) throw Error(ErrorCode::InvalidArgument, "moduli_grid: steps must be at least 2");
  if (!std::isfinite(Dmin) || !std::isfinite(Dmax) || !std::isfinite(bmax) || Dmax < Dmin || bmax < 0.0)
    throw Error(ErrorCode::InvalidArgument, "moduli_grid: need finite Dmin <= Dmax and bmax >= 0");
  std::vector<ModuliRow> rows;
  rows.reserve(static_cast<std::size_t>(steps) * static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double D = Dmin + (Dmax - Dmin) * i / (steps - 1);
    for (int j = 0; j < steps; ++j) {
      ModuliRow r;
      r.D = D;
      r.b = bmax * j / (steps - 1);
      try {
        r.a = solve_a_from_Db(r.D, r.b);
        r.valid = true;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::Domain) throw;
      }
      rows.push_back(r);
    }
  }
  return rows;
}

std::string moduli_csv(const std::vector<ModuliRow>& rows) {
  std::string out = "D,b,a,valid\n";
  for (const ModuliRow& r : rows) {
    out += format_double(r.D) + ',' + format_double(r.b) + ',';
    if (r.valid) out += format_double(r.a);
    out += r.valid ? ",1\n" : ",0\n";
  }
  return out;
}

}  // namespace lglab
