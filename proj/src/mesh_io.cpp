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

#include <charconv>
#include <fstream>
#include <sstream>

#include "lglab/error.hpp"
#include "lglab/format.hpp"
#include "lglab/surface.hpp"

namespace lglab {

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& msg) {
  std::ostringstream os;
  os << "obj line " << line << ": " << msg;
  throw Error(ErrorCode::Parse, os.str());
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class T>
bool parse_number(std::string_view tok, T& out) {
  const char* end = tok.data() + tok.size();
  const auto res = std::from_chars(tok.data(), end, out);
  return res.ec == std::errc() && res.ptr == end;
}

}  // namespace

SphereMesh parse_obj(std::string_view text) {
  std::vector<GroupPoint> vertices;
  std::vector<Face> faces;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto tok = split_ws(line);
    if (tok[0] == "v") {
      if (tok.size() != 4) parse_error(lineno, "vertex needs exactly three coordinates");
      GroupPoint p;
      for (int k = 0; k < 3; ++k)
        if (!parse_number(tok[static_cast<std::size_t>(k) + 1], p[k]))
          parse_error(lineno, "bad coordinate '" + std::string(tok[static_cast<std::size_t>(k) + 1]) + "'");
      vertices.push_back(p);
    } else if (tok[0] == "f") {
      if (tok.size() != 4) parse_error(lineno, "only triangular faces are supported");
      Face f{};
      for (int k = 0; k < 3; ++k) {
        long idx = 0;
        if (!parse_number(tok[static_cast<std::size_t>(k) + 1], idx))
          parse_error(lineno, "bad vertex index '" + std::string(tok[static_cast<std::size_t>(k) + 1]) + "'");
        if (idx < 1 || static_cast<std::size_t>(idx) > vertices.size())
          parse_error(lineno, "vertex index " + std::to_string(idx) + " out of range");
        f[static_cast<std::size_t>(k)] = static_cast<int>(idx - 1);
      }
      faces.push_back(f);
    } else {
      parse_error(lineno, "unsupported statement '" + std::string(tok[0]) + "'");
    }
  }
  return SphereMesh(std::move(vertices), std::move(faces));
}

SphereMesh load_mesh(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open mesh file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_obj(ss.str());
}

std::string to_obj(const SphereMesh& mesh) {
  std::string out;
  out.reserve(mesh.vertex_count() * 60 + mesh.face_count() * 24);
  for (const GroupPoint& p : mesh.vertices()) {
    out += "v ";
    out += format_double(p.x);
    out += ' ';
    out += format_double(p.y);
    out += ' ';
    out += format_double(p.z);
    out += '\n';
  }
  for (const Face& f : mesh.faces()) {
    out += "f " + std::to_string(f[0] + 1) + ' ' + std::to_string(f[1] + 1) + ' ' + std::to_string(f[2] + 1) + '\n';
  }
  return out;
}

void save_mesh(const SphereMesh& mesh, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write mesh file " + path.string());
  out << to_obj(mesh);
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

}  // namespace lglab
