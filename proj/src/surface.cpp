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

#include "lglab/surface.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <unordered_map>

#include "lglab/error.hpp"

namespace lglab {

namespace {

std::uint64_t directed_key(int a, int b) {
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

}  // namespace

SphereMesh::SphereMesh(std::vector<GroupPoint> vertices, std::vector<Face> faces)
    : vertices_(std::move(vertices)), faces_(std::move(faces)) {
  const int n = static_cast<int>(vertices_.size());
  for (const GroupPoint& p : vertices_)
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z))
      throw Error(ErrorCode::InvalidArgument, "mesh: non-finite vertex coordinate");
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    const Face& t = faces_[f];
    for (int v : t)
      if (v < 0 || v >= n) {
        std::ostringstream os;
        os << "mesh: face " << f << " references vertex " << v << " out of range";
        throw Error(ErrorCode::InvalidArgument, os.str());
      }
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
      std::ostringstream os;
      os << "mesh: face " << f << " repeats a vertex";
      throw Error(ErrorCode::DegenerateGeometry, os.str());
    }
  }
  build_topology();
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    if (norm(face_area_vector(static_cast<int>(f))) <= kMinFaceArea) {
      std::ostringstream os;
      os << "mesh: face " << f << " has near-zero area";
      throw Error(ErrorCode::DegenerateGeometry, os.str());
    }
  }
}

void SphereMesh::build_topology() {
  const int n = static_cast<int>(vertices_.size());
  const int nf = static_cast<int>(faces_.size());
  if (nf == 0) throw Error(ErrorCode::WrongTopology, "mesh: no faces");

  // Each directed edge once, each undirected edge exactly twice.
  std::unordered_map<std::uint64_t, int> directed;  // directed edge -> face
  directed.reserve(faces_.size() * 3);
  for (int f = 0; f < nf; ++f) {
    const Face& t = faces_[static_cast<std::size_t>(f)];
    for (int k = 0; k < 3; ++k) {
      const int a = t[static_cast<std::size_t>(k)];
      const int b = t[static_cast<std::size_t>((k + 1) % 3)];
      if (!directed.emplace(directed_key(a, b), f).second) {
        std::ostringstream os;
        os << "mesh: edge (" << a + 1 << ", " << b + 1 << ") used twice with the same orientation or by more than two faces";
        throw Error(ErrorCode::NonManifold, os.str());
      }
    }
  }
  face_adj_.assign(faces_.size(), {-1, -1, -1});
  std::size_t undirected = 0;
  for (int f = 0; f < nf; ++f) {
    const Face& t = faces_[static_cast<std::size_t>(f)];
    for (int k = 0; k < 3; ++k) {
      const int a = t[static_cast<std::size_t>(k)];
      const int b = t[static_cast<std::size_t>((k + 1) % 3)];
      auto it = directed.find(directed_key(b, a));
      if (it == directed.end()) {
        std::ostringstream os;
        os << "mesh: edge (" << a + 1 << ", " << b + 1 << ") is a boundary or inconsistently oriented edge";
        throw Error(ErrorCode::NonManifold, os.str());
      }
      // Edge a->b is opposite vertex (k + 2) % 3.
      face_adj_[static_cast<std::size_t>(f)][static_cast<std::size_t>((k + 2) % 3)] = it->second;
      if (a < b) ++undirected;
    }
  }
  edge_count_ = undirected;

  // Vertex -> faces.
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (const Face& t : faces_)
    for (int v : t) ++deg[static_cast<std::size_t>(v)];
  vf_offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v) vf_offsets_[static_cast<std::size_t>(v) + 1] = vf_offsets_[static_cast<std::size_t>(v)] + deg[static_cast<std::size_t>(v)];
  vf_.assign(static_cast<std::size_t>(vf_offsets_.back()), -1);
  {
    std::vector<int> fill(vf_offsets_.begin(), vf_offsets_.end() - 1);
    for (int f = 0; f < nf; ++f)
      for (int v : faces_[static_cast<std::size_t>(f)]) vf_[static_cast<std::size_t>(fill[static_cast<std::size_t>(v)]++)] = f;
  }

  // Ordered rings. Face (v, a, b) contributes link edge a -> b.
  ring_offsets_ = vf_offsets_;
  rings_.assign(vf_.size(), -1);
  for (int v = 0; v < n; ++v) {
    const auto faces_of_v = vertex_faces(v);
    if (faces_of_v.empty()) {
      std::ostringstream os;
      os << "mesh: vertex " << v + 1 << " is not used by any face";
      throw Error(ErrorCode::NonManifold, os.str());
    }
    std::unordered_map<int, int> next;
    for (int f : faces_of_v) {
      const Face& t = faces_[static_cast<std::size_t>(f)];
      int k = 0;
      while (t[static_cast<std::size_t>(k)] != v) ++k;
      next[t[static_cast<std::size_t>((k + 1) % 3)]] = t[static_cast<std::size_t>((k + 2) % 3)];
    }
    const int start = next.begin()->first;
    int cur = start;
    std::size_t out = static_cast<std::size_t>(ring_offsets_[static_cast<std::size_t>(v)]);
    std::size_t count = 0;
    do {
      if (count >= faces_of_v.size()) break;
      rings_[out + count++] = cur;
      auto it = next.find(cur);
      if (it == next.end()) break;
      cur = it->second;
    } while (cur != start);
    if (count != faces_of_v.size() || cur != start) {
      std::ostringstream os;
      os << "mesh: the faces around vertex " << v + 1 << " do not form a single disk";
      throw Error(ErrorCode::NonManifold, os.str());
    }
  }

  if (euler_characteristic() != 2) {
    std::ostringstream os;
    os << "mesh: Euler characteristic " << euler_characteristic() << " (V=" << vertices_.size()
       << ", E=" << edge_count_ << ", F=" << faces_.size() << "), a sphere needs 2";
    throw Error(ErrorCode::WrongTopology, os.str());
  }
  // Connectedness: a sphere plus a torus also has characteristic 2.
  std::vector<char> seen(faces_.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    const int f = stack.back();
    stack.pop_back();
    ++reached;
    for (int g : face_adj_[static_cast<std::size_t>(f)])
      if (!seen[static_cast<std::size_t>(g)]) {
        seen[static_cast<std::size_t>(g)] = 1;
        stack.push_back(g);
      }
  }
  if (reached != faces_.size()) throw Error(ErrorCode::WrongTopology, "mesh: surface is not connected");
}

std::span<const int> SphereMesh::ring(int v) const {
  const auto b = static_cast<std::size_t>(ring_offsets_[static_cast<std::size_t>(v)]);
  const auto e = static_cast<std::size_t>(ring_offsets_[static_cast<std::size_t>(v) + 1]);
  return std::span<const int>(rings_).subspan(b, e - b);
}

std::span<const int> SphereMesh::vertex_faces(int v) const {
  const auto b = static_cast<std::size_t>(vf_offsets_[static_cast<std::size_t>(v)]);
  const auto e = static_cast<std::size_t>(vf_offsets_[static_cast<std::size_t>(v) + 1]);
  return std::span<const int>(vf_).subspan(b, e - b);
}

Vec3 SphereMesh::face_area_vector(int f) const {
  const Face& t = faces_[static_cast<std::size_t>(f)];
  const Vec3& p0 = vertices_[static_cast<std::size_t>(t[0])];
  const Vec3& p1 = vertices_[static_cast<std::size_t>(t[1])];
  const Vec3& p2 = vertices_[static_cast<std::size_t>(t[2])];
  return 0.5 * cross(p1 - p0, p2 - p0);
}

double SphereMesh::mean_edge_length() const {
  double sum = 0.0;
  std::size_t count = 0;
  for (const Face& t : faces_)
    for (int k = 0; k < 3; ++k) {
      const int a = t[static_cast<std::size_t>(k)];
      const int b = t[static_cast<std::size_t>((k + 1) % 3)];
      if (a < b) {
        sum += norm(vertices_[static_cast<std::size_t>(a)] - vertices_[static_cast<std::size_t>(b)]);
        ++count;
      }
    }
  return count ? sum / static_cast<double>(count) : 0.0;
}

SphereMesh SphereMesh::with_vertices(std::vector<GroupPoint> vertices) const {
  if (vertices.size() != vertices_.size())
    throw Error(ErrorCode::InvalidArgument, "mesh: replacement vertex count differs");
  return SphereMesh(std::move(vertices), faces_);
}

SphereMesh SphereMesh::flipped() const {
  std::vector<Face> faces = faces_;
  for (Face& t : faces) std::swap(t[1], t[2]);
  return SphereMesh(vertices_, std::move(faces));
}

SphereMesh SphereMesh::left_translated(const Mat2& A, const GroupPoint& a) const {
  std::vector<GroupPoint> moved;
  moved.reserve(vertices_.size());
  for (const GroupPoint& g : vertices_) moved.push_back(multiply(A, a, g));
  return with_vertices(std::move(moved));
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

namespace {

struct UnitIcosphere {
  std::vector<Vec3> vertices;
  std::vector<Face> faces;
};

UnitIcosphere unit_icosphere(int level) {
  const double phi = 0.5 * (1.0 + std::sqrt(5.0));
  std::vector<Vec3> v = {{-1, phi, 0}, {1, phi, 0}, {-1, -phi, 0}, {1, -phi, 0},
                         {0, -1, phi}, {0, 1, phi}, {0, -1, -phi}, {0, 1, -phi},
                         {phi, 0, -1}, {phi, 0, 1}, {-phi, 0, -1}, {-phi, 0, 1}};
  std::vector<Face> f = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
                         {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
                         {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
                         {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};

  // Fixed generic rotation (Euler angles about z, y, x) so heights are distinct.
  const double az = 0.3141, ay = 0.7071, ax = 1.1180;
  const Mat3 Rz{{std::cos(az), -std::sin(az), 0, std::sin(az), std::cos(az), 0, 0, 0, 1}};
  const Mat3 Ry{{std::cos(ay), 0, std::sin(ay), 0, 1, 0, -std::sin(ay), 0, std::cos(ay)}};
  const Mat3 Rx{{1, 0, 0, 0, std::cos(ax), -std::sin(ax), 0, std::sin(ax), std::cos(ax)}};
  const Mat3 R = Rz * Ry * Rx;
  for (Vec3& p : v) p = normalized(R * p);

  for (int l = 0; l < level; ++l) {
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int a, int b) {
      const auto key = std::minmax(a, b);
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      v.push_back(normalized(v[static_cast<std::size_t>(a)] + v[static_cast<std::size_t>(b)]));
      const int id = static_cast<int>(v.size()) - 1;
      midpoint.emplace(key, id);
      return id;
    };
    std::vector<Face> next;
    next.reserve(f.size() * 4);
    for (const Face& t : f) {
      const int a = mid(t[0], t[1]);
      const int b = mid(t[1], t[2]);
      const int c = mid(t[2], t[0]);
      next.push_back({t[0], a, c});
      next.push_back({t[1], b, a});
      next.push_back({t[2], c, b});
      next.push_back({a, b, c});
    }
    f = std::move(next);
  }
  return {std::move(v), std::move(f)};
}

}  // namespace

SphereMesh make_round_sphere(const GroupPoint& center, double r, int level) {
  if (!(r > 0.0) || !std::isfinite(r)) throw Error(ErrorCode::InvalidArgument, "make_round_sphere: radius must be positive");
  if (level < 0 || level > 9) throw Error(ErrorCode::InvalidArgument, "make_round_sphere: level must be in 0..9");
  UnitIcosphere ico = unit_icosphere(level);
  for (Vec3& p : ico.vertices) p = center + r * p;
  return SphereMesh(std::move(ico.vertices), std::move(ico.faces));
}

SphereMesh make_self_intersecting_sphere(int level) {
  if (level < 2 || level > 9) throw Error(ErrorCode::InvalidArgument, "make_self_intersecting_sphere: level must be in 2..9");
  UnitIcosphere ico = unit_icosphere(level);
  // Stretch along z by 3, then bend the cap above z = 0.6 down through the
  // interior: height 3 s - 45 (s - 0.6)^2 reaches -4.2 at the tip, below the
  // bottom cap at -3.
  constexpr double kScale = 0.1;
  for (Vec3& p : ico.vertices) {
    const double s = p.z;
    const double bend = s > 0.6 ? 45.0 * (s - 0.6) * (s - 0.6) : 0.0;
    p = kScale * Vec3{p.x, p.y, 3.0 * s - bend};
  }
  return SphereMesh(std::move(ico.vertices), std::move(ico.faces));
}

// ---------------------------------------------------------------------------
// Gauss maps
// ---------------------------------------------------------------------------

namespace {

Mat3 frame_matrix(const LieGroupModel& model, const GroupPoint& g, InvariantFrame frame) {
  return frame == InvariantFrame::Left ? left_frame_at(model.input, g).matrix() : right_frame_at(model.input, g).matrix();
}

Vec3 area_weighted_normal(const SphereMesh& mesh, int v) {
  Vec3 n;
  for (int f : mesh.vertex_faces(v)) n += mesh.face_area_vector(f);
  return n;
}

// Unit normal in frame components from an outward coordinate normal n.
Vec3 frame_unit_normal(const Mat3& P, const Vec3& n, const Vec3& frameScale) {
  // Orthonormal tangent pair (t1, t2) with t1 x t2 along n.
  const Vec3 nh = normalized(n);
  const Vec3 helper = std::fabs(nh.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  const Vec3 t1 = normalized(cross(helper, nh));
  const Vec3 t2 = cross(nh, t1);
  const Mat3 Pinv = inverse(P);
  Vec3 u1 = Pinv * t1;
  Vec3 u2 = Pinv * t2;
  // Components with respect to the frame {w_i E_i}.
  for (int i = 0; i < 3; ++i) {
    u1[i] /= frameScale[i];
    u2[i] /= frameScale[i];
  }
  return normalized(cross(u1, u2));
}

double signed_spherical_area(const Vec3& a, const Vec3& b, const Vec3& c) {
  const double num = triple(a, b, c);
  const double den = 1.0 + dot(a, b) + dot(b, c) + dot(c, a);
  return 2.0 * std::atan2(num, den);
}

}  // namespace

Vec3 vertex_normal(const LieGroupModel& model, const SphereMesh& mesh, int v, const GaussOptions& opts) {
  if (v < 0 || static_cast<std::size_t>(v) >= mesh.vertex_count())
    throw Error(ErrorCode::InvalidArgument, "vertex_normal: vertex index out of range");
  const Vec3 n = area_weighted_normal(mesh, v);
  double local = 0.0;
  for (int f : mesh.vertex_faces(v)) local += norm(mesh.face_area_vector(f));
  if (!(norm(n) > 1e-12 * local)) {
    std::ostringstream os;
    os << "vertex_normal: degenerate star at vertex " << v;
    throw Error(ErrorCode::DegenerateGeometry, os.str());
  }
  const Mat3 P = frame_matrix(model, mesh.vertices()[static_cast<std::size_t>(v)], opts.frame);
  return frame_unit_normal(P, n, opts.frameScale);
}

GaussData gauss_map(const LieGroupModel& model, const SphereMesh& mesh, const GaussOptions& opts) {
  for (int i = 0; i < 3; ++i)
    if (!(opts.frameScale[i] > 0.0)) throw Error(ErrorCode::InvalidArgument, "gauss_map: frame scale must be positive");
  const int nv = static_cast<int>(mesh.vertex_count());
  GaussData gd;
  gd.normal.resize(mesh.vertex_count());
  gd.gauss.resize(mesh.vertex_count());
  for (int v = 0; v < nv; ++v) {
    const Vec3 G = vertex_normal(model, mesh, v, opts);
    Vec3 Gs = G;
    for (int i = 0; i < 3; ++i) Gs[i] *= opts.frameScale[i];
    const Mat3 P = frame_matrix(model, mesh.vertices()[static_cast<std::size_t>(v)], opts.frame);
    gd.gauss[static_cast<std::size_t>(v)] = G;
    // Back to coordinates: N = sum_i G_i (w_i E_i).
    gd.normal[static_cast<std::size_t>(v)] = P * Gs;
  }
  const std::size_t nf = mesh.face_count();
  gd.faceSign.resize(nf);
  gd.faceJacobian.resize(nf);
  gd.minAbsJacobian = nf ? std::numeric_limits<double>::infinity() : 0.0;
  for (std::size_t f = 0; f < nf; ++f) {
    const Face& t = mesh.faces()[f];
    const double omega = signed_spherical_area(gd.gauss[static_cast<std::size_t>(t[0])],
                                               gd.gauss[static_cast<std::size_t>(t[1])],
                                               gd.gauss[static_cast<std::size_t>(t[2])]);
    const double area = norm(mesh.face_area_vector(static_cast<int>(f)));
    gd.totalArea += omega;
    gd.faceSign[f] = omega > 0.0 ? 1 : (omega < 0.0 ? -1 : 0);
    gd.faceJacobian[f] = omega / area;
    gd.minAbsJacobian = std::fmin(gd.minAbsJacobian, std::fabs(gd.faceJacobian[f]));
  }
  gd.degree = static_cast<int>(std::lround(gd.totalArea / (4.0 * std::numbers::pi)));
  return gd;
}

GaussData left_gauss_map(const LieGroupModel& model, const SphereMesh& mesh, Vec3 frameScale) {
  return gauss_map(model, mesh, {InvariantFrame::Left, frameScale});
}

GaussData right_gauss_map(const LieGroupModel& model, const SphereMesh& mesh) {
  // The right invariant frame is the coordinate basis at e, already orthonormal there.
  return gauss_map(model, mesh, {InvariantFrame::Right, {1.0, 1.0, 1.0}});
}

DiffeoCheck is_gauss_diffeo(const GaussData& gd, double tol) {
  DiffeoCheck out;
  int pos = 0;
  int neg = 0;
  for (int s : gd.faceSign) {
    if (s > 0) ++pos;
    if (s < 0) ++neg;
  }
  const int majority = pos >= neg ? 1 : -1;
  for (std::size_t f = 0; f < gd.faceSign.size(); ++f)
    if (gd.faceSign[f] != majority || std::fabs(gd.faceJacobian[f]) <= tol) out.offendingFaces.push_back(static_cast<int>(f));

  std::ostringstream why;
  if (gd.faceSign.empty()) {
    why << "no faces";
  } else if (!out.offendingFaces.empty()) {
    why << out.offendingFaces.size() << " face(s) with reversed or vanishing Gauss Jacobian";
  } else if (std::abs(gd.degree) != 1) {
    why << "Gauss map degree " << gd.degree;
  } else if (!(gd.minAbsJacobian > tol)) {
    why << "minimum |Jacobian| " << gd.minAbsJacobian << " at or below tolerance";
  }
  out.reason = why.str();
  out.diffeo = out.reason.empty();
  out.sign = out.diffeo ? majority : 0;
  return out;
}

double gauss_variance(const LieGroupModel& model, std::span<const GroupPoint> vertices, std::span<const Face> faces) {
  std::vector<Vec3> n(vertices.size());
  for (const Face& t : faces) {
    for (int v : t)
      if (v < 0 || static_cast<std::size_t>(v) >= vertices.size())
        throw Error(ErrorCode::InvalidArgument, "gauss_variance: face index out of range");
    const Vec3 a = 0.5 * cross(vertices[static_cast<std::size_t>(t[1])] - vertices[static_cast<std::size_t>(t[0])],
                               vertices[static_cast<std::size_t>(t[2])] - vertices[static_cast<std::size_t>(t[0])]);
    for (int v : t) n[static_cast<std::size_t>(v)] += a;
  }
  std::vector<Vec3> G;
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (!(norm(n[v]) > 0.0)) continue;
    G.push_back(frame_unit_normal(left_frame_at(model.input, vertices[v]).matrix(), n[v], {1.0, 1.0, 1.0}));
  }
  if (G.empty()) throw Error(ErrorCode::DegenerateGeometry, "gauss_variance: patch has no usable vertices");
  Vec3 mean;
  for (const Vec3& g : G) mean += g;
  mean = (1.0 / static_cast<double>(G.size())) * mean;
  double var = 0.0;
  for (const Vec3& g : G) var += dot(g - mean, g - mean);
  return var / static_cast<double>(G.size());
}

}  // namespace lglab
