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

// Triangulated immersed spheres and their invariant Gauss maps.

#pragma once

#include <array>
#include <filesystem>
#include <span>
#include <vector>

#include "lglab/group.hpp"

namespace lglab {

using Face = std::array<int, 3>;

// Faces below this coordinate area are rejected as degenerate.
inline constexpr double kMinFaceArea = 1e-14;

// A closed, consistently oriented triangulated sphere (counterclockwise faces
// seen from outside). Construction validates the topology; an instance is
// always a valid sphere mesh, although its image may self-intersect.
class SphereMesh {
 public:
  // Throws NonManifold, WrongTopology, DegenerateGeometry or InvalidArgument.
  SphereMesh(std::vector<GroupPoint> vertices, std::vector<Face> faces);

  const std::vector<GroupPoint>& vertices() const { return vertices_; }
  const std::vector<Face>& faces() const { return faces_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t face_count() const { return faces_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  int euler_characteristic() const {
    return static_cast<int>(vertices_.size()) - static_cast<int>(edge_count_) + static_cast<int>(faces_.size());
  }

  // Neighbors of v in counterclockwise order around the outward normal.
  std::span<const int> ring(int v) const;
  // Faces incident to v.
  std::span<const int> vertex_faces(int v) const;
  // The three faces sharing an edge with face f (opposite vertex 0, 1, 2).
  const std::array<int, 3>& face_neighbors(int f) const { return face_adj_[static_cast<std::size_t>(f)]; }

  // Coordinate area vector (half the cross product) of face f.
  Vec3 face_area_vector(int f) const;
  double mean_edge_length() const;

  SphereMesh with_vertices(std::vector<GroupPoint> vertices) const;
  // Same connectivity, every face reversed.
  SphereMesh flipped() const;
  // Vertices mapped by g -> a * g in the group with matrix A.
  SphereMesh left_translated(const Mat2& A, const GroupPoint& a) const;

 private:
  void build_topology();

  std::vector<GroupPoint> vertices_;
  std::vector<Face> faces_;
  std::size_t edge_count_ = 0;
  std::vector<int> ring_offsets_;
  std::vector<int> rings_;
  std::vector<int> vf_offsets_;
  std::vector<int> vf_;
  std::vector<std::array<int, 3>> face_adj_;
};

// Icosphere of coordinate radius r about center with 20 * 4^level faces. The
// base icosahedron is turned by a fixed generic rotation so that no two
// vertices share a coordinate height.
SphereMesh make_round_sphere(const GroupPoint& center, double r, int level);

// Negative control: an elongated sphere whose top cap is folded back down
// through the body and out of the bottom cap. Valid sphere mesh, transversal
// self-intersections. level >= 2.
SphereMesh make_self_intersecting_sphere(int level);

// ---------------------------------------------------------------------------
// Gauss maps
// ---------------------------------------------------------------------------

enum class InvariantFrame { Left, Right };

struct GaussOptions {
  InvariantFrame frame = InvariantFrame::Left;
  // Positive weights w: the frame {w_i E_i} is declared orthonormal. Any
  // choice is another left invariant metric.
  Vec3 frameScale{1.0, 1.0, 1.0};
};

struct GaussData {
  std::vector<Vec3> normal;    // unit normal, coordinate components
  std::vector<Vec3> gauss;     // unit normal, frame components (a point of S^2)
  std::vector<int> faceSign;   // orientation of each spherical Gauss triangle
  std::vector<double> faceJacobian;  // signed spherical area / coordinate area
  double totalArea = 0.0;      // sum of signed spherical areas
  int degree = 0;
  double minAbsJacobian = 0.0;
};

// Outward unit normal at v in frame components. Throws DegenerateGeometry.
Vec3 vertex_normal(const LieGroupModel& model, const SphereMesh& mesh, int v, const GaussOptions& opts = {});

GaussData left_gauss_map(const LieGroupModel& model, const SphereMesh& mesh, Vec3 frameScale = {1.0, 1.0, 1.0});
GaussData right_gauss_map(const LieGroupModel& model, const SphereMesh& mesh);
GaussData gauss_map(const LieGroupModel& model, const SphereMesh& mesh, const GaussOptions& opts);

inline constexpr double kDefaultJacobianTolerance = 1e-8;

struct DiffeoCheck {
  bool diffeo = false;
  int sign = 0;                      // common face sign when diffeo
  std::vector<int> offendingFaces;   // minority-sign or near-singular faces
  std::string reason;
};

DiffeoCheck is_gauss_diffeo(const GaussData& gd, double tol = kDefaultJacobianTolerance);

// Mean squared deviation of the left Gauss values of an open triangle patch
// from their mean. Zero for patches inside a left coset of a 2D subgroup.
double gauss_variance(const LieGroupModel& model, std::span<const GroupPoint> vertices, std::span<const Face> faces);
inline constexpr double kConstantGaussTolerance = 1e-12;

// ---------------------------------------------------------------------------
// Wavefront OBJ subset: "v x y z" and "f i j k" (1-based).
// ---------------------------------------------------------------------------

SphereMesh load_mesh(const std::filesystem::path& path);
SphereMesh parse_obj(std::string_view text);
void save_mesh(const SphereMesh& mesh, const std::filesystem::path& path);
std::string to_obj(const SphereMesh& mesh);

}  // namespace lglab
