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

// Embeddedness checks on triangulated spheres.
//
// All routines that talk about fibers, heights or quotient points expect the
// mesh in open book coordinates (working matrix with zero (2,1) entry), where
// the binding cosets are the lines {(t, y, z)} and the plane cosets are the
// horizontal planes. full_report performs that change of coordinates.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lglab/openbook.hpp"
#include "lglab/surface.hpp"

namespace lglab {

// Deterministic perturbations: at most this many retries, each moving the
// sample by at most kJitterMagnitude.
inline constexpr int kJitterBudget = 8;
inline constexpr double kJitterMagnitude = 1e-6;
// A fiber within this angle (radians) of a triangle plane is not transversal.
inline constexpr double kTransversalAngle = 1e-6;

// ---------------------------------------------------------------------------
// Height function
// ---------------------------------------------------------------------------

struct CriticalPoints {
  int minima = 0;
  int maxima = 0;
  int saddles = 0;              // counted with multiplicity
  std::vector<int> indices;     // 0 per minimum, 1 per saddle, 2 per maximum
  std::vector<int> vertices;    // critical vertices, ascending id
  double z0 = 0.0;
  double z1 = 0.0;
  int p0 = -1;                  // vertex attaining z0
  int p1 = -1;                  // vertex attaining z1
  int count() const { return minima + maxima + saddles; }
};

// Discrete critical points of the height z. Vertices of equal height are
// ordered by a deterministic jitter; throws DegenerateHeight when the budget
// runs out.
CriticalPoints critical_points_of_height(const SphereMesh& mesh, std::uint64_t seed = 0);

struct LevelCurveSet {
  double z = 0.0;
  std::vector<std::vector<Vec3>> polylines;  // closed loops, first point not repeated
  bool needsResample = false;                // z equals a vertex height
  int components() const { return static_cast<int>(polylines.size()); }
};

// Loops of mesh cut by the plane at height z, counted on the mesh (preimages).
LevelCurveSet level_curves(const SphereMesh& mesh, double z);

// ---------------------------------------------------------------------------
// Binding fibers
// ---------------------------------------------------------------------------

struct FiberHit {
  int face = -1;
  double x = 0.0;
  bool transversal = false;
};

struct FiberHits {
  Fiber requested;
  Fiber used;            // after jitter
  std::vector<FiberHit> hits;  // ascending x
  int attempts = 1;
  bool exhausted = false;  // every attempt landed on an edge or vertex
  int count() const { return static_cast<int>(hits.size()); }
  bool all_transversal() const;
};

// Spatial index over the mesh projected to the quotient plane.
class FiberLocator {
 public:
  explicit FiberLocator(const SphereMesh& mesh);
  FiberHits hits(const Fiber& fiber, std::uint64_t seed = 0) const;

 private:
  enum class Probe { Ok, Resample };
  Probe probe(const Fiber& f, std::vector<FiberHit>& out) const;

  const SphereMesh* mesh_;
  double y0_ = 0.0, z0_ = 0.0, cell_ = 1.0;
  int ny_ = 1, nz_ = 1;
  std::vector<std::vector<int>> buckets_;
  std::vector<Vec3> faceNormals_;
  double areaTol_ = 0.0;
};

FiberHits fiber_hits(const SphereMesh& mesh, const Fiber& fiber, std::uint64_t seed = 0);

struct BigraphResult {
  bool ok = false;
  bool vacuous = false;          // Gauss map not a diffeomorphism
  int grid = 0;
  int interiorSamples = 0;
  int maxHits = 0;
  std::map<int, int> histogram;  // hit count -> interior samples
  std::array<int, 2> sheetSizes{0, 0};
  bool sheetsConnected = false;
  int exhaustedSamples = 0;
  std::vector<Fiber> violations;
};

BigraphResult bigraph_check(const SphereMesh& mesh, int samples, bool gaussDiffeo = true, std::uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Embeddedness
// ---------------------------------------------------------------------------

// Pairs (a < b) of faces whose images intersect. Faces sharing an edge are
// never reported; faces sharing one vertex are reported only if they meet
// away from it.
std::vector<std::pair<int, int>> self_intersections(const SphereMesh& mesh);

struct PoincareHopfResult {
  int sum = 0;
  std::vector<std::pair<int, int>> zeros;  // (face, index)
  bool vacuous = false;                    // the central fiber misses the mesh
  int fiberHits = 0;
  bool transversal = false;
  QuotientPoint center;                    // after jitter
  bool exhausted = false;
};

// Index sum of the tangential part of the angular field about centralFiber.
PoincareHopfResult poincare_hopf_index_sum(const SphereMesh& mesh, const Fiber& centralFiber, std::uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Report
// ---------------------------------------------------------------------------

struct VerifyConfig {
  int zSamples = 32;
  int fiberGrid = 64;
  double jacobianTol = kDefaultJacobianTolerance;
  std::uint64_t seed = 42;
};

enum class Verdict { Embedded, NotEmbedded, Inconclusive };
const char* verdict_name(Verdict v);

struct LevelSample {
  double z = 0.0;
  int components = 0;
};

struct VerificationReport {
  LieGroupModel group;
  VerifyConfig config;

  // Gauss map
  int degree = 0;
  double minAbsJacobian = 0.0;
  bool gaussDiffeo = false;
  std::string gaussReason;
  int offendingFaces = 0;

  // Open book checks
  bool openBookRan = false;
  std::string openBookSkipReason;
  Mat2 bookMatrix;
  CriticalPoints morse;
  std::vector<LevelSample> levelCurves;
  bool levelCurveConnected = false;
  BigraphResult bigraph;
  PoincareHopfResult poincareHopf;

  std::vector<std::pair<int, int>> selfIntersectionPairs;
  Verdict embeddedVerdict = Verdict::Inconclusive;

  // Implications that must hold when the Gauss map is a diffeomorphism and the
  // group admits an open book. Any entry here is a toolkit failure.
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  bool consistent() const { return failures.empty(); }
};

VerificationReport full_report(const LieGroupModel& model, const SphereMesh& mesh, const VerifyConfig& config = {});

std::string report_to_json(const VerificationReport& report);

}  // namespace lglab
