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

#include "lglab/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

#include "lglab/error.hpp"
#include "lglab/predicates.hpp"

namespace lglab {

namespace {

// Deterministic offset in [-1, 1]^2 for a given seed, sample and attempt.
std::pair<double, double> jitter_offset(std::uint64_t seed, double a, double b, int attempt) {
  const auto ua = std::bit_cast<std::uint64_t>(a);
  const auto ub = std::bit_cast<std::uint64_t>(b);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(ua), static_cast<std::uint32_t>(ua >> 32),
                    static_cast<std::uint32_t>(ub), static_cast<std::uint32_t>(ub >> 32),
                    static_cast<std::uint32_t>(attempt)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const double dx = dist(rng);
  const double dy = dist(rng);
  return {dx, dy};
}

std::uint64_t undirected_key(int a, int b) {
  const auto lo = static_cast<std::uint64_t>(std::min(a, b));
  const auto hi = static_cast<std::uint64_t>(std::max(a, b));
  return (lo << 32) | hi;
}

const Vec3& vtx(const SphereMesh& mesh, int v) { return mesh.vertices()[static_cast<std::size_t>(v)]; }

}  // namespace

// ---------------------------------------------------------------------------
// Height function
// ---------------------------------------------------------------------------

CriticalPoints critical_points_of_height(const SphereMesh& mesh, std::uint64_t seed) {
  const int n = static_cast<int>(mesh.vertex_count());
  CriticalPoints cp;
  cp.z0 = std::numeric_limits<double>::infinity();
  cp.z1 = -std::numeric_limits<double>::infinity();
  for (int v = 0; v < n; ++v) {
    const double z = vtx(mesh, v).z;
    if (z < cp.z0) { cp.z0 = z; cp.p0 = v; }
    if (z > cp.z1) { cp.z1 = z; cp.p1 = v; }
  }

  std::vector<double> h(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) h[static_cast<std::size_t>(v)] = vtx(mesh, v).z;
  auto has_tie = [&] {
    for (int v = 0; v < n; ++v)
      for (int w : mesh.ring(v))
        if (h[static_cast<std::size_t>(v)] == h[static_cast<std::size_t>(w)]) return true;
    return false;
  };
  const double amp = 1e-3 * kJitterMagnitude * std::fmax(1.0, cp.z1 - cp.z0);
  int attempt = 0;
  while (has_tie()) {
    if (++attempt > kJitterBudget)
      throw Error(ErrorCode::DegenerateHeight, "critical_points_of_height: equal neighbor heights persist after jitter");
    for (int v = 0; v < n; ++v)
      h[static_cast<std::size_t>(v)] = vtx(mesh, v).z + amp * jitter_offset(seed, static_cast<double>(v), 0.0, attempt).first;
  }

  for (int v = 0; v < n; ++v) {
    const auto ring = mesh.ring(v);
    const double hv = h[static_cast<std::size_t>(v)];
    int changes = 0;
    const std::size_t k = ring.size();
    for (std::size_t i = 0; i < k; ++i) {
      const bool up_a = h[static_cast<std::size_t>(ring[i])] > hv;
      const bool up_b = h[static_cast<std::size_t>(ring[(i + 1) % k])] > hv;
      if (up_a != up_b) ++changes;
    }
    if (changes == 0) {
      if (h[static_cast<std::size_t>(ring[0])] > hv) {
        ++cp.minima;
        cp.indices.push_back(0);
      } else {
        ++cp.maxima;
        cp.indices.push_back(2);
      }
      cp.vertices.push_back(v);
    } else if (changes >= 4) {
      const int mult = changes / 2 - 1;
      cp.saddles += mult;
      for (int i = 0; i < mult; ++i) cp.indices.push_back(1);
      cp.vertices.push_back(v);
    }
  }
  std::sort(cp.indices.begin(), cp.indices.end());
  return cp;
}

LevelCurveSet level_curves(const SphereMesh& mesh, double z) {
  LevelCurveSet out;
  out.z = z;
  for (const GroupPoint& p : mesh.vertices())
    if (p.z == z) {
      out.needsResample = true;
      return out;
    }

  // Nodes are crossing edges; each crossed face links two of them.
  std::unordered_map<std::uint64_t, int> node_of;
  std::vector<Vec3> node_point;
  std::vector<std::array<int, 2>> links;
  auto node = [&](int a, int b) {
    const auto key = undirected_key(a, b);
    auto it = node_of.find(key);
    if (it != node_of.end()) return it->second;
    const Vec3& pa = vtx(mesh, a);
    const Vec3& pb = vtx(mesh, b);
    const double t = (z - pa.z) / (pb.z - pa.z);
    node_point.push_back(pa + t * (pb - pa));
    links.push_back({-1, -1});
    const int id = static_cast<int>(node_point.size()) - 1;
    node_of.emplace(key, id);
    return id;
  };
  auto link = [&](int u, int w) {
    auto& lu = links[static_cast<std::size_t>(u)];
    (lu[0] < 0 ? lu[0] : lu[1]) = w;
    auto& lw = links[static_cast<std::size_t>(w)];
    (lw[0] < 0 ? lw[0] : lw[1]) = u;
  };

  for (const Face& t : mesh.faces()) {
    int crossing[2];
    int m = 0;
    for (int k = 0; k < 3; ++k) {
      const int a = t[static_cast<std::size_t>(k)];
      const int b = t[static_cast<std::size_t>((k + 1) % 3)];
      if ((vtx(mesh, a).z < z) != (vtx(mesh, b).z < z)) crossing[m++] = node(a, b);
    }
    if (m == 2) link(crossing[0], crossing[1]);
  }

  std::vector<char> seen(node_point.size(), 0);
  for (std::size_t s = 0; s < node_point.size(); ++s) {
    if (seen[s]) continue;
    std::vector<Vec3> loop;
    int prev = -1;
    int cur = static_cast<int>(s);
    while (!seen[static_cast<std::size_t>(cur)]) {
      seen[static_cast<std::size_t>(cur)] = 1;
      loop.push_back(node_point[static_cast<std::size_t>(cur)]);
      const auto& l = links[static_cast<std::size_t>(cur)];
      const int next = l[0] != prev ? l[0] : l[1];
      prev = cur;
      cur = next;
      if (cur < 0) break;
    }
    out.polylines.push_back(std::move(loop));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fibers
// ---------------------------------------------------------------------------

bool FiberHits::all_transversal() const {
  return std::all_of(hits.begin(), hits.end(), [](const FiberHit& h) { return h.transversal; });
}

FiberLocator::FiberLocator(const SphereMesh& mesh) : mesh_(&mesh) {
  double ymin = std::numeric_limits<double>::infinity(), ymax = -ymin;
  double zmin = ymin, zmax = -ymin;
  for (const GroupPoint& p : mesh.vertices()) {
    ymin = std::fmin(ymin, p.y);
    ymax = std::fmax(ymax, p.y);
    zmin = std::fmin(zmin, p.z);
    zmax = std::fmax(zmax, p.z);
  }
  const double L = mesh.mean_edge_length();
  areaTol_ = 1e-10 * L * L;
  const double extent = std::fmax(ymax - ymin, zmax - zmin);
  cell_ = std::fmax(2.0 * L, extent / 512.0);
  if (!(cell_ > 0.0)) cell_ = 1.0;
  y0_ = ymin;
  z0_ = zmin;
  ny_ = static_cast<int>(std::floor((ymax - ymin) / cell_)) + 1;
  nz_ = static_cast<int>(std::floor((zmax - zmin) / cell_)) + 1;
  buckets_.assign(static_cast<std::size_t>(ny_) * static_cast<std::size_t>(nz_), {});
  faceNormals_.resize(mesh.face_count());
  for (std::size_t f = 0; f < mesh.face_count(); ++f) {
    faceNormals_[f] = mesh.face_area_vector(static_cast<int>(f));
    const Face& t = mesh.faces()[f];
    double fy0 = std::numeric_limits<double>::infinity(), fy1 = -fy0, fz0 = fy0, fz1 = -fy0;
    for (int v : t) {
      fy0 = std::fmin(fy0, vtx(mesh, v).y);
      fy1 = std::fmax(fy1, vtx(mesh, v).y);
      fz0 = std::fmin(fz0, vtx(mesh, v).z);
      fz1 = std::fmax(fz1, vtx(mesh, v).z);
    }
    const int i0 = std::clamp(static_cast<int>(std::floor((fy0 - y0_) / cell_)), 0, ny_ - 1);
    const int i1 = std::clamp(static_cast<int>(std::floor((fy1 - y0_) / cell_)), 0, ny_ - 1);
    const int j0 = std::clamp(static_cast<int>(std::floor((fz0 - z0_) / cell_)), 0, nz_ - 1);
    const int j1 = std::clamp(static_cast<int>(std::floor((fz1 - z0_) / cell_)), 0, nz_ - 1);
    for (int i = i0; i <= i1; ++i)
      for (int j = j0; j <= j1; ++j)
        buckets_[static_cast<std::size_t>(i) * static_cast<std::size_t>(nz_) + static_cast<std::size_t>(j)].push_back(
            static_cast<int>(f));
  }
}

FiberLocator::Probe FiberLocator::probe(const Fiber& fb, std::vector<FiberHit>& out) const {
  out.clear();
  const double fi = std::floor((fb.y - y0_) / cell_);
  const double fj = std::floor((fb.z - z0_) / cell_);
  if (fi < -1.0 || fj < -1.0 || fi > ny_ || fj > nz_) return Probe::Ok;
  const int i = std::clamp(static_cast<int>(fi), 0, ny_ - 1);
  const int j = std::clamp(static_cast<int>(fj), 0, nz_ - 1);
  const SphereMesh& mesh = *mesh_;
  const double sin_tan = std::sin(kTransversalAngle);
  for (int f : buckets_[static_cast<std::size_t>(i) * static_cast<std::size_t>(nz_) + static_cast<std::size_t>(j)]) {
    const Face& t = mesh.faces()[static_cast<std::size_t>(f)];
    const Vec3& p0 = vtx(mesh, t[0]);
    const Vec3& p1 = vtx(mesh, t[1]);
    const Vec3& p2 = vtx(mesh, t[2]);
    const double d2 = (p1.y - p0.y) * (p2.z - p0.z) - (p1.z - p0.z) * (p2.y - p0.y);
    const double w0 = (p1.y - fb.y) * (p2.z - fb.z) - (p1.z - fb.z) * (p2.y - fb.y);
    const double w1 = (p2.y - fb.y) * (p0.z - fb.z) - (p2.z - fb.z) * (p0.y - fb.y);
    const double w2 = (p0.y - fb.y) * (p1.z - fb.z) - (p0.z - fb.z) * (p1.y - fb.y);
    const double s = d2 >= 0.0 ? 1.0 : -1.0;
    if (s * w0 < -areaTol_ || s * w1 < -areaTol_ || s * w2 < -areaTol_) continue;
    if (std::fabs(w0) <= areaTol_ || std::fabs(w1) <= areaTol_ || std::fabs(w2) <= areaTol_) return Probe::Resample;
    FiberHit h;
    h.face = f;
    h.x = (w0 * p0.x + w1 * p1.x + w2 * p2.x) / (w0 + w1 + w2);
    const Vec3& n = faceNormals_[static_cast<std::size_t>(f)];
    h.transversal = std::fabs(n.x) > sin_tan * norm(n);
    out.push_back(h);
  }
  std::sort(out.begin(), out.end(), [](const FiberHit& a, const FiberHit& b) {
    return a.x < b.x || (a.x == b.x && a.face < b.face);
  });
  return Probe::Ok;
}

FiberHits FiberLocator::hits(const Fiber& fiber, std::uint64_t seed) const {
  FiberHits out;
  out.requested = fiber;
  out.used = fiber;
  for (int attempt = 0; attempt <= kJitterBudget; ++attempt) {
    if (attempt > 0) {
      const auto [dy, dz] = jitter_offset(seed, fiber.y, fiber.z, attempt);
      out.used = {fiber.y + kJitterMagnitude * dy, fiber.z + kJitterMagnitude * dz};
    }
    out.attempts = attempt + 1;
    if (probe(out.used, out.hits) == Probe::Ok) return out;
  }
  out.hits.clear();
  out.exhausted = true;
  return out;
}

FiberHits fiber_hits(const SphereMesh& mesh, const Fiber& fiber, std::uint64_t seed) {
  return FiberLocator(mesh).hits(fiber, seed);
}

namespace {

double point_segment_distance(double py, double pz, double ay, double az, double by, double bz) {
  const double dy = by - ay, dz = bz - az;
  const double len2 = dy * dy + dz * dz;
  double t = len2 > 0.0 ? ((py - ay) * dy + (pz - az) * dz) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(py - (ay + t * dy), pz - (az + t * dz));
}

int count_components(const SphereMesh& mesh, const std::vector<char>& member) {
  std::vector<char> seen(member.size(), 0);
  int comps = 0;
  for (std::size_t f = 0; f < member.size(); ++f) {
    if (!member[f] || seen[f]) continue;
    ++comps;
    std::vector<int> stack{static_cast<int>(f)};
    seen[f] = 1;
    while (!stack.empty()) {
      const int g = stack.back();
      stack.pop_back();
      for (int h : mesh.face_neighbors(g))
        if (member[static_cast<std::size_t>(h)] && !seen[static_cast<std::size_t>(h)]) {
          seen[static_cast<std::size_t>(h)] = 1;
          stack.push_back(h);
        }
    }
  }
  return comps;
}

}  // namespace

BigraphResult bigraph_check(const SphereMesh& mesh, int samples, bool gaussDiffeo, std::uint64_t seed) {
  if (samples < 2) throw Error(ErrorCode::InvalidArgument, "bigraph_check: need at least 2 samples per axis");
  BigraphResult res;
  res.grid = samples;
  res.vacuous = !gaussDiffeo;

  const std::size_t nf = mesh.face_count();
  std::vector<double> nx(nf);
  for (std::size_t f = 0; f < nf; ++f) nx[f] = mesh.face_area_vector(static_cast<int>(f)).x;

  // Fold edges of the projection to the quotient plane.
  struct Seg {
    double ay, az, by, bz;
  };
  std::vector<Seg> silhouette;
  for (std::size_t f = 0; f < nf; ++f) {
    const Face& t = mesh.faces()[f];
    for (int k = 0; k < 3; ++k) {
      const int g = mesh.face_neighbors(static_cast<int>(f))[static_cast<std::size_t>((k + 2) % 3)];
      if (static_cast<std::size_t>(g) < f) continue;
      if (nx[f] * nx[static_cast<std::size_t>(g)] <= 0.0) {
        const Vec3& a = vtx(mesh, t[static_cast<std::size_t>(k)]);
        const Vec3& b = vtx(mesh, t[static_cast<std::size_t>((k + 1) % 3)]);
        silhouette.push_back({a.y, a.z, b.y, b.z});
      }
    }
  }

  double ymin = std::numeric_limits<double>::infinity(), ymax = -ymin, zmin = ymin, zmax = -ymin;
  for (const GroupPoint& p : mesh.vertices()) {
    ymin = std::fmin(ymin, p.y);
    ymax = std::fmax(ymax, p.y);
    zmin = std::fmin(zmin, p.z);
    zmax = std::fmax(zmax, p.z);
  }
  const double band = 2.0 * mesh.mean_edge_length();
  const FiberLocator locator(mesh);

  for (int i = 0; i < samples; ++i) {
    for (int j = 0; j < samples; ++j) {
      const double y = ymin + (i + 0.5) * (ymax - ymin) / samples;
      const double z = zmin + (j + 0.5) * (zmax - zmin) / samples;
      bool near_fold = false;
      for (const Seg& s : silhouette)
        if (point_segment_distance(y, z, s.ay, s.az, s.by, s.bz) < band) {
          near_fold = true;
          break;
        }
      if (near_fold) continue;
      const FiberHits fh = locator.hits({y, z}, seed);
      if (fh.exhausted) {
        ++res.exhaustedSamples;
        continue;
      }
      if (fh.hits.empty()) continue;  // outside the projected disk
      ++res.interiorSamples;
      const int count = fh.count();
      res.histogram[count] += 1;
      res.maxHits = std::max(res.maxHits, count);
      bool good = count == 2 && fh.all_transversal();
      if (good) {
        // Lower sheet faces -x, upper sheet faces +x.
        good = nx[static_cast<std::size_t>(fh.hits[0].face)] < 0.0 && nx[static_cast<std::size_t>(fh.hits[1].face)] > 0.0;
      }
      if (!good) res.violations.push_back(fh.used);
    }
  }

  std::vector<char> lower(nf), upper(nf);
  for (std::size_t f = 0; f < nf; ++f) {
    lower[f] = nx[f] < 0.0;
    upper[f] = nx[f] > 0.0;
    res.sheetSizes[0] += lower[f];
    res.sheetSizes[1] += upper[f];
  }
  res.sheetsConnected = count_components(mesh, lower) == 1 && count_components(mesh, upper) == 1;
  res.ok = res.violations.empty() && res.interiorSamples > 0 && res.sheetsConnected;
  return res;
}

// ---------------------------------------------------------------------------
// Self intersections
// ---------------------------------------------------------------------------

namespace {

struct Box {
  Vec3 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
          std::numeric_limits<double>::infinity()};
  Vec3 hi{-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
          -std::numeric_limits<double>::infinity()};

  void add(const Vec3& p) {
    for (int k = 0; k < 3; ++k) {
      lo[k] = std::fmin(lo[k], p[k]);
      hi[k] = std::fmax(hi[k], p[k]);
    }
  }
  void add(const Box& b) {
    add(b.lo);
    add(b.hi);
  }
  bool overlaps(const Box& b) const {
    for (int k = 0; k < 3; ++k)
      if (hi[k] < b.lo[k] || b.hi[k] < lo[k]) return false;
    return true;
  }
};

class FaceTree {
 public:
  explicit FaceTree(const SphereMesh& mesh) {
    const std::size_t nf = mesh.face_count();
    boxes_.resize(nf);
    centers_.resize(nf);
    order_.resize(nf);
    for (std::size_t f = 0; f < nf; ++f) {
      for (int v : mesh.faces()[f]) boxes_[f].add(vtx(mesh, v));
      centers_[f] = 0.5 * (boxes_[f].lo + boxes_[f].hi);
      order_[f] = static_cast<int>(f);
    }
    if (nf) build(0, static_cast<int>(nf));
  }

  template <class Fn>
  void query(const Box& b, Fn&& fn) const {
    if (nodes_.empty()) return;
    std::vector<int> stack{0};
    while (!stack.empty()) {
      const Node& n = nodes_[static_cast<std::size_t>(stack.back())];
      stack.pop_back();
      if (!n.box.overlaps(b)) continue;
      if (n.left < 0) {
        for (int i = n.begin; i < n.end; ++i) {
          const int f = order_[static_cast<std::size_t>(i)];
          if (boxes_[static_cast<std::size_t>(f)].overlaps(b)) fn(f);
        }
      } else {
        stack.push_back(n.left);
        stack.push_back(n.right);
      }
    }
  }

  const Box& box(int f) const { return boxes_[static_cast<std::size_t>(f)]; }

 private:
  struct Node {
    Box box;
    int begin = 0, end = 0;
    int left = -1, right = -1;
  };

  int build(int begin, int end) {
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back({});
    Box box, cbox;
    for (int i = begin; i < end; ++i) {
      const int f = order_[static_cast<std::size_t>(i)];
      box.add(boxes_[static_cast<std::size_t>(f)]);
      cbox.add(centers_[static_cast<std::size_t>(f)]);
    }
    nodes_[static_cast<std::size_t>(id)].box = box;
    nodes_[static_cast<std::size_t>(id)].begin = begin;
    nodes_[static_cast<std::size_t>(id)].end = end;
    if (end - begin <= 4) return id;
    int axis = 0;
    for (int k = 1; k < 3; ++k)
      if (cbox.hi[k] - cbox.lo[k] > cbox.hi[axis] - cbox.lo[axis]) axis = k;
    const int mid = (begin + end) / 2;
    std::nth_element(order_.begin() + begin, order_.begin() + mid, order_.begin() + end, [&](int a, int b) {
      const double ca = centers_[static_cast<std::size_t>(a)][axis];
      const double cb = centers_[static_cast<std::size_t>(b)][axis];
      return ca < cb || (ca == cb && a < b);
    });
    const int l = build(begin, mid);
    const int r = build(mid, end);
    nodes_[static_cast<std::size_t>(id)].left = l;
    nodes_[static_cast<std::size_t>(id)].right = r;
    return id;
  }

  std::vector<Box> boxes_;
  std::vector<Vec3> centers_;
  std::vector<int> order_;
  std::vector<Node> nodes_;
};

}  // namespace

std::vector<std::pair<int, int>> self_intersections(const SphereMesh& mesh) {
  const FaceTree tree(mesh);
  std::vector<std::pair<int, int>> pairs;
  const auto& faces = mesh.faces();
  const int nf = static_cast<int>(mesh.face_count());
  for (int f = 0; f < nf; ++f) {
    const Face& a = faces[static_cast<std::size_t>(f)];
    std::vector<int> candidates;
    tree.query(tree.box(f), [&](int g) {
      if (g > f) candidates.push_back(g);
    });
    std::sort(candidates.begin(), candidates.end());
    for (int g : candidates) {
      const Face& b = faces[static_cast<std::size_t>(g)];
      int shared = 0;
      int sa = -1, sb = -1;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (a[static_cast<std::size_t>(i)] == b[static_cast<std::size_t>(j)]) {
            ++shared;
            sa = i;
            sb = j;
          }
      bool hit = false;
      if (shared >= 2) {
        continue;
      } else if (shared == 1) {
        // Only the edges opposite the common vertex can meet the other face elsewhere.
        const Vec3& a1 = vtx(mesh, a[static_cast<std::size_t>((sa + 1) % 3)]);
        const Vec3& a2 = vtx(mesh, a[static_cast<std::size_t>((sa + 2) % 3)]);
        const Vec3& b1 = vtx(mesh, b[static_cast<std::size_t>((sb + 1) % 3)]);
        const Vec3& b2 = vtx(mesh, b[static_cast<std::size_t>((sb + 2) % 3)]);
        hit = segment_intersects_triangle(a1, a2, vtx(mesh, b[0]), vtx(mesh, b[1]), vtx(mesh, b[2])) ||
              segment_intersects_triangle(b1, b2, vtx(mesh, a[0]), vtx(mesh, a[1]), vtx(mesh, a[2]));
      } else {
        hit = triangles_intersect(vtx(mesh, a[0]), vtx(mesh, a[1]), vtx(mesh, a[2]), vtx(mesh, b[0]), vtx(mesh, b[1]),
                                  vtx(mesh, b[2]));
      }
      if (hit) pairs.emplace_back(f, g);
    }
  }
  return pairs;
}

// ---------------------------------------------------------------------------
// Poincare-Hopf
// ---------------------------------------------------------------------------

namespace {

// Minimal rotation taking unit a to unit b, applied to v.
Vec3 transport(const Vec3& a, const Vec3& b, const Vec3& v) {
  const Vec3 k = cross(a, b);
  const double c = dot(a, b);
  return c * v + cross(k, v) + (dot(k, v) / (1.0 + c)) * k;
}

double signed_angle(const Vec3& from, const Vec3& to, const Vec3& axis) {
  return std::atan2(dot(axis, cross(from, to)), dot(from, to));
}

}  // namespace

PoincareHopfResult poincare_hopf_index_sum(const SphereMesh& mesh, const Fiber& centralFiber, std::uint64_t seed) {
  PoincareHopfResult res;
  const int nv = static_cast<int>(mesh.vertex_count());
  const FiberLocator locator(mesh);
  const double L = mesh.mean_edge_length();

  std::vector<Vec3> n(static_cast<std::size_t>(nv));
  for (int v = 0; v < nv; ++v) {
    Vec3 s;
    for (int f : mesh.vertex_faces(v)) s += mesh.face_area_vector(f);
    n[static_cast<std::size_t>(v)] = normalized(s);
  }

  std::vector<Vec3> u(static_cast<std::size_t>(nv));
  for (int attempt = 0; attempt <= kJitterBudget; ++attempt) {
    QuotientPoint c{centralFiber.y, centralFiber.z};
    if (attempt > 0) {
      const auto [dy, dz] = jitter_offset(seed ^ 0x5048u, centralFiber.y, centralFiber.z, attempt);
      c = {c.y + kJitterMagnitude * dy, c.z + kJitterMagnitude * dz};
    }
    const FiberHits fh = locator.hits({c.y, c.z}, seed);
    if (fh.exhausted || fh.attempts > 1) continue;  // landed on an edge: move the center
    res.center = c;
    res.fiberHits = fh.count();
    res.transversal = fh.all_transversal();
    if (fh.hits.empty()) {
      res.vacuous = true;
      res.exhausted = false;
      res.sum = 0;
      res.zeros.clear();
      return res;
    }
    bool usable = true;
    for (int v = 0; v < nv && usable; ++v) {
      const GroupPoint& p = vtx(mesh, v);
      if (std::hypot(p.y - c.y, p.z - c.z) <= 1e-9 * L) {
        usable = false;
        break;
      }
      const Vec3 V = angular_field_at(p, c);
      const Vec3& nn = n[static_cast<std::size_t>(v)];
      const Vec3 t = V - dot(V, nn) * nn;
      if (!(norm(t) > 1e-9)) usable = false;
      else u[static_cast<std::size_t>(v)] = normalized(t);
    }
    if (!usable) continue;

    res.zeros.clear();
    int sum = 0;
    for (std::size_t f = 0; f < mesh.face_count(); ++f) {
      const Face& t = mesh.faces()[f];
      double winding = 0.0;
      Vec3 carried = u[static_cast<std::size_t>(t[0])];
      for (int k = 0; k < 3; ++k) {
        const auto i = static_cast<std::size_t>(t[static_cast<std::size_t>(k)]);
        const auto j = static_cast<std::size_t>(t[static_cast<std::size_t>((k + 1) % 3)]);
        winding += signed_angle(transport(n[i], n[j], u[i]), u[j], n[j]);
        carried = transport(n[i], n[j], carried);
      }
      const auto i0 = static_cast<std::size_t>(t[0]);
      const double holonomy = signed_angle(u[i0], carried, n[i0]);
      const int index = static_cast<int>(std::lround((winding + holonomy) / (2.0 * std::numbers::pi)));
      if (index != 0) {
        res.zeros.emplace_back(static_cast<int>(f), index);
        sum += index;
      }
    }
    res.sum = sum;
    res.exhausted = false;
    return res;
  }
  res.exhausted = true;
  return res;
}

// ---------------------------------------------------------------------------
// Orchestration
// ---------------------------------------------------------------------------

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Embedded: return "Embedded";
    case Verdict::NotEmbedded: return "NotEmbedded";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

VerificationReport full_report(const LieGroupModel& model, const SphereMesh& mesh, const VerifyConfig& config) {
  if (config.zSamples < 1 || config.fiberGrid < 2)
    throw Error(ErrorCode::InvalidArgument, "full_report: need zSamples >= 1 and fiberGrid >= 2");
  VerificationReport rep;
  rep.group = model;
  rep.config = config;

  const GaussData gd = left_gauss_map(model, mesh);
  const DiffeoCheck dc = is_gauss_diffeo(gd, config.jacobianTol);
  rep.degree = gd.degree;
  rep.minAbsJacobian = gd.minAbsJacobian;
  rep.gaussDiffeo = dc.diffeo;
  rep.gaussReason = dc.reason;
  rep.offendingFaces = static_cast<int>(dc.offendingFaces.size());

  rep.selfIntersectionPairs = self_intersections(mesh);
  bool exhausted = false;

  if (!model.admitsOpenBook) {
    rep.openBookSkipReason = "group " + model.label.to_string() + " admits no algebraic open book decomposition";
  } else {
    rep.openBookRan = true;
    const OpenBookModel book = make_open_book(model);
    rep.bookMatrix = book.group.A;
    std::vector<GroupPoint> moved;
    moved.reserve(mesh.vertex_count());
    for (const GroupPoint& g : mesh.vertices()) moved.push_back(book.to_book(g));
    const SphereMesh bm = mesh.with_vertices(std::move(moved));

    try {
      rep.morse = critical_points_of_height(bm, config.seed);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateHeight) throw;
      rep.notes.push_back(e.what());
      exhausted = true;
    }

    const double band = 2.0 * bm.mean_edge_length();
    const double lo = rep.morse.z0 + band;
    const double hi = rep.morse.z1 - band;
    rep.levelCurveConnected = true;
    if (!(hi > lo)) {
      rep.notes.push_back("height range too small for level sampling at this resolution");
    } else {
      for (int i = 0; i < config.zSamples; ++i) {
        const double z = lo + (i + 0.5) * (hi - lo) / config.zSamples;
        LevelCurveSet lc = level_curves(bm, z);
        for (int attempt = 1; lc.needsResample && attempt <= kJitterBudget; ++attempt)
          lc = level_curves(bm, z + kJitterMagnitude * jitter_offset(config.seed, z, 0.0, attempt).first);
        if (lc.needsResample) {
          exhausted = true;
          rep.notes.push_back("level sample at a vertex height after jitter budget");
          continue;
        }
        rep.levelCurves.push_back({lc.z, lc.components()});
        if (lc.components() != 1) rep.levelCurveConnected = false;
      }
    }

    rep.bigraph = bigraph_check(bm, config.fiberGrid, dc.diffeo, config.seed);
    if (rep.bigraph.exhaustedSamples > 0) {
      exhausted = true;
      rep.notes.push_back(std::to_string(rep.bigraph.exhaustedSamples) + " fiber sample(s) exhausted the jitter budget");
    }

    Fiber center;
    for (const GroupPoint& g : bm.vertices()) {
      center.y += g.y;
      center.z += g.z;
    }
    center.y /= static_cast<double>(bm.vertex_count());
    center.z /= static_cast<double>(bm.vertex_count());
    rep.poincareHopf = poincare_hopf_index_sum(bm, center, config.seed);
    if (rep.poincareHopf.exhausted) {
      exhausted = true;
      rep.notes.push_back("Poincare-Hopf center exhausted the jitter budget");
    }
  }

  if (!rep.selfIntersectionPairs.empty())
    rep.embeddedVerdict = Verdict::NotEmbedded;
  else
    rep.embeddedVerdict = exhausted ? Verdict::Inconclusive : Verdict::Embedded;

  if (rep.gaussDiffeo && model.admitsOpenBook) {
    auto& fail = rep.failures;
    if (rep.morse.count() != 2 || rep.morse.minima != 1 || rep.morse.maxima != 1)
      fail.push_back("height function has " + std::to_string(rep.morse.count()) + " critical points, expected a minimum and a maximum");
    if (!rep.levelCurveConnected) fail.push_back("a level curve has more than one component");
    if (rep.bigraph.maxHits > 2) fail.push_back("a binding fiber meets the sphere in more than two points");
    if (!rep.bigraph.ok) fail.push_back("bigraph structure over the projected disk not found");
    const auto& ph = rep.poincareHopf;
    if (!ph.exhausted && !ph.vacuous) {
      if (ph.fiberHits > 2) fail.push_back("central fiber meets the sphere in more than two points");
      if (ph.fiberHits == 2 && !ph.transversal) fail.push_back("central fiber with two hits is not transversal");
      if (ph.fiberHits == 2 && ph.transversal) {
        if (ph.sum != 2) fail.push_back("Poincare-Hopf index sum " + std::to_string(ph.sum) + ", expected 2");
        for (const auto& [face, index] : ph.zeros)
          if (index != 1) fail.push_back("angular field zero of index " + std::to_string(index) + " at face " + std::to_string(face));
      }
    }
    if (!rep.selfIntersectionPairs.empty())
      fail.push_back("sphere with diffeomorphic Gauss map in an open book group is not embedded");
  }
  return rep;
}

namespace {

nlohmann::ordered_json matrix_json(const Mat2& m) { return {{m.a, m.b}, {m.c, m.d}}; }

const char* trace_class_name(TraceClass t) {
  return t == TraceClass::Unimodular ? "unimodular" : "non-unimodular";
}

}  // namespace

std::string report_to_json(const VerificationReport& r) {
  using nlohmann::ordered_json;
  const LieGroupModel& g = r.group;
  ordered_json j;
  j["group"] = {{"label", g.label.to_string()},
                {"traceClass", trace_class_name(g.traceClass)},
                {"matrix", matrix_json(g.input)},
                {"D", g.D},
                {"admitsOpenBook", g.admitsOpenBook}};
  j["gauss"] = {{"degree", r.degree},
                {"minAbsJacobian", r.minAbsJacobian},
                {"diffeo", r.gaussDiffeo},
                {"offendingFaces", r.offendingFaces},
                {"reason", r.gaussReason}};
  if (r.openBookRan) {
    j["openBook"] = {{"ran", true}, {"matrix", matrix_json(r.bookMatrix)}};
    j["morse"] = {{"count", r.morse.count()},
                  {"indices", r.morse.indices},
                  {"z0", r.morse.z0},
                  {"z1", r.morse.z1},
                  {"p0", r.morse.p0},
                  {"p1", r.morse.p1}};
    ordered_json levels = ordered_json::array();
    for (const LevelSample& s : r.levelCurves) levels.push_back({{"z", s.z}, {"components", s.components}});
    j["levelCurves"] = levels;
    ordered_json hist = ordered_json::object();
    for (const auto& [k, v] : r.bigraph.histogram) hist[std::to_string(k)] = v;
    j["fibers"] = {{"grid", r.bigraph.grid},
                   {"maxHits", r.bigraph.maxHits},
                   {"interiorSamples", r.bigraph.interiorSamples},
                   {"histogram", hist}};
    j["bigraph"] = {{"ok", r.bigraph.ok},
                    {"sheetSizes", r.bigraph.sheetSizes},
                    {"sheetsConnected", r.bigraph.sheetsConnected}};
  } else {
    j["openBook"] = {{"ran", false}, {"reason", r.openBookSkipReason}};
    j["morse"] = nullptr;
    j["levelCurves"] = nullptr;
    j["fibers"] = nullptr;
    j["bigraph"] = nullptr;
  }
  ordered_json pairs = ordered_json::array();
  for (const auto& [a, b] : r.selfIntersectionPairs) pairs.push_back({a, b});
  j["selfIntersections"] = pairs;
  if (r.openBookRan) {
    const PoincareHopfResult& ph = r.poincareHopf;
    ordered_json zeros = ordered_json::array();
    for (const auto& [f, idx] : ph.zeros) zeros.push_back({{"face", f}, {"index", idx}});
    j["poincareHopf"] = {{"sum", ph.sum},
                         {"vacuous", ph.vacuous},
                         {"fiberHits", ph.fiberHits},
                         {"transversal", ph.transversal},
                         {"center", {ph.center.y, ph.center.z}},
                         {"zeros", zeros}};
  } else {
    j["poincareHopf"] = nullptr;
  }
  j["verdict"] = verdict_name(r.embeddedVerdict);
  j["consistent"] = r.consistent();
  j["failures"] = r.failures;
  j["notes"] = r.notes;
  j["seed"] = r.config.seed;
  j["config"] = {{"zSamples", r.config.zSamples},
                 {"fiberGrid", r.config.fiberGrid},
                 {"jacobianTol", r.config.jacobianTol}};
  return j.dump(2) + "\n";
}

}  // namespace lglab
