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

#include "lglab/predicates.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>

namespace lglab {

namespace {

constexpr double kEps = 0x1p-53;  // half an ulp of 1
constexpr double kO3dBound = (7.0 + 56.0 * kEps) * kEps;
constexpr double kO2dBound = (3.0 + 16.0 * kEps) * kEps;

int sign_of(const mpq_class& q) { return sgn(q); }

int orient3d_exact(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  const mpq_class ux = mpq_class(b.x) - a.x, uy = mpq_class(b.y) - a.y, uz = mpq_class(b.z) - a.z;
  const mpq_class vx = mpq_class(c.x) - a.x, vy = mpq_class(c.y) - a.y, vz = mpq_class(c.z) - a.z;
  const mpq_class wx = mpq_class(d.x) - a.x, wy = mpq_class(d.y) - a.y, wz = mpq_class(d.z) - a.z;
  const mpq_class det = ux * (vy * wz - vz * wy) - uy * (vx * wz - vz * wx) + uz * (vx * wy - vy * wx);
  return sign_of(det);
}

int orient2d_exact(double ax, double ay, double bx, double by, double cx, double cy) {
  const mpq_class det = (mpq_class(bx) - ax) * (mpq_class(cy) - ay) - (mpq_class(by) - ay) * (mpq_class(cx) - ax);
  return sign_of(det);
}

int sgn_d(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

// Which coordinate to drop when projecting the plane of (a, b, c) to 2D.
int drop_axis(const Vec3& a, const Vec3& b, const Vec3& c) {
  const Vec3 n = cross(b - a, c - a);
  const double ax = std::fabs(n.x), ay = std::fabs(n.y), az = std::fabs(n.z);
  if (ax >= ay && ax >= az) return 0;
  return ay >= az ? 1 : 2;
}

struct P2 {
  double x, y;
};

P2 project(const Vec3& p, int drop) {
  if (drop == 0) return {p.y, p.z};
  if (drop == 1) return {p.z, p.x};
  return {p.x, p.y};
}

int o2(const P2& a, const P2& b, const P2& c) { return orient2d(a.x, a.y, b.x, b.y, c.x, c.y); }

bool on_segment_collinear(const P2& a, const P2& b, const P2& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool segments_intersect_2d(const P2& a, const P2& b, const P2& c, const P2& d) {
  const int d1 = o2(c, d, a), d2 = o2(c, d, b), d3 = o2(a, b, c), d4 = o2(a, b, d);
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && on_segment_collinear(c, d, a)) return true;
  if (d2 == 0 && on_segment_collinear(c, d, b)) return true;
  if (d3 == 0 && on_segment_collinear(a, b, c)) return true;
  if (d4 == 0 && on_segment_collinear(a, b, d)) return true;
  return false;
}

bool point_in_triangle_2d(const P2& p, const P2& a, const P2& b, const P2& c) {
  const int s1 = o2(a, b, p), s2 = o2(b, c, p), s3 = o2(c, a, p);
  const bool has_neg = s1 < 0 || s2 < 0 || s3 < 0;
  const bool has_pos = s1 > 0 || s2 > 0 || s3 > 0;
  return !(has_neg && has_pos);
}

bool segment_triangle_coplanar(const Vec3& s0, const Vec3& s1, const Vec3& t0, const Vec3& t1, const Vec3& t2) {
  const int drop = drop_axis(t0, t1, t2);
  const P2 a = project(s0, drop), b = project(s1, drop);
  const P2 p = project(t0, drop), q = project(t1, drop), r = project(t2, drop);
  if (point_in_triangle_2d(a, p, q, r) || point_in_triangle_2d(b, p, q, r)) return true;
  return segments_intersect_2d(a, b, p, q) || segments_intersect_2d(a, b, q, r) || segments_intersect_2d(a, b, r, p);
}

}  // namespace

int orient3d(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  const double ux = b.x - a.x, uy = b.y - a.y, uz = b.z - a.z;
  const double vx = c.x - a.x, vy = c.y - a.y, vz = c.z - a.z;
  const double wx = d.x - a.x, wy = d.y - a.y, wz = d.z - a.z;
  const double m1 = vy * wz, m2 = vz * wy;
  const double m3 = vx * wz, m4 = vz * wx;
  const double m5 = vx * wy, m6 = vy * wx;
  const double det = ux * (m1 - m2) - uy * (m3 - m4) + uz * (m5 - m6);
  const double permanent = (std::fabs(m1) + std::fabs(m2)) * std::fabs(ux) +
                           (std::fabs(m3) + std::fabs(m4)) * std::fabs(uy) +
                           (std::fabs(m5) + std::fabs(m6)) * std::fabs(uz);
  if (std::fabs(det) > kO3dBound * permanent) return sgn_d(det);
  return orient3d_exact(a, b, c, d);
}

int orient2d(double ax, double ay, double bx, double by, double cx, double cy) {
  const double l = (bx - ax) * (cy - ay);
  const double r = (by - ay) * (cx - ax);
  const double det = l - r;
  if (std::fabs(det) > kO2dBound * (std::fabs(l) + std::fabs(r))) return sgn_d(det);
  return orient2d_exact(ax, ay, bx, by, cx, cy);
}

bool segment_intersects_triangle(const Vec3& s0, const Vec3& s1, const Vec3& t0, const Vec3& t1, const Vec3& t2) {
  const int o0 = orient3d(t0, t1, t2, s0);
  const int o1 = orient3d(t0, t1, t2, s1);
  if (o0 == o1 && o0 != 0) return false;
  if (o0 == 0 && o1 == 0) return segment_triangle_coplanar(s0, s1, t0, t1, t2);
  // The segment meets the plane in one point; test it against the three edge planes.
  const int e0 = orient3d(s0, s1, t0, t1);
  const int e1 = orient3d(s0, s1, t1, t2);
  const int e2 = orient3d(s0, s1, t2, t0);
  const bool has_neg = e0 < 0 || e1 < 0 || e2 < 0;
  const bool has_pos = e0 > 0 || e1 > 0 || e2 > 0;
  return !(has_neg && has_pos);
}

bool triangles_intersect(const Vec3& p0, const Vec3& p1, const Vec3& p2, const Vec3& q0, const Vec3& q1,
                         const Vec3& q2) {
  const int a0 = orient3d(p0, p1, p2, q0), a1 = orient3d(p0, p1, p2, q1), a2 = orient3d(p0, p1, p2, q2);
  if ((a0 > 0 && a1 > 0 && a2 > 0) || (a0 < 0 && a1 < 0 && a2 < 0)) return false;
  const int b0 = orient3d(q0, q1, q2, p0), b1 = orient3d(q0, q1, q2, p1), b2 = orient3d(q0, q1, q2, p2);
  if ((b0 > 0 && b1 > 0 && b2 > 0) || (b0 < 0 && b1 < 0 && b2 < 0)) return false;

  if (a0 == 0 && a1 == 0 && a2 == 0) {
    const int drop = drop_axis(p0, p1, p2);
    const P2 P[3] = {project(p0, drop), project(p1, drop), project(p2, drop)};
    const P2 Q[3] = {project(q0, drop), project(q1, drop), project(q2, drop)};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (segments_intersect_2d(P[i], P[(i + 1) % 3], Q[j], Q[(j + 1) % 3])) return true;
    return point_in_triangle_2d(P[0], Q[0], Q[1], Q[2]) || point_in_triangle_2d(Q[0], P[0], P[1], P[2]);
  }

  // Non-coplanar: the intersection segment ends on an edge of one triangle.
  return segment_intersects_triangle(p0, p1, q0, q1, q2) || segment_intersects_triangle(p1, p2, q0, q1, q2) ||
         segment_intersects_triangle(p2, p0, q0, q1, q2) || segment_intersects_triangle(q0, q1, p0, p1, p2) ||
         segment_intersects_triangle(q1, q2, p0, p1, p2) || segment_intersects_triangle(q2, q0, p0, p1, p2);
}

}  // namespace lglab
