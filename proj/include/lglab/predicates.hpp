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

// Exact orientation predicates on double inputs. A floating-point evaluation
// is accepted when it clears a forward error bound; otherwise the determinant
// is recomputed in rational arithmetic.

#pragma once

#include "lglab/algebra.hpp"

namespace lglab {

// Sign of det[b - a, c - a, d - a]: +1 when d lies on the side of plane (a, b, c)
// toward which (b - a) x (c - a) points.
int orient3d(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);

// Sign of the 2D cross product (b - a) x (c - a).
int orient2d(double ax, double ay, double bx, double by, double cx, double cy);

// Closed-triangle intersection test, exact for any double input.
bool triangles_intersect(const Vec3& p0, const Vec3& p1, const Vec3& p2, const Vec3& q0, const Vec3& q1,
                         const Vec3& q2);

// Closed segment against closed triangle, exact.
bool segment_intersects_triangle(const Vec3& s0, const Vec3& s1, const Vec3& t0, const Vec3& t1, const Vec3& t2);

}  // namespace lglab
