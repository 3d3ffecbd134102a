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

// Open book geometry in coordinates where the working matrix has a zero
// (2,1) entry. The binding is the x-axis, its left cosets are the coordinate
// lines {(t, y, z)}, and the left cosets of the plane subgroup {z = 0} are the
// horizontal planes.

#pragma once

#include "lglab/group.hpp"

namespace lglab {

struct OpenBookModel {
  LieGroupModel group;  // group.A is upper triangular
  Mat2 rotation;        // S with group.A = S^{-1} (original A) S

  // Original model coordinates -> open book coordinates.
  GroupPoint to_book(const GroupPoint& g) const;
  GroupPoint from_book(const GroupPoint& g) const;
};

OpenBookModel make_open_book(const LieGroupModel& model);

struct Fiber {
  double y = 0.0;
  double z = 0.0;
};

struct QuotientPoint {
  double y = 0.0;
  double z = 0.0;
};

// Projection to the space of left cosets of the binding.
inline QuotientPoint quotient_pi(const GroupPoint& g) { return {g.y, g.z}; }

// Projection to the space of left cosets of the plane subgroup.
inline double pi_sigma_left(const GroupPoint& g) { return g.z; }

inline Fiber fiber_through(const GroupPoint& g) { return {g.y, g.z}; }

// Unit rotation field about the fiber over `center`, with zero x-component.
// Throws SingularPoint on the central fiber.
Vec3 angular_field_at(const GroupPoint& g, const QuotientPoint& center);

}  // namespace lglab
