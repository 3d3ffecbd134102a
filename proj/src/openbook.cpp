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

#include "lglab/openbook.hpp"

#include <cmath>

#include "lglab/error.hpp"

namespace lglab {

GroupPoint OpenBookModel::to_book(const GroupPoint& g) const {
  // (p, z) -> (S^T p, z) is an isomorphism onto R^2 x_{S^T A S} R.
  const Vec2 q = rotation.transposed() * Vec2{g.x, g.y};
  return {q.x, q.y, g.z};
}

GroupPoint OpenBookModel::from_book(const GroupPoint& g) const {
  const Vec2 q = rotation * Vec2{g.x, g.y};
  return {q.x, q.y, g.z};
}

OpenBookModel make_open_book(const LieGroupModel& model) {
  if (!model.admitsOpenBook)
    throw Error(ErrorCode::UnsupportedGroup,
                "make_open_book: " + model.label.to_string() + " admits no algebraic open book decomposition");
  const Triangularization t = normalize_upper_triangular(model.A);
  OpenBookModel book;
  book.group = model;
  book.group.A = t.upper;
  book.rotation = t.rotation;
  return book;
}

Vec3 angular_field_at(const GroupPoint& g, const QuotientPoint& center) {
  const double dy = g.y - center.y;
  const double dz = g.z - center.z;
  const double r = std::hypot(dy, dz);
  if (!(r > 0.0)) throw Error(ErrorCode::SingularPoint, "angular_field_at: point lies on the central fiber");
  return {0.0, -dz / r, dy / r};
}

}  // namespace lglab
