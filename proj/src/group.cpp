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

#include "lglab/group.hpp"

#include <cmath>
#include <sstream>

#include "lglab/error.hpp"
#include "lglab/format.hpp"

namespace lglab {

namespace {

void require_finite(const GroupPoint& g, const char* where) {
  if (!std::isfinite(g.x) || !std::isfinite(g.y) || !std::isfinite(g.z))
    throw Error(ErrorCode::InvalidArgument, std::string(where) + ": non-finite point");
}

Vec3 frame_field(const Mat2& A, int i, const GroupPoint& g) {
  const FrameAt f = left_frame_at(A, g);
  return i == 1 ? f.E1 : (i == 2 ? f.E2 : f.E3);
}

// Rotation R with R^T A R having zero diagonal; A must be traceless.
Mat2 zero_diagonal_rotation(const Mat2& A) {
  const double theta = 0.5 * std::atan2(-2.0 * A.a, A.b + A.c);
  const double cs = std::cos(theta);
  const double sn = std::sin(theta);
  return {cs, -sn, sn, cs};
}

}  // namespace

GroupPoint multiply(const Mat2& A, const GroupPoint& g1, const GroupPoint& g2) {
  require_finite(g1, "multiply");
  require_finite(g2, "multiply");
  const Vec2 q = exp2(A, g1.z) * Vec2{g2.x, g2.y};
  return {g1.x + q.x, g1.y + q.y, g1.z + g2.z};
}

GroupPoint inverse(const Mat2& A, const GroupPoint& g) {
  require_finite(g, "inverse");
  const Vec2 q = exp2(A, -g.z) * Vec2{g.x, g.y};
  return {-q.x, -q.y, -g.z};
}

FrameAt left_frame_at(const Mat2& A, const GroupPoint& g) {
  require_finite(g, "left_frame_at");
  const Mat2 E = exp2(A, g.z);
  return {g, {E.a, E.c, 0.0}, {E.b, E.d, 0.0}, {0.0, 0.0, 1.0}};
}

RightFrameAt right_frame_at(const Mat2& A, const GroupPoint& g) {
  require_finite(g, "right_frame_at");
  return {g,
          {1.0, 0.0, 0.0},
          {0.0, 1.0, 0.0},
          {A.a * g.x + A.b * g.y, A.c * g.x + A.d * g.y, 1.0}};
}

Mat3 metric_at(const Mat2& A, const GroupPoint& g) {
  const Mat3 P = left_frame_at(A, g).matrix();
  return inverse(P * P.transposed());
}

Mat3 left_translate_map_jacobian(const Mat2& A, const GroupPoint& a, const GroupPoint& g) {
  require_finite(a, "left_translate_map_jacobian");
  require_finite(g, "left_translate_map_jacobian");
  const Mat2 E = exp2(A, a.z);
  return {{E.a, E.b, 0.0, E.c, E.d, 0.0, 0.0, 0.0, 1.0}};
}

BracketCoefficients bracket_coefficients(const Mat2& A) {
  BracketCoefficients bc;
  const Vec3 e31{A.a, A.c, 0.0};  // [E3, E1] = a E1 + c E2
  const Vec3 e32{A.b, A.d, 0.0};  // [E3, E2] = b E1 + d E2
  bc.c[2][0] = e31;
  bc.c[0][2] = -e31;
  bc.c[2][1] = e32;
  bc.c[1][2] = -e32;
  return bc;
}

Vec3 numeric_bracket(const Mat2& A, int i, int j, const GroupPoint& g, double h) {
  if (i < 1 || i > 3 || j < 1 || j > 3 || !(h > 0.0))
    throw Error(ErrorCode::InvalidArgument, "numeric_bracket: indices must be in 1..3 and h > 0");
  const Vec3 U = frame_field(A, i, g);
  const Vec3 V = frame_field(A, j, g);
  // [U, V]^k = U^m d_m V^k - V^m d_m U^k
  Vec3 out;
  for (int m = 0; m < 3; ++m) {
    GroupPoint gp = g;
    GroupPoint gm = g;
    gp[m] += h;
    gm[m] -= h;
    const Vec3 dV = (1.0 / (2.0 * h)) * (frame_field(A, j, gp) - frame_field(A, j, gm));
    const Vec3 dU = (1.0 / (2.0 * h)) * (frame_field(A, i, gp) - frame_field(A, i, gm));
    out += U[m] * dV - V[m] * dU;
  }
  return out;
}

std::string GroupLabel::to_string() const {
  switch (kind) {
    case GroupKind::R3: return "R3";
    case GroupKind::Nil3: return "Nil3";
    case GroupKind::Sol3: return "Sol3(" + format_double(c) + ")";
    case GroupKind::E2tilde: return "E2tilde(" + format_double(c) + ")";
    case GroupKind::H3: return "H3";
    case GroupKind::NonUnimodular:
      return "NonUnimodular(D=" + format_double(D) + ",b=" + format_double(b) + ")";
  }
  return "unknown";
}

Mat2 canonical_nonunimodular(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw Error(ErrorCode::InvalidArgument, "canonical_nonunimodular: non-finite parameter");
  if (a < 0.0 || b < 0.0) throw Error(ErrorCode::Domain, "canonical_nonunimodular: a and b must be nonnegative");
  return {1.0 + a, (a - 1.0) * b + 0.0, (1.0 + a) * b, 1.0 - a};
}

LieGroupModel classify(const Mat2& input) {
  if (!input.finite()) throw Error(ErrorCode::Unclassified, "classify: non-finite matrix entries");
  LieGroupModel model;
  model.input = input;

  const double tr = input.trace();
  if (std::fabs(tr) <= kUnimodularTolerance) {
    model.traceClass = TraceClass::Unimodular;
    model.A = input;
    model.D = input.det();
    if (input.max_abs() <= kMatchTolerance) {
      model.label.kind = GroupKind::R3;
      model.A = Mat2::zero();
    } else if (std::fabs(model.D) <= kMatchTolerance) {
      // Nonzero and nilpotent.
      model.label.kind = GroupKind::Nil3;
    } else {
      const Mat2 R = zero_diagonal_rotation(input);
      const Mat2 off = R.transposed() * input * R;
      if (std::fabs(off.a) > kMatchTolerance * std::fmax(1.0, input.max_abs()) || off.b == 0.0 || off.c == 0.0) {
        std::ostringstream os;
        os << "classify: traceless matrix not reducible to a canonical form (trace " << tr << ", det "
           << model.D << ")";
        throw Error(ErrorCode::Unclassified, os.str());
      }
      double c = std::sqrt(std::fabs(off.b / off.c));
      if (c < 1.0) c = 1.0 / c;
      model.label.kind = model.D < 0.0 ? GroupKind::Sol3 : GroupKind::E2tilde;
      model.label.c = c;
      model.scale = std::sqrt(std::fabs(model.D));
    }
    model.admitsOpenBook = model.label.kind == GroupKind::R3 || model.label.kind == GroupKind::Nil3 ||
                           model.label.kind == GroupKind::Sol3;
    return model;
  }

  model.traceClass = TraceClass::NonUnimodularNormalized;
  Mat2 M = input;
  if (tr < 0.0) {
    M = -1.0 * input;
    model.orientationFlip = true;
  }
  model.scale = 0.5 * M.trace();
  model.A = (1.0 / model.scale) * M;
  model.D = model.A.det();

  // Orthogonal-conjugation invariants of the trace-2 family: the antisymmetric
  // part gives b and the spread of the symmetric part gives a sqrt(1 + b^2).
  const Mat2& An = model.A;
  model.b = 0.5 * std::fabs(An.c - An.b);
  const double half_diff = 0.5 * (An.a - An.d);
  const double sym_off = 0.5 * (An.b + An.c);
  const double spread = std::hypot(half_diff, sym_off);
  model.a = spread / std::sqrt(1.0 + model.b * model.b);

  if ((An - Mat2::identity()).max_abs() <= kMatchTolerance) {
    model.label.kind = GroupKind::H3;
  } else {
    model.label.kind = GroupKind::NonUnimodular;
  }
  model.label.D = model.D;
  model.label.b = model.b;
  model.admitsOpenBook = model.D <= 1.0 + kMatchTolerance;
  return model;
}

Triangularization normalize_upper_triangular(const Mat2& A) {
  if (!A.finite()) throw Error(ErrorCode::InvalidArgument, "normalize_upper_triangular: non-finite matrix");
  const ExpBranch br = classify_exp_branch(A);
  if (br.delta < -kBranchTolerance) {
    std::ostringstream os;
    os << "normalize_upper_triangular: complex eigenvalue pair (delta = " << br.delta << ")";
    throw Error(ErrorCode::NotTriangularizable, os.str());
  }
  if (A.c == 0.0) return {A, Mat2::identity()};

  const double lambda = 0.5 * A.trace() + std::sqrt(std::fmax(br.delta, 0.0));
  // Eigenvector for lambda; (lambda - d, c) is nonzero since c != 0.
  Vec2 v{lambda - A.d, A.c};
  const Vec2 w{A.b, lambda - A.a};
  if (std::hypot(w.x, w.y) > std::hypot(v.x, v.y)) v = w;
  const double n = std::hypot(v.x, v.y);
  v = {v.x / n, v.y / n};
  const Mat2 S{v.x, -v.y, v.y, v.x};
  Mat2 upper = S.transposed() * A * S;
  upper.c = 0.0;
  return {upper, S};
}

Mat2 r3_matrix() { return Mat2::zero(); }
Mat2 nil3_matrix() { return {0.0, 1.0, 0.0, 0.0}; }

Mat2 sol3_matrix(double c) {
  if (!(c >= 1.0) || !std::isfinite(c)) throw Error(ErrorCode::Domain, "sol3 parameter must satisfy c >= 1");
  return {0.0, c, 1.0 / c, 0.0};
}

Mat2 e2tilde_matrix(double c) {
  if (!(c >= 1.0) || !std::isfinite(c)) throw Error(ErrorCode::Domain, "e2tilde parameter must satisfy c >= 1");
  return {0.0, -c, 1.0 / c, 0.0};
}

Mat2 h3_matrix() { return Mat2::identity(); }

Mat2 nonunimodular_matrix(double D, double b) { return canonical_nonunimodular(solve_a_from_Db(D, b), b); }

}  // namespace lglab
