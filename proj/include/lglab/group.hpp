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

// The semidirect product R^2 x_A R with its canonical left invariant metric.
//
// Points are (x, y, z) with group law (p1, z1) * (p2, z2) = (p1 + e^{z1 A} p2,
// z1 + z2). The left invariant frame E1, E2 are the columns of e^{zA} and
// E3 = d/dz; the canonical metric makes that frame orthonormal.

#pragma once

#include <array>
#include <string>

#include "lglab/algebra.hpp"

namespace lglab {

using GroupPoint = Vec3;

inline constexpr GroupPoint kIdentity{0.0, 0.0, 0.0};

// Tolerance used to match a matrix against the canonical unimodular forms.
inline constexpr double kMatchTolerance = 1e-9;
// |trace| at or below this is treated as unimodular.
inline constexpr double kUnimodularTolerance = 1e-12;

struct FrameAt {
  GroupPoint base;
  Vec3 E1, E2, E3;

  // Columns E1, E2, E3.
  Mat3 matrix() const { return Mat3::from_columns(E1, E2, E3); }
};

struct RightFrameAt {
  GroupPoint base;
  Vec3 F1, F2, F3;

  Mat3 matrix() const { return Mat3::from_columns(F1, F2, F3); }
};

GroupPoint multiply(const Mat2& A, const GroupPoint& g1, const GroupPoint& g2);
GroupPoint inverse(const Mat2& A, const GroupPoint& g);

FrameAt left_frame_at(const Mat2& A, const GroupPoint& g);
RightFrameAt right_frame_at(const Mat2& A, const GroupPoint& g);

// Coordinate matrix of the canonical metric at g, i.e. (P P^T)^{-1} with P the
// left frame matrix.
Mat3 metric_at(const Mat2& A, const GroupPoint& g);

// Jacobian of g -> a * g, which only depends on the height of a.
Mat3 left_translate_map_jacobian(const Mat2& A, const GroupPoint& a, const GroupPoint& g);

// Structure constants: [E_i, E_j] = sum_k c[i][j][k] E_k, zero-based indices.
struct BracketCoefficients {
  std::array<std::array<Vec3, 3>, 3> c{};

  // Coefficient vector of [E_i, E_j], one-based as in the usual notation.
  const Vec3& operator()(int i, int j) const {
    return c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  }
};

BracketCoefficients bracket_coefficients(const Mat2& A);

// Central-difference value of [E_i, E_j](g) in coordinates, i, j in {1, 2, 3}.
Vec3 numeric_bracket(const Mat2& A, int i, int j, const GroupPoint& g, double h);

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

enum class TraceClass { Unimodular, NonUnimodularNormalized };

enum class GroupKind { R3, Nil3, Sol3, E2tilde, H3, NonUnimodular };

struct GroupLabel {
  GroupKind kind = GroupKind::R3;
  double c = 0.0;  // Sol3 / E2tilde parameter, c >= 1
  double D = 0.0;  // NonUnimodular
  double b = 0.0;  // NonUnimodular

  // e.g. "Nil3", "Sol3(1)", "NonUnimodular(D=0.5,b=1)".
  std::string to_string() const;
};

struct LieGroupModel {
  Mat2 input;       // matrix as supplied; coordinates, frames and Gauss maps refer to it
  Mat2 A;           // working matrix: input, or input normalized to trace 2
  TraceClass traceClass = TraceClass::Unimodular;
  GroupLabel label;
  double D = 0.0;   // det of the working matrix
  double a = 0.0;   // canonical (a, b) of the trace-2 family, when non-unimodular
  double b = 0.0;
  double scale = 1.0;           // input = scale * (+-A)
  bool orientationFlip = false;  // negative trace input was replaced by -input
  bool admitsOpenBook = false;
};

LieGroupModel classify(const Mat2& A);

// [[1+a, -(1-a)b], [(1+a)b, 1-a]], a, b >= 0.
Mat2 canonical_nonunimodular(double a, double b);

struct Triangularization {
  Mat2 upper;     // S^{-1} A S with zero (2,1) entry
  Mat2 rotation;  // S, a proper rotation
};

// Real Schur form by a rotation. Throws NotTriangularizable for a complex
// eigenvalue pair.
Triangularization normalize_upper_triangular(const Mat2& A);

// Named models used by the CLI and tests.
Mat2 r3_matrix();
Mat2 nil3_matrix();
Mat2 sol3_matrix(double c);
Mat2 e2tilde_matrix(double c);
Mat2 h3_matrix();
Mat2 nonunimodular_matrix(double D, double b);

}  // namespace lglab
