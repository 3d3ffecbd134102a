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

// Small fixed-size linear algebra used throughout the toolkit: 2- and
// 3-vectors, 2x2 and 3x3 matrices, the closed-form exponential of a 2x2
// matrix and the parameter algebra of the trace-2 canonical family.

#pragma once

#include <array>
#include <cmath>

namespace lglab {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
inline Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
inline Vec3 operator*(const Vec3& a, double s) { return s * a; }
inline Vec3& operator+=(Vec3& a, const Vec3& b) { a = a + b; return a; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline double max_abs(const Vec3& a) {
  return std::fmax(std::fabs(a.x), std::fmax(std::fabs(a.y), std::fabs(a.z)));
}
inline Vec3 normalized(const Vec3& a) { return (1.0 / norm(a)) * a; }
inline double triple(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

// Row-major 2x2 matrix [[a, b], [c, d]].
struct Mat2 {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2 zero() { return {}; }

  double trace() const { return a + d; }
  double det() const { return a * d - b * c; }
  Mat2 transposed() const { return {a, c, b, d}; }
  bool finite() const {
    return std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && std::isfinite(d);
  }
  double max_abs() const {
    return std::fmax(std::fmax(std::fabs(a), std::fabs(b)), std::fmax(std::fabs(c), std::fabs(d)));
  }
};

inline Mat2 operator+(const Mat2& m, const Mat2& n) { return {m.a + n.a, m.b + n.b, m.c + n.c, m.d + n.d}; }
inline Mat2 operator-(const Mat2& m, const Mat2& n) { return {m.a - n.a, m.b - n.b, m.c - n.c, m.d - n.d}; }
inline Mat2 operator*(double s, const Mat2& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }
inline Mat2 operator*(const Mat2& m, const Mat2& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c,
          m.c * n.b + m.d * n.d};
}
inline Vec2 operator*(const Mat2& m, const Vec2& v) { return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y}; }

Mat2 inverse(const Mat2& m);

// Row-major 3x3 matrix.
struct Mat3 {
  std::array<double, 9> m{};

  static Mat3 identity() { return {{1, 0, 0, 0, 1, 0, 0, 0, 1}}; }
  static Mat3 diag(double a, double b, double c) { return {{a, 0, 0, 0, b, 0, 0, 0, c}}; }
  static Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
    return {{c0.x, c1.x, c2.x, c0.y, c1.y, c2.y, c0.z, c1.z, c2.z}};
  }

  double operator()(int r, int c) const { return m[static_cast<std::size_t>(3 * r + c)]; }
  double& operator()(int r, int c) { return m[static_cast<std::size_t>(3 * r + c)]; }
  Vec3 column(int c) const { return {(*this)(0, c), (*this)(1, c), (*this)(2, c)}; }
  Mat3 transposed() const;
  double det() const;
  double max_abs() const;
};

Mat3 operator*(const Mat3& p, const Mat3& q);
Mat3 operator-(const Mat3& p, const Mat3& q);
Vec3 operator*(const Mat3& p, const Vec3& v);
Mat3 inverse(const Mat3& p);

// ---------------------------------------------------------------------------
// Exponential of a 2x2 matrix
// ---------------------------------------------------------------------------

// |delta| at or below this value selects the repeated-eigenvalue branch.
inline constexpr double kBranchTolerance = 1e-9;

enum class ExpBranchTag { RealDistinct, ComplexPair, Repeated };

struct ExpBranch {
  ExpBranchTag tag = ExpBranchTag::Repeated;
  double delta = 0.0;  // trace^2/4 - det
};

ExpBranch classify_exp_branch(const Mat2& A);

// e^{zA} in closed form, branching on the sign of the discriminant.
Mat2 exp2(const Mat2& A, double z);

// Scaling-and-squaring power series. Independent of exp2, used by tests.
Mat2 exp2_oracle(const Mat2& A, double z);

// ---------------------------------------------------------------------------
// Trace-2 canonical parameters
// ---------------------------------------------------------------------------

// Lower end of the admissible b range for a given D-invariant.
double m_of_D(double D);

// Nonnegative root a of D = (1 - a^2)(1 + b^2). Throws Domain when b < m(D).
double solve_a_from_Db(double D, double b);

}  // namespace lglab
