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

#include "lglab/algebra.hpp"

#include <sstream>

#include "lglab/error.hpp"

namespace lglab {

namespace {

void require_finite(const Mat2& A, double z, const char* where) {
  if (!A.finite() || !std::isfinite(z)) {
    std::ostringstream os;
    os << where << ": non-finite input";
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
}

}  // namespace

Mat2 inverse(const Mat2& m) {
  const double det = m.det();
  if (det == 0.0 || !std::isfinite(det)) throw Error(ErrorCode::Domain, "inverse: singular 2x2 matrix");
  return (1.0 / det) * Mat2{m.d, -m.b, -m.c, m.a};
}

Mat3 Mat3::transposed() const {
  Mat3 t;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) t(r, c) = (*this)(c, r);
  return t;
}

double Mat3::det() const {
  const Mat3& p = *this;
  return p(0, 0) * (p(1, 1) * p(2, 2) - p(1, 2) * p(2, 1)) -
         p(0, 1) * (p(1, 0) * p(2, 2) - p(1, 2) * p(2, 0)) +
         p(0, 2) * (p(1, 0) * p(2, 1) - p(1, 1) * p(2, 0));
}

double Mat3::max_abs() const {
  double r = 0.0;
  for (double v : m) r = std::fmax(r, std::fabs(v));
  return r;
}

Mat3 operator*(const Mat3& p, const Mat3& q) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += p(i, k) * q(k, j);
      r(i, j) = s;
    }
  return r;
}

Mat3 operator-(const Mat3& p, const Mat3& q) {
  Mat3 r;
  for (std::size_t i = 0; i < 9; ++i) r.m[i] = p.m[i] - q.m[i];
  return r;
}

Vec3 operator*(const Mat3& p, const Vec3& v) {
  return {p(0, 0) * v.x + p(0, 1) * v.y + p(0, 2) * v.z,
          p(1, 0) * v.x + p(1, 1) * v.y + p(1, 2) * v.z,
          p(2, 0) * v.x + p(2, 1) * v.y + p(2, 2) * v.z};
}

Mat3 inverse(const Mat3& p) {
  const double det = p.det();
  if (det == 0.0 || !std::isfinite(det)) throw Error(ErrorCode::Domain, "inverse: singular 3x3 matrix");
  Mat3 r;
  r(0, 0) = p(1, 1) * p(2, 2) - p(1, 2) * p(2, 1);
  r(0, 1) = p(0, 2) * p(2, 1) - p(0, 1) * p(2, 2);
  r(0, 2) = p(0, 1) * p(1, 2) - p(0, 2) * p(1, 1);
  r(1, 0) = p(1, 2) * p(2, 0) - p(1, 0) * p(2, 2);
  r(1, 1) = p(0, 0) * p(2, 2) - p(0, 2) * p(2, 0);
  r(1, 2) = p(0, 2) * p(1, 0) - p(0, 0) * p(1, 2);
  r(2, 0) = p(1, 0) * p(2, 1) - p(1, 1) * p(2, 0);
  r(2, 1) = p(0, 1) * p(2, 0) - p(0, 0) * p(2, 1);
  r(2, 2) = p(0, 0) * p(1, 1) - p(0, 1) * p(1, 0);
  for (double& v : r.m) v /= det;
  return r;
}

ExpBranch classify_exp_branch(const Mat2& A) {
  // (a - d)^2/4 + bc avoids the cancellation in tr^2/4 - det.
  const double half_diff = 0.5 * (A.a - A.d);
  const double delta = half_diff * half_diff + A.b * A.c;
  ExpBranch br;
  br.delta = delta;
  if (std::fabs(delta) <= kBranchTolerance)
    br.tag = ExpBranchTag::Repeated;
  else
    br.tag = delta > 0.0 ? ExpBranchTag::RealDistinct : ExpBranchTag::ComplexPair;
  return br;
}

Mat2 exp2(const Mat2& A, double z) {
  require_finite(A, z, "exp2");
  const double half_tr = 0.5 * A.trace();
  const Mat2 B = A - half_tr * Mat2::identity();  // traceless part, B^2 = delta I
  const ExpBranch br = classify_exp_branch(A);

  double ch = 1.0;  // cosh(sqrt(delta) z)
  double sh = z;    // sinh(sqrt(delta) z) / sqrt(delta)
  switch (br.tag) {
    case ExpBranchTag::RealDistinct: {
      const double s = std::sqrt(br.delta);
      ch = std::cosh(s * z);
      sh = std::sinh(s * z) / s;
      break;
    }
    case ExpBranchTag::ComplexPair: {
      const double w = std::sqrt(-br.delta);
      ch = std::cos(w * z);
      sh = std::sin(w * z) / w;
      break;
    }
    case ExpBranchTag::Repeated:
      // Second-order terms keep the limit form accurate for |delta| up to the tolerance.
      ch = 1.0 + 0.5 * br.delta * z * z;
      sh = z * (1.0 + br.delta * z * z / 6.0);
      break;
  }
  const double scale = std::exp(half_tr * z);
  return scale * (ch * Mat2::identity() + sh * B);
}

Mat2 exp2_oracle(const Mat2& A, double z) {
  require_finite(A, z, "exp2_oracle");
  Mat2 M = z * A;
  int squarings = 0;
  while (M.max_abs() > 0.5) {
    M = 0.5 * M;
    ++squarings;
  }
  Mat2 sum = Mat2::identity();
  Mat2 term = Mat2::identity();
  for (int k = 1; k < 60; ++k) {
    term = (1.0 / k) * (term * M);
    sum = sum + term;
    if (term.max_abs() < 1e-18) break;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

double m_of_D(double D) { return D > 1.0 ? std::sqrt(D - 1.0) : 0.0; }

double solve_a_from_Db(double D, double b) {
  if (!std::isfinite(D) || !std::isfinite(b)) throw Error(ErrorCode::InvalidArgument, "solve_a_from_Db: non-finite input");
  const double a2 = 1.0 - D / (1.0 + b * b);
  if (b < 0.0 || a2 < 0.0) {
    // Rounding at the boundary b = m(D) can leave a2 a few ulps below zero.
    if (b >= 0.0 && a2 > -1e-14) return 0.0;
    std::ostringstream os;
    os << "no canonical model for (D, b) = (" << D << ", " << b << "): need b >= m(D) = " << m_of_D(D);
    throw Error(ErrorCode::Domain, os.str());
  }
  return std::sqrt(a2);
}

}  // namespace lglab
