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

#include <chrono>
#include <cmath>
#include <random>

#include "doctest.h"
#include "lglab/algebra.hpp"
#include "lglab/error.hpp"
#include "support.hpp"

using namespace lglab;
using lglab::testing::mat_dist;

namespace {

// Plain Taylor series without scaling; an oracle independent of exp2_oracle
// for small arguments.
Mat2 taylor(const Mat2& A, double z, int terms) {
  Mat2 sum = Mat2::identity();
  Mat2 term = Mat2::identity();
  for (int k = 1; k < terms; ++k) {
    term = (z / k) * (term * A);
    sum = sum + term;
  }
  return sum;
}

}  // namespace

TEST_CASE("exp2 closed form examples") {
  CHECK(mat_dist(exp2(Mat2::zero(), 7.0), Mat2::identity()) == 0.0);
  CHECK(mat_dist(exp2({0, 1, 0, 0}, 2.0), {1, 2, 0, 1}) <= 1e-15);
  const Mat2 e = exp2({0, 1, 1, 0}, 1.0);
  CHECK(mat_dist(e, {std::cosh(1.0), std::sinh(1.0), std::sinh(1.0), std::cosh(1.0)}) <= 1e-14);
  CHECK(mat_dist(e, taylor({0, 1, 1, 0}, 1.0, 40)) <= 1e-14);
  CHECK(e.a == doctest::Approx(1.543081).epsilon(1e-6));
  CHECK(e.b == doctest::Approx(1.175201).epsilon(1e-6));
}

TEST_CASE("exp2_oracle examples") {
  CHECK(mat_dist(exp2_oracle(Mat2::zero(), 1.0), Mat2::identity()) == 0.0);
  const double E = std::exp(1.0);
  CHECK(mat_dist(exp2_oracle(Mat2::identity(), 1.0), {E, 0, 0, E}) <= 1e-14);
  CHECK(mat_dist(exp2_oracle({1, 1, 0, 1}, 1.0), {E, E, 0, E}) <= 1e-14);
}

TEST_CASE("classify_exp_branch examples") {
  const ExpBranch real = classify_exp_branch({0, 1, 1, 0});
  CHECK(real.tag == ExpBranchTag::RealDistinct);
  CHECK(real.delta == 1.0);
  const ExpBranch cplx = classify_exp_branch({0, -1, 1, 0});
  CHECK(cplx.tag == ExpBranchTag::ComplexPair);
  CHECK(cplx.delta == -1.0);
  const ExpBranch rep = classify_exp_branch({1, 1, 0, 1});
  CHECK(rep.tag == ExpBranchTag::Repeated);
  CHECK(rep.delta == 0.0);
  CHECK(classify_exp_branch({0, kBranchTolerance, 1, 0}).tag == ExpBranchTag::Repeated);
  CHECK(classify_exp_branch({0, 2 * kBranchTolerance, 1, 0}).tag == ExpBranchTag::RealDistinct);
}

TEST_CASE("exp2 rejects non-finite input") {
  CHECK_THROWS_AS(exp2({NAN, 0, 0, 0}, 1.0), Error);
  CHECK_THROWS_AS(exp2(Mat2::identity(), INFINITY), Error);
  CHECK_THROWS_AS(exp2_oracle({0, INFINITY, 0, 0}, 1.0), Error);
  try {
    exp2({NAN, 0, 0, 0}, 1.0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }
}

TEST_CASE("property: exp2 agrees with the series oracle") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> uz(-2.0, 2.0);
  double worst = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const Mat2 A = lglab::testing::random_matrix(rng);
    const double z = uz(rng);
    worst = std::fmax(worst, mat_dist(exp2(A, z), exp2_oracle(A, z)));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("property: exp2_oracle agrees with the plain series on small arguments") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    const Mat2 A = lglab::testing::random_matrix(rng, -0.5, 0.5);
    CHECK(mat_dist(exp2_oracle(A, 0.7), taylor(A, 0.7, 40)) <= 1e-15);
  }
}

TEST_CASE("property: flow law and determinant") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> uz(-1.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const Mat2 A = lglab::testing::random_matrix(rng);
    const double z1 = uz(rng), z2 = uz(rng);
    const Mat2 lhs = exp2(A, z1 + z2);
    const Mat2 rhs = exp2(A, z1) * exp2(A, z2);
    CHECK(mat_dist(lhs, rhs) <= 1e-10 * std::fmax(1.0, lhs.max_abs()));
    const double det = exp2(A, z1).det();
    const double expected = std::exp(z1 * A.trace());
    CHECK(std::fabs(det - expected) <= 1e-10 * expected);
  }
}

TEST_CASE("property: continuity across the repeated branch") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 200; ++i) {
    const double t = u(rng), z = u(rng);
    for (double delta : {-10 * kBranchTolerance, -kBranchTolerance, 0.0, kBranchTolerance, 10 * kBranchTolerance}) {
      // delta = (a-d)^2/4 + bc with a = d = t/2 and b = 1.
      const Mat2 A{t / 2, 1.0, delta, t / 2};
      CHECK(mat_dist(exp2(A, z), exp2_oracle(A, z)) <= 1e-10);
    }
  }
}

TEST_CASE("m_of_D examples") {
  CHECK(m_of_D(2.0) == 1.0);
  CHECK(m_of_D(0.5) == 0.0);
  CHECK(m_of_D(1.0) == 0.0);
  CHECK(m_of_D(5.0) == 2.0);
}

TEST_CASE("solve_a_from_Db examples and domain") {
  CHECK(solve_a_from_Db(1.0, 0.0) == 0.0);
  CHECK(solve_a_from_Db(0.0, 0.0) == 1.0);
  CHECK(solve_a_from_Db(2.0, 1.0) == 0.0);
  CHECK_THROWS_AS(solve_a_from_Db(2.0, 0.5), Error);
  CHECK_THROWS_AS(solve_a_from_Db(0.5, -1.0), Error);
  try {
    solve_a_from_Db(2.0, 0.5);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Domain);
  }
}

TEST_CASE("property: solved a reproduces D") {
  for (int i = 0; i <= 40; ++i)
    for (int j = 0; j <= 40; ++j) {
      const double D = -2.0 + 6.0 * i / 40, b = 3.0 * j / 40;
      if (b < m_of_D(D)) continue;
      const double a = solve_a_from_Db(D, b);
      CHECK(a >= 0.0);
      // Entries of the canonical matrix, written out independently.
      const double det = (1 + a) * (1 - a) + (1 - a) * b * (1 + a) * b;
      CHECK(std::fabs(det - D) <= 1e-12 * std::fmax(1.0, std::fabs(D)));
    }
}

TEST_CASE("Mat2 and Mat3 arithmetic") {
  const Mat2 A{1, 2, 3, 4};
  CHECK(A.trace() == 5.0);
  CHECK(A.det() == -2.0);
  CHECK(mat_dist(inverse(A) * A, Mat2::identity()) <= 1e-15);
  const Mat3 P{{2, 1, 0, 0, 3, 1, 1, 0, 1}};
  CHECK(P.det() == doctest::Approx(7.0));
  CHECK((inverse(P) * P - Mat3::identity()).max_abs() <= 1e-15);
}

TEST_CASE("exp2 runtime") {
  std::mt19937_64 rng(5);
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < 1000; ++i) (void)exp2_oracle(lglab::testing::random_matrix(rng), 1.5);
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(dt < 1.0);
}
