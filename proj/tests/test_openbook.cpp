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

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "lglab/error.hpp"
#include "lglab/openbook.hpp"
#include "support.hpp"

using namespace lglab;
using lglab::testing::mat_dist;
using lglab::testing::vec_dist;

namespace {

// Largest change of Pi along left cosets of the binding in the group with
// matrix A, over n random samples.
double coset_drift(const Mat2& A, std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ut(-3.0, 3.0);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const GroupPoint g = lglab::testing::random_point(rng, 1.0);
    const GroupPoint h = multiply(A, g, {ut(rng), 0.0, 0.0});
    const QuotientPoint p = quotient_pi(g), q = quotient_pi(h);
    worst = std::fmax(worst, std::fmax(std::fabs(p.y - q.y), std::fabs(p.z - q.z)));
  }
  return worst;
}

}  // namespace

TEST_CASE("make_open_book examples") {
  const OpenBookModel nil = make_open_book(classify(nil3_matrix()));
  CHECK(mat_dist(nil.group.A, nil3_matrix()) == 0.0);
  CHECK(mat_dist(nil.rotation, Mat2::identity()) == 0.0);

  const OpenBookModel sol = make_open_book(classify(sol3_matrix(1.0)));
  CHECK(mat_dist(sol.group.A, {1, 0, 0, -1}) <= 1e-15);
  const double h = std::sqrt(0.5);
  CHECK(mat_dist(sol.rotation, {h, -h, h, h}) <= 1e-15);

  CHECK_THROWS_AS(make_open_book(classify(e2tilde_matrix(1.0))), Error);
  try {
    make_open_book(classify(e2tilde_matrix(1.0)));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedGroup);
    CHECK(std::string(e.what()).find("E2tilde(1)") != std::string::npos);
  }
  CHECK_THROWS_AS(make_open_book(classify(nonunimodular_matrix(2.0, 1.0))), Error);
}

TEST_CASE("to_book is an isomorphism onto the triangular model") {
  std::mt19937_64 rng(21);
  for (const auto& m : lglab::testing::sphere_suite()) {
    CAPTURE(m.name);
    const LieGroupModel model = classify(m.A);
    const OpenBookModel book = make_open_book(model);
    CHECK(book.group.A.c == 0.0);
    const Mat2 Ab = book.rotation.transposed() * model.input * book.rotation;
    for (int i = 0; i < 100; ++i) {
      const GroupPoint g = lglab::testing::random_point(rng, 1.0);
      const GroupPoint h = lglab::testing::random_point(rng, 1.0);
      const GroupPoint lhs = book.to_book(multiply(model.input, g, h));
      const GroupPoint rhs = multiply(Ab, book.to_book(g), book.to_book(h));
      CHECK(vec_dist(lhs, rhs) <= 1e-12);
      CHECK(vec_dist(book.from_book(book.to_book(g)), g) <= 1e-15);
    }
  }
}

TEST_CASE("quotient_pi examples") {
  const QuotientPoint p = quotient_pi({3, 4, 5});
  CHECK(p.y == 4.0);
  CHECK(p.z == 5.0);
  const QuotientPoint e = quotient_pi(kIdentity);
  CHECK(e.y == 0.0);
  CHECK(e.z == 0.0);
  CHECK(coset_drift(nil3_matrix(), 22, 1000) <= 1e-12);
}

TEST_CASE("property: Pi is constant on binding cosets only after triangularization") {
  for (const auto& m : lglab::testing::sphere_suite()) {
    CAPTURE(m.name);
    const OpenBookModel book = make_open_book(classify(m.A));
    CHECK(coset_drift(book.group.A, 23, 1000) <= 1e-12);
  }
  // The unrotated Sol3 matrix has a nonzero (2,1) entry: Pi moves along cosets.
  CHECK(coset_drift(sol3_matrix(1.0), 24, 1000) > 1e-3);
}

TEST_CASE("pi_sigma_left examples") {
  CHECK(pi_sigma_left({1, 2, 3}) == 3.0);
  CHECK(pi_sigma_left({-4, 9, 0}) == 0.0);
  std::mt19937_64 rng(25);
  for (const auto& m : lglab::testing::identity_suite()) {
    for (int i = 0; i < 100; ++i) {
      const GroupPoint p = lglab::testing::random_point(rng, 2.0);
      const double z = p.z;
      CHECK(pi_sigma_left(multiply(m.A, {0, 0, z}, {p.x, p.y, 0.0})) == z);
    }
  }
}

TEST_CASE("fiber_through examples") {
  const Fiber b = fiber_through({7, 0, 0});
  CHECK(b.y == 0.0);
  CHECK(b.z == 0.0);
  const Fiber f = fiber_through({1, 2, 3});
  CHECK(f.y == 2.0);
  CHECK(f.z == 3.0);
  const Mat2 A = make_open_book(classify(sol3_matrix(1.0))).group.A;
  const GroupPoint g{0.3, -0.4, 0.6};
  const Fiber moved = fiber_through(multiply(A, g, {2.5, 0, 0}));
  CHECK(moved.y == doctest::Approx(-0.4).epsilon(1e-15));
  CHECK(moved.z == 0.6);
}

TEST_CASE("angular field examples") {
  CHECK(vec_dist(angular_field_at({0, 1, 0}, {0, 0}), {0, 0, 1}) == 0.0);
  CHECK(vec_dist(angular_field_at({0, 0, 1}, {0, 0}), {0, -1, 0}) == 0.0);
  CHECK_THROWS_AS(angular_field_at({5, 0.5, -0.5}, {0.5, -0.5}), Error);
  std::mt19937_64 rng(26);
  for (int i = 0; i < 200; ++i) {
    const GroupPoint g = lglab::testing::random_point(rng, 3.0);
    const QuotientPoint c{0.1, -0.2};
    const Vec3 V = angular_field_at(g, c);
    CHECK(std::fabs(norm(V) - 1.0) <= 1e-15);
    CHECK(V.x == 0.0);
    // Tangent to the circles about the center.
    CHECK(std::fabs(V.y * (g.y - c.y) + V.z * (g.z - c.z)) <= 1e-14);
  }
}

TEST_CASE("property: angular field winds once around the center") {
  const QuotientPoint c{0.2, 0.1};
  const int n = 64;
  double total = 0.0;
  double prev = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double t = 2 * std::numbers::pi * k / n;
    const Vec3 V = angular_field_at({0, c.y + 0.5 * std::cos(t), c.z + 0.5 * std::sin(t)}, c);
    const double ang = std::atan2(V.z, V.y);
    if (k > 0) {
      double d = ang - prev;
      while (d > std::numbers::pi) d -= 2 * std::numbers::pi;
      while (d < -std::numbers::pi) d += 2 * std::numbers::pi;
      total += d;
    }
    prev = ang;
  }
  CHECK(std::lround(total / (2 * std::numbers::pi)) == 1);
}
