// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <random>

#include "core/geometry.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace mgli;
using namespace mgli::test;

namespace {

bool same_vertices(const Polyline& a, const Polyline& b) {
  if (a.vertices.size() != b.vertices.size() || a.closed != b.closed) return false;
  for (std::size_t i = 0; i < a.vertices.size(); ++i)
    if (!exactly_equal(a.vertices[i], b.vertices[i])) return false;
  return true;
}

}  // namespace

TEST_CASE("vec3 basics") {
  Vec3 a{1, 2, 3}, b{-4, 5, 0.5};
  CHECK(dot(a, b) == doctest::Approx(-4 + 10 + 1.5));
  // cross is exactly antisymmetric (no FMA contraction in this build)
  Vec3 c1 = cross(a, b), c2 = cross(b, a);
  CHECK(c1.x == -c2.x);
  CHECK(c1.y == -c2.y);
  CHECK(c1.z == -c2.z);
  CHECK(triple(a, b, cross(a, b)) == doctest::Approx(norm2(cross(a, b))));
  CHECK(reflect_invariant_less(Vec3{1, 0, 0}, Vec3{-2, 0, 0}));
  CHECK(reflect_invariant_less(Vec3{-1, 0, 0}, Vec3{1, 0, 0}));  // signed tiebreak
}

TEST_CASE("sample_parametric quarter circle is the unit square") {
  Polyline square = sample_parametric(hopf_gamma1(), 4);
  REQUIRE(square.vertices.size() == 4);
  CHECK(square.closed);
  const Point3 expect[4] = {{1, 0, 0}, {0, 1, 0}, {-1, 0, 0}, {0, -1, 0}};
  for (int i = 0; i < 4; ++i) {
    CHECK(square.vertices[i].x == doctest::Approx(expect[i].x).epsilon(1e-12));
    CHECK(square.vertices[i].y == doctest::Approx(expect[i].y).epsilon(1e-12));
    CHECK(square.vertices[i].z == doctest::Approx(expect[i].z).epsilon(1e-12));
  }
}

TEST_CASE("sample_parametric respects minimum counts") {
  CHECK_THROWS_AS(sample_parametric(hopf_gamma1(), 2), Error);
  ParametricCurve open_curve;
  open_curve.eval = [](double t) { return Point3{t, 0, 0}; };
  open_curve.closed = false;
  CHECK_THROWS_AS(sample_parametric(open_curve, 1), Error);
  Polyline two = sample_parametric(open_curve, 2);
  CHECK(two.vertices.size() == 2);
  CHECK(two.vertices[1].x == 1.0);  // t = i/(n-1) hits both endpoints
}

TEST_CASE("sampled circle length approaches the circumference") {
  Polyline p = sample_parametric(hopf_gamma2(), 1000);
  CHECK(p.length() == doctest::Approx(kTau).epsilon(1e-4));
  // the implicit closing edge is a real edge
  CHECK(p.edge_count() == 1000);
  CHECK(distance(p.edge_start(999), p.edge_end(999)) > 0.0);
}

TEST_CASE("transform identity and translation") {
  std::mt19937_64 rng(7);
  Polyline p = random_polyline(rng, 9, {-1, -1, -1}, {1, 1, 1});
  CHECK(same_vertices(transform(p, Affine::identity()), p));
  Polyline q = transform(p, Affine::translation({1, 2, 3}));
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    CHECK(q.vertices[i].x == p.vertices[i].x + 1);
    CHECK(q.vertices[i].y == p.vertices[i].y + 2);
    CHECK(q.vertices[i].z == p.vertices[i].z + 3);
  }
}

TEST_CASE("isometries preserve pairwise distances") {
  std::mt19937_64 rng(11);
  Polyline p = random_polyline(rng, 12, {-2, -2, -2}, {2, 2, 2});
  Affine rot = Affine::rotation({1, 2, -0.5}, 1.234);
  rot.t = {5, -3, 0.25};
  Polyline q = transform(p, rot);
  for (std::size_t i = 0; i < p.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < p.vertices.size(); ++j) {
      const double d1 = distance(p.vertices[i], p.vertices[j]);
      const double d2 = distance(q.vertices[i], q.vertices[j]);
      CHECK(d2 == doctest::Approx(d1).epsilon(1e-12));
    }
}

TEST_CASE("reflect_z flips only the z coordinate") {
  Polyline p = circle_polyline(8, 1.0, {0.5, 0, 0.25}, 1);
  Polyline q = transform(p, Affine::reflect_z());
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    CHECK(q.vertices[i].x == p.vertices[i].x);
    CHECK(q.vertices[i].y == p.vertices[i].y);
    CHECK(q.vertices[i].z == -p.vertices[i].z);
  }
}

TEST_CASE("polyline validation") {
  Polyline too_few;
  too_few.vertices = {{0, 0, 0}};
  try {
    too_few.validate();
    FAIL("expected invalid_argument");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_argument);
  }

  Polyline dup;
  dup.vertices = {{0, 0, 0}, {1, 0, 0}, {1, 0, 0}, {2, 0, 0}};
  try {
    dup.validate();
    FAIL("expected degenerate_geometry");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::degenerate_geometry);
  }

  Polyline closed_dup;  // duplicated closure point makes a zero closing edge
  closed_dup.closed = true;
  closed_dup.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 0}};
  try {
    closed_dup.validate();
    FAIL("expected degenerate_geometry");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::degenerate_geometry);
  }
}

TEST_CASE("structure validation enforces unique names") {
  Structure s;
  s.components.push_back({"a", circle_polyline(5)});
  s.components.push_back({"a", circle_polyline(5, 1.0, {4, 0, 0})});
  try {
    s.validate();
    FAIL("expected invalid_argument");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_argument);
  }
  CHECK(s.index_of("missing") == Structure::npos);
  CHECK_THROWS_AS(s.at("missing"), Error);
}

TEST_CASE("reversed polyline") {
  std::mt19937_64 rng(3);
  Polyline open = random_polyline(rng, 6, {0, 0, 0}, {1, 1, 1});
  Polyline r = reversed(open);
  for (std::size_t i = 0; i < open.vertices.size(); ++i)
    CHECK(exactly_equal(r.vertices[i], open.vertices[open.vertices.size() - 1 - i]));

  Polyline ring = circle_polyline(7);
  Polyline rring = reversed(ring);
  CHECK(rring.closed);
  CHECK(exactly_equal(rring.vertices[0], ring.vertices[0]));  // same basepoint
  for (std::size_t i = 1; i < ring.vertices.size(); ++i)
    CHECK(exactly_equal(rring.vertices[i], ring.vertices[ring.vertices.size() - i]));
}
