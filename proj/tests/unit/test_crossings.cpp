// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <random>

#include "core/crossings.hpp"
#include "core/gli.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace mgli;
using namespace mgli::test;

TEST_CASE("crossing estimate recovers the Hopf linking number") {
  Polyline g1 = sample_parametric(hopf_gamma1(), 200);
  Polyline g2 = sample_parametric(hopf_gamma2(), 200);
  CrossingEstimate e = projection_crossing_estimate(g1, g2, 2000, 42);
  CHECK(e.directions == 2000);
  CHECK(e.std_error >= 0.0);
  CHECK(std::fabs(e.value - (-1.0)) <= 3.0 * e.std_error + 1e-12);
}

TEST_CASE("crossing estimate is deterministic per seed") {
  Polyline g1 = sample_parametric(hopf_gamma1(), 64);
  Polyline g2 = sample_parametric(hopf_gamma2(), 64);
  CrossingEstimate a = projection_crossing_estimate(g1, g2, 500, 7);
  CrossingEstimate b = projection_crossing_estimate(g1, g2, 500, 7);
  CHECK(a.value == b.value);
  CHECK(a.std_error == b.std_error);
}

TEST_CASE("coplanar disjoint curves estimate to zero") {
  Polyline a = circle_polyline(24);
  Polyline b = circle_polyline(24, 1.0, {5, 0, 0});
  CrossingEstimate e = projection_crossing_estimate(a, b, 3000, 9);
  CHECK(std::fabs(e.value) <= 3.0 * e.std_error + 1e-12);
}

TEST_CASE("estimate matches the closed-form total on random pairs") {
  std::mt19937_64 rng(515);
  for (int trial = 0; trial < 5; ++trial) {
    Polyline a = random_polyline(rng, 7, {0, 0, 0}, {2, 2, 2});
    Polyline b = random_polyline(rng, 7, {2.5, 0, 0}, {4.5, 2, 2});
    const double exact = polyline_gli(a, b);
    CrossingEstimate e =
        projection_crossing_estimate(a, b, 4000, 1000 + static_cast<uint64_t>(trial));
    CHECK(std::fabs(e.value - exact) <= 3.0 * e.std_error + 1e-12);
  }
}

TEST_CASE("crossing estimate argument validation") {
  Polyline a = circle_polyline(8);
  Polyline b = circle_polyline(8, 1.0, {4, 0, 0});
  CHECK_THROWS_AS(projection_crossing_estimate(a, b, 1, 42), Error);
  Polyline bad;
  bad.vertices = {{0, 0, 0}};
  CHECK_THROWS_AS(projection_crossing_estimate(bad, b, 100, 42), Error);
}

TEST_CASE("axis-aligned geometry survives degenerate projections") {
  // Straight rods along z: directions near +-z collapse both projections
  // and must be quietly resampled.
  Polyline a, b;
  a.vertices = {{0, 0, 0}, {0, 0, 5}};
  b.vertices = {{1, 0, 0}, {1, 0, 5}};
  CrossingEstimate e = projection_crossing_estimate(a, b, 2000, 13);
  CHECK(std::fabs(e.value) <= 3.0 * e.std_error + 1e-12);
}
