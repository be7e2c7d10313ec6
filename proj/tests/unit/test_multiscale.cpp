// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <random>

#include "core/multiscale.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace mgli;
using namespace mgli::test;

namespace {

// Small synthetic matrix with chosen values and distances.
GliMatrix toy_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                     double max_dist = 10.0) {
  std::uniform_real_distribution<double> uv(-1.0, 1.0), ud(0.0, max_dist);
  GliMatrix m;
  m.rows = rows;
  m.cols = cols;
  m.values.resize(rows * cols);
  m.distances.resize(rows * cols);
  for (std::size_t i = 0; i < rows * cols; ++i) {
    m.values[i] = uv(rng);
    m.distances[i] = ud(rng);
  }
  for (std::size_t i = 0; i < rows; ++i) m.row_ids.push_back("r" + std::to_string(i));
  for (std::size_t j = 0; j < cols; ++j) m.col_ids.push_back("c" + std::to_string(j));
  return m;
}

}  // namespace

TEST_CASE("scheme parsing: colon ranges and comma lists") {
  ScaleScheme s = ScaleScheme::parse("5:27:1");
  REQUIRE(s.edges.size() == 23);
  CHECK(s.edges.front() == 5.0);
  CHECK(s.edges.back() == 27.0);
  CHECK(s.bins() == 22);
  CHECK(s.bin_label(0) == "5-6");
  CHECK(s.bin_label(21) == "26-27");

  ScaleScheme c = ScaleScheme::parse("0,1.5,3,10");
  REQUIRE(c.edges.size() == 4);
  CHECK(c.edges[1] == 1.5);
  CHECK(c.bins() == 3);

  ScaleScheme single = ScaleScheme::parse("0:1000:1000");
  CHECK(single.bins() == 1);
}

TEST_CASE("scheme parsing rejects malformed input") {
  CHECK_THROWS_AS(ScaleScheme::parse(""), Error);
  CHECK_THROWS_AS(ScaleScheme::parse("5"), Error);            // no bin
  CHECK_THROWS_AS(ScaleScheme::parse("5:27:0.9"), Error);     // stop unreachable
  CHECK_THROWS_AS(ScaleScheme::parse("5:27"), Error);         // not 3 fields
  CHECK_THROWS_AS(ScaleScheme::parse("27:5:1"), Error);       // stop < start
  CHECK_THROWS_AS(ScaleScheme::parse("5:27:-1"), Error);      // step <= 0
  CHECK_THROWS_AS(ScaleScheme::parse("-1,3"), Error);         // negative edge
  CHECK_THROWS_AS(ScaleScheme::parse("1,1"), Error);          // not increasing
  CHECK_THROWS_AS(ScaleScheme::parse("1,x"), Error);          // not a number
}

TEST_CASE("bin assignment: half-open bins, closed last bin") {
  ScaleScheme s = ScaleScheme::parse("0,1,2,3");
  CHECK(s.bin_of(0.0) == 0);    // first edge belongs to the first bin
  CHECK(s.bin_of(0.5) == 0);
  CHECK(s.bin_of(1.0) == 1);    // interior edge goes to the upper bin
  CHECK(s.bin_of(2.999) == 2);
  CHECK(s.bin_of(3.0) == 2);    // last bin is closed above
  CHECK(s.bin_of(3.0001) == ScaleScheme::npos);
  ScaleScheme p = ScaleScheme::parse("5:27:1");
  CHECK(p.bin_of(4.9999) == ScaleScheme::npos);  // below the first edge: no bin
  CHECK(p.bin_of(5.0) == 0);
}

TEST_CASE("scaled matrix masks by distance window") {
  std::mt19937_64 rng(42);
  GliMatrix m = toy_matrix(4, 5, rng, 10.0);

  GliMatrix all = scaled_matrix(m, 0.0, 10.0);  // closed window covers everything
  for (std::size_t i = 0; i < m.values.size(); ++i)
    CHECK(all.values[i] == m.values[i]);

  GliMatrix none = scaled_matrix(m, 11.0, 20.0);
  for (double v : none.values) CHECK(v == 0.0);

  GliMatrix window = scaled_matrix(m, 2.0, 7.0);
  for (std::size_t i = 0; i < m.values.size(); ++i) {
    const double d = m.distances[i];
    if (d >= 2.0 && d <= 7.0) CHECK(window.values[i] == m.values[i]);
    else CHECK(window.values[i] == 0.0);
  }
  // distances and ids ride along untouched
  CHECK(window.distances == m.distances);
  CHECK(window.row_ids == m.row_ids);
}

TEST_CASE("three-bin windows isolate a far interacting pair") {
  // Two short segments at distance ~5: only the middle window sees them.
  GliMatrix m;
  m.rows = m.cols = 1;
  m.values = {0.25};
  m.distances = {5.0};
  m.row_ids = {"p"};
  m.col_ids = {"q"};
  CHECK(scaled_matrix(m, 0.0, 2.0).values[0] == 0.0);
  CHECK(scaled_matrix(m, 2.0, 8.0).values[0] == 0.25);
  CHECK(scaled_matrix(m, 8.0, 12.0).values[0] == 0.0);
}

TEST_CASE("single covering bin turns features into row sums") {
  std::mt19937_64 rng(43);
  GliMatrix m = toy_matrix(6, 6, rng, 9.0);
  ScaleScheme s = ScaleScheme::parse("0:10:10");
  FeatureMatrix f = localized_features(m, s);
  REQUIRE(f.rows == 6);
  REQUIRE(f.cols == 1);
  for (std::size_t i = 0; i < 6; ++i) {
    double row_sum = 0.0;
    for (std::size_t j = 0; j < 6; ++j) row_sum += m.value(i, j);
    CHECK(f.value(i, 0) == row_sum);  // same accumulation order: exact
  }
  CHECK(f.column_labels.size() == 1);
  CHECK(f.row_ids == m.row_ids);
}

TEST_CASE("feature conservation over a covering scheme") {
  std::mt19937_64 rng(44);
  GliMatrix m = toy_matrix(5, 7, rng, 12.0);
  ScaleScheme s = ScaleScheme::parse("0,2,4,6,8,12");
  FeatureMatrix f = localized_features(m, s);
  REQUIRE(f.cols == 5);
  for (std::size_t i = 0; i < m.rows; ++i) {
    double feature_total = 0.0;
    for (std::size_t t = 0; t < f.cols; ++t) feature_total += f.value(i, t);
    double row_sum = 0.0;
    for (std::size_t j = 0; j < m.cols; ++j) row_sum += m.value(i, j);
    CHECK(feature_total == doctest::Approx(row_sum).epsilon(1e-12));
  }
}

TEST_CASE("bin partition reassembles the matrix exactly") {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 25; ++trial) {
    GliMatrix m = toy_matrix(4, 4, rng, 8.0);
    // plant distances exactly on edges to stress the boundary rule
    m.distances[3] = 2.0;
    m.distances[7] = 8.0;
    ScaleScheme s = ScaleScheme::parse("0,2,5,8");
    std::vector<double> sum(m.values.size(), 0.0);
    for (std::size_t t = 0; t < s.bins(); ++t) {
      const BinClosure closure =
          t + 1 == s.bins() ? BinClosure::closed : BinClosure::half_open;
      GliMatrix part = scaled_matrix(m, s.edges[t], s.edges[t + 1], closure);
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += part.values[i];
    }
    for (std::size_t i = 0; i < sum.size(); ++i) CHECK(sum[i] == m.values[i]);
  }
}

TEST_CASE("bin refinement splits feature columns") {
  std::mt19937_64 rng(46);
  GliMatrix m = toy_matrix(6, 8, rng, 9.0);
  ScaleScheme coarse = ScaleScheme::parse("0,3,9");
  ScaleScheme fine = ScaleScheme::parse("0,3,6,9");  // split bin [3,9] at 6
  FeatureMatrix fc = localized_features(m, coarse);
  FeatureMatrix ff = localized_features(m, fine);
  for (std::size_t i = 0; i < m.rows; ++i) {
    CHECK(ff.value(i, 0) == fc.value(i, 0));  // untouched bin: identical
    CHECK(ff.value(i, 1) + ff.value(i, 2) ==
          doctest::Approx(fc.value(i, 1)).epsilon(1e-12));
  }
  // at the matrix level the same refinement is exact, entry for entry
  GliMatrix whole = scaled_matrix(m, 3.0, 9.0, BinClosure::closed);
  GliMatrix lowhalf = scaled_matrix(m, 3.0, 6.0, BinClosure::half_open);
  GliMatrix highhalf = scaled_matrix(m, 6.0, 9.0, BinClosure::closed);
  for (std::size_t i = 0; i < whole.values.size(); ++i)
    CHECK(lowhalf.values[i] + highhalf.values[i] == whole.values[i]);
}

TEST_CASE("scheme validation") {
  ScaleScheme bad;
  bad.edges = {3.0};
  CHECK_THROWS_AS(bad.validate(), Error);
  bad.edges = {3.0, 2.0};
  CHECK_THROWS_AS(bad.validate(), Error);
  bad.edges = {-1.0, 2.0};
  CHECK_THROWS_AS(bad.validate(), Error);
  ScaleScheme ok;
  ok.edges = {0.0, 1.0, 4.0};
  CHECK_NOTHROW(ok.validate());
}
