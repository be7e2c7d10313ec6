// SPDX-License-Identifier: Apache-2.0
//
// Monte Carlo estimate of the Gauss linking integral as the average
// signed crossing number over random projection directions.

#pragma once

#include <cstddef>
#include <cstdint>

#include "geometry.hpp"

namespace mgli {

struct CrossingEstimate {
  double value = 0.0;      // mean of per-direction half signed crossing sums
  double std_error = 0.0;  // sample standard error (ddof = 1)
  std::size_t directions = 0;
};

// Projects both polylines along uniformly random sphere directions,
// counts signed crossings between the two projected curves, and averages
// half the signed sum. Deterministic for a fixed seed regardless of the
// thread count. Requires at least two directions.
CrossingEstimate projection_crossing_estimate(const Polyline& a, const Polyline& b,
                                              std::size_t n_directions,
                                              std::uint64_t seed);

}  // namespace mgli
