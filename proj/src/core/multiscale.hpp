// SPDX-License-Identifier: Apache-2.0
//
// Scale schemes, distance-masked (scaled) GLI matrices, and the localized
// per-segment features that make up the multiscale embedding.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gli.hpp"

namespace mgli {

// Sorted bin edges r_0 < r_1 < ... < r_k; bin t spans [r_t, r_{t+1}).
// The last bin also includes its upper edge, so a covering scheme
// partitions distances with no double counting.
struct ScaleScheme {
  std::vector<double> edges;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t bins() const { return edges.empty() ? 0 : edges.size() - 1; }
  void validate() const;

  // Bin index for a distance under the half-open rule (last bin closed);
  // npos when the distance falls outside every bin.
  std::size_t bin_of(double d) const;

  // Label "lo-hi" for CSV headers, shortest round-trip formatting.
  std::string bin_label(std::size_t t) const;

  // Accepts "start:stop:step" (stop must be start + k*step) or an explicit
  // comma-separated edge list "r0,r1,...,rk".
  static ScaleScheme parse(const std::string& text);
};

enum class BinClosure { half_open, closed };

// Masks a matrix to the entries whose distance lies in [r_lo, r_hi)
// (half_open) or [r_lo, r_hi] (closed; the default, matching the
// indicator of a single standalone scale interval). Values outside the
// window become 0; ids, distances, mode and flags are preserved.
GliMatrix scaled_matrix(const GliMatrix& g, double r_lo, double r_hi,
                        BinClosure closure = BinClosure::closed);

// Per-segment localized features: values[i][t] = sum over columns j of
// g.values[i][j] restricted to bin t of the scheme.
struct FeatureMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;  // row-major, rows x cols
  std::vector<std::string> row_ids;
  std::vector<std::string> column_labels;
  ScaleScheme scheme;
  GliMode mode = GliMode::signed_sum;

  double value(std::size_t i, std::size_t t) const { return values[i * cols + t]; }
};

FeatureMatrix localized_features(const GliMatrix& g, const ScaleScheme& scheme);

}  // namespace mgli
