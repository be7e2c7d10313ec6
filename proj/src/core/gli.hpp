// SPDX-License-Identifier: Apache-2.0
//
// Gauss linking integral kernels. The edge-pair kernel is exact (closed
// form via the solid angle of a spherical quadrilateral), and every
// aggregate is accumulated in a canonical order so that reflecting a
// configuration or reversing a curve negates results bit for bit.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "geometry.hpp"
#include "segmentation.hpp"

namespace mgli {

enum class GliMode { signed_sum, absolute };

// Exact Gauss linking contribution of the directed edge pair
// (a0 -> a1, b0 -> b1). Returns +0.0 if the edges share an endpoint
// exactly; throws ErrorCode::singular_configuration if they touch or
// cross elsewhere. Result lies in [-1/2, 1/2].
double edge_pair_gli(const Point3& a0, const Point3& a1,
                     const Point3& b0, const Point3& b1);

// Minimum Euclidean distance between two closed segments.
double min_segment_distance(const Point3& a0, const Point3& a1,
                            const Point3& b0, const Point3& b1);

// GLI between two open vertex walks: the double sum of edge-pair values
// (absolute mode sums magnitudes). Accumulation order is canonical, so
// the signed result is exactly antisymmetric under reversal of either
// walk and under reflection.
double walk_gli(const std::vector<Point3>& a, const std::vector<Point3>& b,
                GliMode mode);

// GLI between two polylines (closed polylines contribute their closing
// edge). The curves must be disjoint; singular configurations throw.
double polyline_gli(const Polyline& a, const Polyline& b,
                    GliMode mode = GliMode::signed_sum);

enum class FlagKind { overlap, singular };

struct EntryFlag {
  std::size_t row = 0;
  std::size_t col = 0;
  FlagKind kind = FlagKind::overlap;
};

// Pairwise GLI matrix between two segmentations, with representative
// distances alongside. Entries whose segments overlap along their parent
// curve, or whose walks are singular, are set to 0 and flagged.
struct GliMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;     // row-major, rows x cols
  std::vector<double> distances;  // representative distances, row-major
  std::vector<std::string> row_ids;
  std::vector<std::string> col_ids;
  GliMode mode = GliMode::signed_sum;
  std::vector<EntryFlag> flags;   // sorted by (row, col)

  double value(std::size_t i, std::size_t j) const { return values[i * cols + j]; }
  double dist(std::size_t i, std::size_t j) const { return distances[i * cols + j]; }
  double grand_sum() const;
};

// Cross matrix between two segmentations.
GliMatrix segmentation_matrix(const Segmentation& row_seg, const Segmentation& col_seg,
                              GliMode mode);

// Self matrix of one segmentation: symmetric, zero diagonal (a segment
// overlaps itself). The lower triangle mirrors the upper one exactly.
GliMatrix segmentation_matrix(const Segmentation& seg, GliMode mode);

}  // namespace mgli
