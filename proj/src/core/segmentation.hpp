// SPDX-License-Identifier: Apache-2.0
//
// Segmentations: ordered tilings of a structure's curves into consecutive
// sub-polylines ("segments"). Each segment keeps its own vertex walk (closed
// pieces that span a whole closed curve repeat their first vertex at the
// end), a representative point used for distance filtering, and the arc
// interval it occupies on its parent component, which is what the overlap
// rule of the generalized segmentation matrix keys on.
#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "geometry.hpp"

namespace mgli {

struct Segment {
  std::size_t component = 0;       // index into the parent structure
  std::string id;                  // stable label, e.g. "ring:3" or "A:42"
  std::vector<Point3> vertices;    // open walk, >= 2 vertices
  Point3 representative{};         // arc-length midpoint (or CA for proteins)
  double arc_begin = 0.0;          // interval on the parent component
  double arc_end = 0.0;

  std::size_t edge_count() const { return vertices.size() - 1; }
  double length() const;
};

struct Segmentation {
  std::shared_ptr<const Structure> parent;  // identity anchor for overlap tests
  std::vector<Segment> segments;

  std::size_t size() const { return segments.size(); }
};

// Splits one component (or, with nullopt, every component) into `pieces`
// consecutive sub-polylines of equal arc length. Closed curves start piece 0
// at vertex 0. Representatives sit at the arc midpoint of each piece.
Segmentation equal_arc_segmentation(std::shared_ptr<const Structure> structure,
                                    std::optional<std::size_t> component,
                                    std::size_t pieces);

// Segmentation of the same curves traversed backwards: mirrored segment
// order, each vertex walk reversed exactly (no re-partitioning arithmetic,
// so entries of a segmentation matrix negate exactly under this map).
Segmentation reversed(const Segmentation& s);

// True when the two segments occupy arc intervals of positive common length
// on the same component of the same structure.
bool segments_overlap(const Segmentation& sa, const Segment& a,
                      const Segmentation& sb, const Segment& b);

}  // namespace mgli
