// SPDX-License-Identifier: Apache-2.0

#include "segmentation.hpp"

#include <algorithm>
#include <cmath>

namespace mgli {

double Segment::length() const {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
    total += distance(vertices[i], vertices[i + 1]);
  return total;
}

namespace {

// Edge table with cumulative arc lengths, covering the closing edge of
// closed polylines.
struct EdgeTable {
  std::vector<Point3> a, b;
  std::vector<double> cum;  // cum[i] = arc length at start of edge i; cum[n] = total
};

EdgeTable build_edges(const Polyline& poly) {
  EdgeTable t;
  const std::size_t n = poly.edge_count();
  t.a.reserve(n);
  t.b.reserve(n);
  t.cum.reserve(n + 1);
  double acc = 0.0;
  t.cum.push_back(0.0);
  for (std::size_t i = 0; i < n; ++i) {
    t.a.push_back(poly.edge_start(i));
    t.b.push_back(poly.edge_end(i));
    acc += distance(t.a.back(), t.b.back());
    t.cum.push_back(acc);
  }
  return t;
}

// Point at arc length s. Exact vertex coordinates are returned whenever s
// lands on a vertex so that adjacent pieces share boundary points bit for
// bit.
Point3 point_at(const EdgeTable& t, std::size_t& hint, double s) {
  const std::size_t n = t.a.size();
  while (hint + 1 < n && t.cum[hint + 1] <= s) ++hint;
  const double len = t.cum[hint + 1] - t.cum[hint];
  double u = (s - t.cum[hint]) / len;
  if (u <= 0.0) return t.a[hint];
  if (u >= 1.0) return t.b[hint];
  return t.a[hint] + (t.b[hint] - t.a[hint]) * u;
}

std::vector<Segment> split_component(const Polyline& poly, std::size_t comp_index,
                                     const std::string& comp_name, std::size_t pieces) {
  poly.validate();
  if (pieces == 0) throw Error(ErrorCode::invalid_argument, "piece count must be positive");

  EdgeTable table = build_edges(poly);
  const double total = table.cum.back();
  if (!(total > 0.0))
    throw Error(ErrorCode::invalid_argument, "cannot partition a zero-length polyline");

  // Split positions (computed once; shared exactly by adjacent pieces) and
  // arc midpoints for the representatives.
  std::vector<double> bounds(pieces + 1);
  for (std::size_t k = 0; k <= pieces; ++k)
    bounds[k] = static_cast<double>(k) * total / static_cast<double>(pieces);
  bounds[pieces] = total;

  std::vector<Point3> bound_points(pieces + 1);
  std::vector<Point3> reps(pieces);
  std::size_t hint = 0;
  for (std::size_t k = 0; k <= pieces; ++k) {
    bound_points[k] = point_at(table, hint, bounds[k]);
    if (k < pieces) {
      const double mid = (static_cast<double>(k) + 0.5) * total / static_cast<double>(pieces);
      reps[k] = point_at(table, hint, mid);
    }
  }

  std::vector<Segment> out(pieces);
  std::size_t edge = 0;
  for (std::size_t k = 0; k < pieces; ++k) {
    Segment& seg = out[k];
    seg.component = comp_index;
    seg.id = comp_name + ":" + std::to_string(k + 1);
    seg.arc_begin = bounds[k];
    seg.arc_end = bounds[k + 1];
    seg.representative = reps[k];

    seg.vertices.push_back(bound_points[k]);
    // Original vertices strictly inside (bounds[k], bounds[k+1]).
    while (edge + 1 < table.a.size() && table.cum[edge + 1] < bounds[k + 1]) {
      ++edge;
      if (table.cum[edge] > bounds[k] && !exactly_equal(table.a[edge], seg.vertices.back()))
        seg.vertices.push_back(table.a[edge]);
    }
    if (!exactly_equal(bound_points[k + 1], seg.vertices.back()))
      seg.vertices.push_back(bound_points[k + 1]);
    if (seg.vertices.size() < 2)
      throw Error(ErrorCode::degenerate_geometry,
                  "piece " + seg.id + " collapsed; too many pieces for this curve");
  }
  return out;
}

}  // namespace

Segmentation equal_arc_segmentation(std::shared_ptr<const Structure> structure,
                                    std::optional<std::size_t> component,
                                    std::size_t pieces) {
  if (!structure) throw Error(ErrorCode::invalid_argument, "null structure");
  structure->validate();
  Segmentation seg;
  seg.parent = structure;
  if (component) {
    if (*component >= structure->components.size())
      throw Error(ErrorCode::not_found, "component index out of range");
    const Component& c = structure->components[*component];
    seg.segments = split_component(c.poly, *component, c.name, pieces);
  } else {
    for (std::size_t i = 0; i < structure->components.size(); ++i) {
      const Component& c = structure->components[i];
      auto part = split_component(c.poly, i, c.name, pieces);
      seg.segments.insert(seg.segments.end(), part.begin(), part.end());
    }
  }
  return seg;
}

Segmentation reversed(const Segmentation& s) {
  Segmentation out;
  out.parent = s.parent;
  out.segments.reserve(s.segments.size());
  for (std::size_t i = s.segments.size(); i > 0; --i) {
    Segment seg = s.segments[i - 1];
    std::reverse(seg.vertices.begin(), seg.vertices.end());
    if (out.parent) {
      const double len = out.parent->components[seg.component].poly.length();
      const double b = seg.arc_begin, e = seg.arc_end;
      seg.arc_begin = len - e;
      seg.arc_end = len - b;
    }
    out.segments.push_back(std::move(seg));
  }
  return out;
}

bool segments_overlap(const Segmentation& sa, const Segment& a,
                      const Segmentation& sb, const Segment& b) {
  if (!sa.parent || !sb.parent || sa.parent.get() != sb.parent.get()) return false;
  if (a.component != b.component) return false;
  const double lo = std::max(a.arc_begin, b.arc_begin);
  const double hi = std::min(a.arc_end, b.arc_end);
  return hi - lo > 0.0;
}

}  // namespace mgli
