// SPDX-License-Identifier: Apache-2.0
//
// Curves, polylines and structures: the geometric substrate every other
// module works on. Open curves are first-class citizens; a closed polyline
// carries an implicit edge from its last vertex back to its first.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "vec3.hpp"

namespace mgli {

struct Polyline {
  std::vector<Point3> vertices;
  bool closed = false;

  std::size_t edge_count() const {
    if (vertices.size() < 2) return 0;
    return closed ? vertices.size() : vertices.size() - 1;
  }
  // Endpoints of edge i; for closed polylines the last edge wraps to vertex 0.
  Point3 edge_start(std::size_t i) const { return vertices[i]; }
  Point3 edge_end(std::size_t i) const { return vertices[(i + 1) % vertices.size()]; }
  double length() const;

  // Throws invalid_argument for too few or non-finite vertices and
  // degenerate_geometry for coincident consecutive vertices (including the
  // closing edge of a closed polyline).
  void validate() const;
};

struct Component {
  std::string name;
  Polyline poly;
};

struct Structure {
  std::vector<Component> components;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t index_of(const std::string& name) const;
  // Throws not_found when the component does not exist.
  const Component& at(const std::string& name) const;
  void validate() const;  // unique non-empty names + per-polyline validation
};

// A parametric curve on [0, 1]. deriv is optional; when absent, consumers
// that need derivatives use a second-order finite difference.
struct ParametricCurve {
  std::function<Point3(double)> eval;
  std::function<Point3(double)> deriv;
  bool closed = false;
};

// Samples n vertices: t = i/n for closed curves (no duplicated endpoint),
// t = i/(n-1) for open ones. Requires n >= 3 (closed) or n >= 2 (open).
Polyline sample_parametric(const ParametricCurve& curve, std::size_t n);

// Derivative of curve at t, analytic when available, otherwise a one-sided /
// central finite difference that never leaves [0, 1].
Point3 curve_derivative(const ParametricCurve& curve, double t);

// Row-major linear map plus translation.
struct Affine {
  double m[9] = {1, 0, 0, 0, 1, 0, 0, 0, 1};
  Vec3 t{};

  Point3 apply(const Point3& p) const {
    return {m[0] * p.x + m[1] * p.y + m[2] * p.z + t.x,
            m[3] * p.x + m[4] * p.y + m[5] * p.z + t.y,
            m[6] * p.x + m[7] * p.y + m[8] * p.z + t.z};
  }

  static Affine identity() { return {}; }
  static Affine translation(const Vec3& t);
  static Affine uniform_scale(double s);
  static Affine reflect_z();
  static Affine rotation(const Vec3& axis, double angle);
};

Polyline transform(const Polyline& p, const Affine& a);
Structure transform(const Structure& s, const Affine& a);

// Orientation reversal. For closed polylines the first vertex is kept first
// so the curve is traversed backwards from the same basepoint.
Polyline reversed(const Polyline& p);

}  // namespace mgli
