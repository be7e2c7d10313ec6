// SPDX-License-Identifier: Apache-2.0

#include "geometry.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace mgli {

double Polyline::length() const {
  double total = 0.0;
  const std::size_t edges = edge_count();
  for (std::size_t i = 0; i < edges; ++i) total += distance(edge_start(i), edge_end(i));
  return total;
}

void Polyline::validate() const {
  const std::size_t min_vertices = closed ? 3 : 2;
  if (vertices.size() < min_vertices)
    throw Error(ErrorCode::invalid_argument,
                closed ? "closed polyline needs at least 3 vertices"
                       : "polyline needs at least 2 vertices");
  for (const Point3& p : vertices)
    if (!finite(p)) throw Error(ErrorCode::invalid_argument, "polyline vertex is not finite");
  const std::size_t edges = edge_count();
  for (std::size_t i = 0; i < edges; ++i)
    if (exactly_equal(edge_start(i), edge_end(i)))
      throw Error(ErrorCode::degenerate_geometry,
                  "coincident consecutive vertices at edge " + std::to_string(i));
}

std::size_t Structure::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < components.size(); ++i)
    if (components[i].name == name) return i;
  return npos;
}

const Component& Structure::at(const std::string& name) const {
  std::size_t i = index_of(name);
  if (i == npos) throw Error(ErrorCode::not_found, "no component named '" + name + "'");
  return components[i];
}

void Structure::validate() const {
  if (components.empty())
    throw Error(ErrorCode::invalid_argument, "structure has no components");
  std::set<std::string> seen;
  for (const Component& c : components) {
    if (c.name.empty())
      throw Error(ErrorCode::invalid_argument, "component name must not be empty");
    if (!seen.insert(c.name).second)
      throw Error(ErrorCode::invalid_argument, "duplicate component name '" + c.name + "'");
    c.poly.validate();
  }
}

Polyline sample_parametric(const ParametricCurve& curve, std::size_t n) {
  if (!curve.eval) throw Error(ErrorCode::invalid_argument, "parametric curve has no evaluator");
  const std::size_t min_n = curve.closed ? 3 : 2;
  if (n < min_n)
    throw Error(ErrorCode::invalid_argument,
                "need at least " + std::to_string(min_n) + " samples");
  Polyline out;
  out.closed = curve.closed;
  out.vertices.reserve(n);
  const double denom = curve.closed ? static_cast<double>(n) : static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) out.vertices.push_back(curve.eval(i / denom));
  out.validate();
  return out;
}

Point3 curve_derivative(const ParametricCurve& curve, double t) {
  if (curve.deriv) return curve.deriv(t);
  const double h = 1e-5;
  if (t >= h && t <= 1.0 - h) {
    return (curve.eval(t + h) - curve.eval(t - h)) / (2.0 * h);
  }
  // Second-order one-sided difference at the ends of the domain.
  if (t < h) {
    Point3 f0 = curve.eval(t), f1 = curve.eval(t + h), f2 = curve.eval(t + 2 * h);
    return (f0 * -3.0 + f1 * 4.0 - f2) / (2.0 * h);
  }
  Point3 f0 = curve.eval(t), f1 = curve.eval(t - h), f2 = curve.eval(t - 2 * h);
  return (f0 * 3.0 - f1 * 4.0 + f2) / (2.0 * h);
}

Affine Affine::translation(const Vec3& t) {
  Affine a;
  a.t = t;
  return a;
}

Affine Affine::uniform_scale(double s) {
  Affine a;
  a.m[0] = a.m[4] = a.m[8] = s;
  return a;
}

Affine Affine::reflect_z() {
  Affine a;
  a.m[8] = -1.0;
  return a;
}

Affine Affine::rotation(const Vec3& axis, double angle) {
  const double n = norm(axis);
  if (!(n > 0.0) || !std::isfinite(n))
    throw Error(ErrorCode::invalid_argument, "rotation axis must be nonzero");
  const Vec3 u = axis / n;
  const double c = std::cos(angle), s = std::sin(angle), oc = 1.0 - c;
  Affine a;
  a.m[0] = c + u.x * u.x * oc;
  a.m[1] = u.x * u.y * oc - u.z * s;
  a.m[2] = u.x * u.z * oc + u.y * s;
  a.m[3] = u.y * u.x * oc + u.z * s;
  a.m[4] = c + u.y * u.y * oc;
  a.m[5] = u.y * u.z * oc - u.x * s;
  a.m[6] = u.z * u.x * oc - u.y * s;
  a.m[7] = u.z * u.y * oc + u.x * s;
  a.m[8] = c + u.z * u.z * oc;
  return a;
}

Polyline transform(const Polyline& p, const Affine& a) {
  Polyline out = p;
  for (Point3& v : out.vertices) v = a.apply(v);
  return out;
}

Structure transform(const Structure& s, const Affine& a) {
  Structure out = s;
  for (Component& c : out.components) c.poly = transform(c.poly, a);
  return out;
}

Polyline reversed(const Polyline& p) {
  Polyline out = p;
  if (p.closed && p.vertices.size() > 1) {
    // Keep the basepoint, reverse the rest of the cycle.
    out.vertices.clear();
    out.vertices.push_back(p.vertices.front());
    for (std::size_t i = p.vertices.size(); i > 1; --i) out.vertices.push_back(p.vertices[i - 1]);
  } else {
    std::reverse(out.vertices.begin(), out.vertices.end());
  }
  return out;
}

}  // namespace mgli
