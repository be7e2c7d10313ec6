// SPDX-License-Identifier: Apache-2.0
//
// Shared helpers for the unit tests: reference curves, random geometry
// generators, and small conveniences.
#pragma once

#include <cmath>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "core/geometry.hpp"
#include "core/segmentation.hpp"

namespace mgli::test {

inline constexpr double kTau = 6.28318530717958647692;

// The canonical linked circle pair: gamma1 is the unit circle in the
// xy-plane, gamma2 the unit circle in the xz-plane centred at (1,0,0).
// Their linking number is -1 under this orientation convention.
inline ParametricCurve hopf_gamma1() {
  ParametricCurve c;
  c.closed = true;
  c.eval = [](double t) {
    return Point3{std::cos(kTau * t), std::sin(kTau * t), 0.0};
  };
  c.deriv = [](double t) {
    return Point3{-kTau * std::sin(kTau * t), kTau * std::cos(kTau * t), 0.0};
  };
  return c;
}

inline ParametricCurve hopf_gamma2() {
  ParametricCurve c;
  c.closed = true;
  c.eval = [](double t) {
    return Point3{std::cos(kTau * t) + 1.0, 0.0, std::sin(kTau * t)};
  };
  c.deriv = [](double t) {
    return Point3{-kTau * std::sin(kTau * t), 0.0, kTau * std::cos(kTau * t)};
  };
  return c;
}

// Continuous value of the (0,0) entry of the 4x4 Hopf segmentation matrix.
inline constexpr double kHopfG1Entry00 = -0.06398745728230472;

inline Polyline circle_polyline(std::size_t n, double radius = 1.0,
                                Point3 center = {}, int plane = 0) {
  Polyline p;
  p.closed = true;
  for (std::size_t k = 0; k < n; ++k) {
    const double t = kTau * static_cast<double>(k) / static_cast<double>(n);
    const double c = radius * std::cos(t), s = radius * std::sin(t);
    Point3 v = center;
    if (plane == 0) {
      v.x += c;
      v.y += s;
    } else {
      v.x += c;
      v.z += s;
    }
    p.vertices.push_back(v);
  }
  return p;
}

// Random open polyline inside an axis-aligned box.
inline Polyline random_polyline(std::mt19937_64& rng, std::size_t n, Point3 lo,
                                Point3 hi, bool closed = false) {
  std::uniform_real_distribution<double> ux(lo.x, hi.x), uy(lo.y, hi.y),
      uz(lo.z, hi.z);
  Polyline p;
  p.closed = closed;
  while (p.vertices.size() < n) {
    Point3 v{ux(rng), uy(rng), uz(rng)};
    if (!p.vertices.empty() && distance(v, p.vertices.back()) < 1e-3) continue;
    p.vertices.push_back(v);
  }
  if (closed && distance(p.vertices.front(), p.vertices.back()) < 1e-3)
    p.vertices.back().z += 0.1;
  return p;
}

inline std::shared_ptr<const Structure> make_structure(
    std::vector<std::pair<std::string, Polyline>> comps) {
  auto s = std::make_shared<Structure>();
  for (auto& [name, poly] : comps) s->components.push_back({name, std::move(poly)});
  s->validate();
  return s;
}

inline std::string data_path(const std::string& name) {
  return std::string(MGLI_TEST_DATA_DIR) + "/" + name;
}

}  // namespace mgli::test
