// SPDX-License-Identifier: Apache-2.0

#include "crossings.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "errors.hpp"
#include "threading.hpp"

namespace mgli {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;
// Relative projected-edge length below which a direction is rejected.
constexpr double kDegenerateProjection = 1e-12;
constexpr int kMaxResamples = 64;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

double uniform01(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

struct ProjectedEdge {
  double x0, y0, z0;  // start: plane coords + depth along the direction
  double x1, y1, z1;
  double dx, dy;
};

inline double cross2(double ax, double ay, double bx, double by) {
  return ax * by - ay * bx;
}

// Projects every edge of `poly`; returns false if any edge collapses.
bool project(const Polyline& poly, const Vec3& e1, const Vec3& e2, const Vec3& v,
             std::vector<ProjectedEdge>& out) {
  out.clear();
  const std::size_t n = poly.edge_count();
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point3 a = poly.edge_start(i);
    const Point3 b = poly.edge_end(i);
    ProjectedEdge e;
    e.x0 = dot(a, e1); e.y0 = dot(a, e2); e.z0 = dot(a, v);
    e.x1 = dot(b, e1); e.y1 = dot(b, e2); e.z1 = dot(b, v);
    e.dx = e.x1 - e.x0;
    e.dy = e.y1 - e.y0;
    const double plane_len = std::hypot(e.dx, e.dy);
    if (plane_len <= kDegenerateProjection * distance(a, b)) return false;
    out.push_back(e);
  }
  return true;
}

// Half the signed crossing sum between the projected curves.
double signed_crossings(const std::vector<ProjectedEdge>& pa,
                        const std::vector<ProjectedEdge>& pb) {
  double sum = 0.0;
  for (const ProjectedEdge& ea : pa)
    for (const ProjectedEdge& eb : pb) {
      const double denom = cross2(ea.dx, ea.dy, eb.dx, eb.dy);
      if (denom == 0.0) continue;
      const double rx = eb.x0 - ea.x0;
      const double ry = eb.y0 - ea.y0;
      const double t = cross2(rx, ry, eb.dx, eb.dy) / denom;
      const double u = cross2(rx, ry, ea.dx, ea.dy) / denom;
      if (!(t > 0.0 && t < 1.0 && u > 0.0 && u < 1.0)) continue;
      const double za = ea.z0 + t * (ea.z1 - ea.z0);
      const double zb = eb.z0 + u * (eb.z1 - eb.z0);
      if (za == zb) continue;  // measure-zero touch along the direction
      // Sign of the crossing: orientation of (over, under) edge directions.
      const double s = (za > zb) ? denom : -denom;
      sum += (s > 0.0) ? 1.0 : -1.0;
    }
  return 0.5 * sum;
}

}  // namespace

CrossingEstimate projection_crossing_estimate(const Polyline& a, const Polyline& b,
                                              std::size_t n_directions,
                                              std::uint64_t seed) {
  a.validate();
  b.validate();
  if (n_directions < 2)
    throw Error(ErrorCode::invalid_argument,
                "crossing estimate needs at least two directions");

  std::vector<double> per_direction(n_directions, 0.0);
  parallel_for(n_directions, [&](std::size_t begin, std::size_t end) {
    std::vector<ProjectedEdge> pa, pb;
    for (std::size_t k = begin; k < end; ++k) {
      std::mt19937_64 eng(splitmix64(seed + 0x9E3779B97F4A7C15ull * (k + 1)));
      bool ok = false;
      for (int attempt = 0; attempt < kMaxResamples && !ok; ++attempt) {
        const double u1 = uniform01(eng);
        const double u2 = uniform01(eng);
        const double z = 1.0 - 2.0 * u1;
        const double r = std::sqrt(std::fmax(0.0, 1.0 - z * z));
        const double phi = kTwoPi * u2;
        const Vec3 v{r * std::cos(phi), r * std::sin(phi), z};
        const Vec3 h = (std::fabs(v.x) < 0.9) ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
        const Vec3 e1 = normalized(cross(v, h));
        const Vec3 e2 = cross(v, e1);
        if (!project(a, e1, e2, v, pa) || !project(b, e1, e2, v, pb)) continue;
        per_direction[k] = signed_crossings(pa, pb);
        ok = true;
      }
      if (!ok)
        throw Error(ErrorCode::degenerate_geometry,
                    "projection degenerate for every sampled direction");
    }
  });

  double mean = 0.0;
  for (double v : per_direction) mean += v;
  mean /= static_cast<double>(n_directions);
  double ss = 0.0;
  for (double v : per_direction) ss += (v - mean) * (v - mean);
  const double variance = ss / static_cast<double>(n_directions - 1);
  CrossingEstimate est;
  est.value = mean;
  est.std_error = std::sqrt(variance / static_cast<double>(n_directions));
  est.directions = n_directions;
  return est;
}

}  // namespace mgli
