// SPDX-License-Identifier: Apache-2.0
//
// Minimal 3-vector used throughout the geometry and linking kernels.
// Deliberately hand-rolled: the hot loops live on these few operations and
// the exact-negation guarantees of the linking kernel depend on their plain,
// fixed evaluation order (no FMA contraction, see build flags).
#pragma once

#include <cmath>

namespace mgli {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;
};

using Point3 = Vec3;

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(const Vec3& a, double s) { return {a.x * s, a.y * s, a.z * s}; }
inline Vec3 operator*(double s, const Vec3& a) { return a * s; }
inline Vec3 operator/(const Vec3& a, double s) { return {a.x / s, a.y / s, a.z / s}; }
inline Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
// Scalar triple product a . (b x c).
inline double triple(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

inline double norm2(const Vec3& a) { return dot(a, a); }
inline double norm(const Vec3& a) { return std::sqrt(norm2(a)); }
inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }
inline Vec3 normalized(const Vec3& a) { return a / norm(a); }

inline bool exactly_equal(const Vec3& a, const Vec3& b) {
  return a.x == b.x && a.y == b.y && a.z == b.z;
}
inline bool finite(const Vec3& a) {
  return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

// Total order on points that is invariant under axis reflections (compares
// absolute coordinates first, signed coordinates only as a tie break). The
// linking kernel uses it to canonicalize edge traversal so that reversing a
// curve negates results exactly and reflecting it never changes which branch
// is taken.
inline bool reflect_invariant_less(const Vec3& p, const Vec3& q) {
  const double ap[3] = {std::fabs(p.x), std::fabs(p.y), std::fabs(p.z)};
  const double aq[3] = {std::fabs(q.x), std::fabs(q.y), std::fabs(q.z)};
  for (int i = 0; i < 3; ++i) {
    if (ap[i] < aq[i]) return true;
    if (ap[i] > aq[i]) return false;
  }
  const double sp[3] = {p.x, p.y, p.z};
  const double sq[3] = {q.x, q.y, q.z};
  for (int i = 0; i < 3; ++i) {
    if (sp[i] < sq[i]) return true;
    if (sp[i] > sq[i]) return false;
  }
  return false;
}

}  // namespace mgli
