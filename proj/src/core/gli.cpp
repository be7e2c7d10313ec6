// SPDX-License-Identifier: Apache-2.0

#include "gli.hpp"

#include <algorithm>
#include <cmath>

#include "threading.hpp"

namespace mgli {

namespace {

constexpr double kPi = 3.14159265358979323846;
// Relative gate below which the constant edge-pair determinant is treated
// as numerically zero (parallel or coplanar edges).
constexpr double kCoplanarGate = 1e-11;
// Relative separation below which coplanar edges count as touching.
constexpr double kTouchGate = 1e-12;

// Signed area of the spherical triangle spanned by unit vectors, via
// Van Oosterom & Strackee. Keeping the argument order fixed makes the
// value negate exactly under coordinate reflection.
inline double spherical_triangle(const Vec3& v1, const Vec3& v2, const Vec3& v3) {
  const double num = triple(v1, v2, v3);
  const double den = 1.0 + dot(v1, v2) + dot(v2, v3) + dot(v3, v1);
  return 2.0 * std::atan2(num, den);
}

}  // namespace

double min_segment_distance(const Point3& a0, const Point3& a1,
                            const Point3& b0, const Point3& b1) {
  // Closest points between segments with clamped parameters (Ericson).
  const Vec3 d1 = a1 - a0;
  const Vec3 d2 = b1 - b0;
  const Vec3 r = a0 - b0;
  const double A = dot(d1, d1);
  const double E = dot(d2, d2);
  const double F = dot(d2, r);
  double s = 0.0, t = 0.0;
  if (A <= 0.0 && E <= 0.0) return norm(r);
  if (A <= 0.0) {
    t = std::clamp(F / E, 0.0, 1.0);
  } else {
    const double C = dot(d1, r);
    if (E <= 0.0) {
      s = std::clamp(-C / A, 0.0, 1.0);
    } else {
      const double B = dot(d1, d2);
      const double denom = A * E - B * B;
      if (denom > 0.0) s = std::clamp((B * F - C * E) / denom, 0.0, 1.0);
      t = (B * s + F) / E;
      if (t < 0.0) {
        t = 0.0;
        s = std::clamp(-C / A, 0.0, 1.0);
      } else if (t > 1.0) {
        t = 1.0;
        s = std::clamp((B - C) / A, 0.0, 1.0);
      }
    }
  }
  return norm((a0 + d1 * s) - (b0 + d2 * t));
}

double edge_pair_gli(const Point3& a0, const Point3& a1,
                     const Point3& b0, const Point3& b1) {
  if (exactly_equal(a0, a1) || exactly_equal(b0, b1))
    throw Error(ErrorCode::degenerate_geometry,
                "edge endpoints coincide; direction is undefined");

  // A shared endpoint is the boundary case of consecutive edges along one
  // curve; its limiting contribution is zero.
  if (exactly_equal(a0, b0) || exactly_equal(a0, b1) ||
      exactly_equal(a1, b0) || exactly_equal(a1, b1))
    return +0.0;

  // Canonicalize the endpoint order of each edge with a reflection-
  // invariant comparator, tracking the orientation in `flip`. All
  // arithmetic below then sees the same operands regardless of the
  // caller's edge direction, which makes reversal an exact negation.
  const Point3* p0 = &a0;
  const Point3* p1 = &a1;
  const Point3* q0 = &b0;
  const Point3* q1 = &b1;
  double flip = 1.0;
  if (reflect_invariant_less(*p1, *p0)) { std::swap(p0, p1); flip = -flip; }
  if (reflect_invariant_less(*q1, *q0)) { std::swap(q0, q1); flip = -flip; }
  // The integral is symmetric in its two edges, so order the pair as well:
  // both call orders then execute identical instructions and the symmetry
  // holds bitwise. No sign change. (*p0 == *q0 would have been caught by
  // the shared-endpoint test above, so the comparison is strict.)
  if (reflect_invariant_less(*q0, *p0)) {
    std::swap(p0, q0);
    std::swap(p1, q1);
  }

  const Vec3 u = *p1 - *p0;
  const Vec3 v = *q1 - *q0;
  // det(u, v, w) is the same for every pair of points on the two lines,
  // so the integrand never changes sign across an edge pair. A zero
  // determinant means parallel or coplanar edges: their GLI vanishes,
  // unless they actually touch, which is a genuine singularity.
  const double det0 = triple(u, v, *p0 - *q0);
  const double w_scale = std::max(std::max(norm(*p0 - *q0), norm(*p1 - *q0)),
                                  std::max(norm(*p1 - *q1), norm(*p0 - *q1)));
  const double gate = kCoplanarGate * norm(u) * norm(v) * w_scale;
  if (std::fabs(det0) <= gate) {
    const double sep = min_segment_distance(*p0, *p1, *q0, *q1);
    if (sep <= kTouchGate * std::max(norm(u), norm(v)))
      throw Error(ErrorCode::singular_configuration,
                  "edges touch or cross; Gauss integral is singular");
    if (det0 == 0.0) return 0.0;
  }

  // Solid angle of the spherical quadrilateral traced by the direction
  // map over the two edges, split along the fixed A-C diagonal.
  const Vec3 A = normalized(*p0 - *q0);
  const Vec3 B = normalized(*p1 - *q0);
  const Vec3 C = normalized(*p1 - *q1);
  const Vec3 D = normalized(*p0 - *q1);
  const double omega = spherical_triangle(A, B, C) + spherical_triangle(A, C, D);
  return -flip * omega * (1.0 / (4.0 * kPi));
}

namespace {

// True when a walk already runs in its canonical direction. Cyclic walks
// (first vertex repeated at the end) compare the neighbours of the base
// point instead of the equal endpoints.
bool canonical_forward(const std::vector<Point3>& w) {
  const std::size_t n = w.size();
  if (n < 2) return true;
  if (exactly_equal(w.front(), w.back())) {
    if (n < 3) return true;
    return !reflect_invariant_less(w[n - 2], w[1]);
  }
  return !reflect_invariant_less(w.back(), w.front());
}

double oriented_walk_sum(const std::vector<Point3>& a, const std::vector<Point3>& b,
                         GliMode mode, double sign) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < a.size(); ++i)
    for (std::size_t j = 0; j + 1 < b.size(); ++j) {
      const double g = edge_pair_gli(a[i], a[i + 1], b[j], b[j + 1]);
      total += (mode == GliMode::absolute) ? std::fabs(g) : g;
    }
  return (mode == GliMode::absolute) ? total : sign * total;
}

}  // namespace

double walk_gli(const std::vector<Point3>& a, const std::vector<Point3>& b,
                GliMode mode) {
  if (a.size() < 2 || b.size() < 2)
    throw Error(ErrorCode::invalid_argument, "walks need at least two vertices");
  double sign = 1.0;
  std::vector<Point3> wa = a;
  std::vector<Point3> wb = b;
  if (!canonical_forward(wa)) { std::reverse(wa.begin(), wa.end()); sign = -sign; }
  if (!canonical_forward(wb)) { std::reverse(wb.begin(), wb.end()); sign = -sign; }
  return oriented_walk_sum(wa, wb, mode, sign);
}

namespace {

std::vector<Point3> polyline_walk(const Polyline& p) {
  std::vector<Point3> w = p.vertices;
  if (p.closed && !w.empty()) w.push_back(w.front());
  return w;
}

}  // namespace

double polyline_gli(const Polyline& a, const Polyline& b, GliMode mode) {
  a.validate();
  b.validate();
  return walk_gli(polyline_walk(a), polyline_walk(b), mode);
}

double GliMatrix::grand_sum() const {
  double total = 0.0;
  for (double v : values) total += v;
  return total;
}

namespace {

void sort_flags(std::vector<EntryFlag>& flags) {
  std::sort(flags.begin(), flags.end(), [](const EntryFlag& x, const EntryFlag& y) {
    if (x.row != y.row) return x.row < y.row;
    if (x.col != y.col) return x.col < y.col;
    return static_cast<int>(x.kind) < static_cast<int>(y.kind);
  });
}

}  // namespace

GliMatrix segmentation_matrix(const Segmentation& row_seg, const Segmentation& col_seg,
                              GliMode mode) {
  const std::size_t R = row_seg.size();
  const std::size_t C = col_seg.size();
  if (R == 0 || C == 0)
    throw Error(ErrorCode::invalid_argument, "empty segmentation");

  GliMatrix m;
  m.rows = R;
  m.cols = C;
  m.mode = mode;
  m.values.assign(R * C, 0.0);
  m.distances.assign(R * C, 0.0);
  m.row_ids.reserve(R);
  m.col_ids.reserve(C);
  for (const Segment& s : row_seg.segments) m.row_ids.push_back(s.id);
  for (const Segment& s : col_seg.segments) m.col_ids.push_back(s.id);

  std::vector<std::vector<EntryFlag>> row_flags(R);
  parallel_for(R, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const Segment& a = row_seg.segments[i];
      for (std::size_t j = 0; j < C; ++j) {
        const Segment& b = col_seg.segments[j];
        m.distances[i * C + j] = distance(a.representative, b.representative);
        if (segments_overlap(row_seg, a, col_seg, b)) {
          row_flags[i].push_back({i, j, FlagKind::overlap});
          continue;
        }
        try {
          m.values[i * C + j] = walk_gli(a.vertices, b.vertices, mode);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::singular_configuration) throw;
          row_flags[i].push_back({i, j, FlagKind::singular});
        }
      }
    }
  });
  for (auto& rf : row_flags)
    m.flags.insert(m.flags.end(), rf.begin(), rf.end());
  sort_flags(m.flags);
  return m;
}

GliMatrix segmentation_matrix(const Segmentation& seg, GliMode mode) {
  const std::size_t N = seg.size();
  if (N == 0) throw Error(ErrorCode::invalid_argument, "empty segmentation");

  GliMatrix m;
  m.rows = N;
  m.cols = N;
  m.mode = mode;
  m.values.assign(N * N, 0.0);
  m.distances.assign(N * N, 0.0);
  m.row_ids.reserve(N);
  for (const Segment& s : seg.segments) m.row_ids.push_back(s.id);
  m.col_ids = m.row_ids;

  std::vector<std::vector<EntryFlag>> row_flags(N);
  parallel_for(N, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const Segment& a = seg.segments[i];
      row_flags[i].push_back({i, i, FlagKind::overlap});
      for (std::size_t j = i + 1; j < N; ++j) {
        const Segment& b = seg.segments[j];
        const double d = distance(a.representative, b.representative);
        m.distances[i * N + j] = d;
        m.distances[j * N + i] = d;
        if (segments_overlap(seg, a, seg, b)) {
          row_flags[i].push_back({i, j, FlagKind::overlap});
          continue;
        }
        try {
          // GLI is symmetric in its arguments; mirror the value so the
          // matrix is symmetric bit for bit.
          const double g = walk_gli(a.vertices, b.vertices, mode);
          m.values[i * N + j] = g;
          m.values[j * N + i] = g;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::singular_configuration) throw;
          row_flags[i].push_back({i, j, FlagKind::singular});
        }
      }
    }
  });
  for (auto& rf : row_flags)
    for (const EntryFlag& f : rf) {
      m.flags.push_back(f);
      if (f.row != f.col) m.flags.push_back({f.col, f.row, f.kind});
    }
  sort_flags(m.flags);
  return m;
}

}  // namespace mgli
