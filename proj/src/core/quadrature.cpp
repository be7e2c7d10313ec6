// SPDX-License-Identifier: Apache-2.0

#include "quadrature.hpp"

#include <cmath>
#include <memory>
#include <queue>
#include <utility>

#include "errors.hpp"

namespace mgli {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Gauss-Legendre nodes and weights on [-1, 1].
constexpr int kLoN = 5;
constexpr double kLoNodes[kLoN] = {
    -0.9061798459386640, -0.5384693101056831, 0.0,
    0.5384693101056831, 0.9061798459386640};
constexpr double kLoWeights[kLoN] = {
    0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
    0.4786286704993665, 0.2369268850561891};

constexpr int kHiN = 7;
constexpr double kHiNodes[kHiN] = {
    -0.9491079123427585, -0.7415311855993945, -0.4058451513773972, 0.0,
    0.4058451513773972, 0.7415311855993945, 0.9491079123427585};
constexpr double kHiWeights[kHiN] = {
    0.1294849661688697, 0.2797053914892766, 0.3818300505051189,
    0.4179591836734694, 0.3818300505051189, 0.2797053914892766,
    0.1294849661688697};

struct Cell {
  double s0, s1, t0, t1;
  double value;  // high-order estimate
  double err;    // |high - low|
};

struct CellErrLess {
  bool operator()(const Cell& a, const Cell& b) const { return a.err < b.err; }
};

// Eq.-style Gauss integrand with curve samples precomputed per axis.
template <int N>
double tensor_rule(const ParametricCurve& c1, const ParametricCurve& c2,
                   const Cell& cell, const double (&nodes)[N], const double (&weights)[N]) {
  const double mid_s = 0.5 * (cell.s0 + cell.s1);
  const double half_s = 0.5 * (cell.s1 - cell.s0);
  const double mid_t = 0.5 * (cell.t0 + cell.t1);
  const double half_t = 0.5 * (cell.t1 - cell.t0);

  Point3 p1[N], p2[N];
  Vec3 d1[N], d2[N];
  for (int i = 0; i < N; ++i) {
    const double s = mid_s + half_s * nodes[i];
    const double t = mid_t + half_t * nodes[i];
    p1[i] = c1.eval(s);
    d1[i] = curve_derivative(c1, s);
    p2[i] = c2.eval(t);
    d2[i] = curve_derivative(c2, t);
  }

  double sum = 0.0;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      const Vec3 r = p1[i] - p2[j];
      const double rn = norm(r);
      sum += weights[i] * weights[j] * triple(d1[i], d2[j], r) / (rn * rn * rn);
    }
  return sum * half_s * half_t * (1.0 / (4.0 * kPi));
}

Cell evaluate_cell(const ParametricCurve& c1, const ParametricCurve& c2,
                   double s0, double s1, double t0, double t1) {
  Cell cell{s0, s1, t0, t1, 0.0, 0.0};
  const double lo = tensor_rule(c1, c2, cell, kLoNodes, kLoWeights);
  const double hi = tensor_rule(c1, c2, cell, kHiNodes, kHiWeights);
  if (!std::isfinite(lo) || !std::isfinite(hi))
    throw Error(ErrorCode::singular_configuration,
                "Gauss integrand evaluated at coincident curve points");
  cell.value = hi;
  cell.err = std::fabs(hi - lo);
  return cell;
}

}  // namespace

QuadratureResult gauss_integral_quadrature(const ParametricCurve& curve1,
                                           const ParametricCurve& curve2,
                                           double s0, double s1, double t0, double t1,
                                           const QuadratureOptions& opts) {
  if (!curve1.eval || !curve2.eval)
    throw Error(ErrorCode::invalid_argument, "parametric curve has no eval function");
  if (!(s1 > s0) || !(t1 > t0))
    throw Error(ErrorCode::invalid_argument, "quadrature domain is empty");
  if (!(opts.abs_tol > 0.0))
    throw Error(ErrorCode::invalid_argument, "tolerance must be positive");

  std::priority_queue<Cell, std::vector<Cell>, CellErrLess> heap;
  Cell root = evaluate_cell(curve1, curve2, s0, s1, t0, t1);
  double total = root.value;
  double err = root.err;
  std::size_t cells = 1;
  heap.push(root);

  while (err > opts.abs_tol) {
    if (cells + 3 > opts.max_cells)
      throw ConvergenceFailure("quadrature cell budget exhausted", total, err);
    const Cell worst = heap.top();
    heap.pop();
    total -= worst.value;
    err -= worst.err;
    const double ms = 0.5 * (worst.s0 + worst.s1);
    const double mt = 0.5 * (worst.t0 + worst.t1);
    const Cell quads[4] = {
        evaluate_cell(curve1, curve2, worst.s0, ms, worst.t0, mt),
        evaluate_cell(curve1, curve2, ms, worst.s1, worst.t0, mt),
        evaluate_cell(curve1, curve2, worst.s0, ms, mt, worst.t1),
        evaluate_cell(curve1, curve2, ms, worst.s1, mt, worst.t1)};
    for (const Cell& q : quads) {
      total += q.value;
      err += q.err;
      heap.push(q);
    }
    cells += 3;
    // Guard against error-sum cancellation driving err slightly negative.
    if (err < 0.0) err = 0.0;
  }
  return {total, err, cells};
}

QuadratureResult gauss_integral_quadrature(const ParametricCurve& curve1,
                                           const ParametricCurve& curve2,
                                           const QuadratureOptions& opts) {
  return gauss_integral_quadrature(curve1, curve2, 0.0, 1.0, 0.0, 1.0, opts);
}

ParametricCurve walk_curve(std::vector<Point3> walk) {
  if (walk.size() < 2)
    throw Error(ErrorCode::invalid_argument, "walk needs at least two vertices");
  auto shared = std::make_shared<std::vector<Point3>>(std::move(walk));
  const double m = static_cast<double>(shared->size() - 1);
  ParametricCurve c;
  c.closed = false;
  c.eval = [shared, m](double t) {
    const double u = std::fmin(std::fmax(t, 0.0), 1.0) * m;
    std::size_t k = static_cast<std::size_t>(u);
    if (k >= shared->size() - 1) k = shared->size() - 2;
    const double local = u - static_cast<double>(k);
    return (*shared)[k] + ((*shared)[k + 1] - (*shared)[k]) * local;
  };
  c.deriv = [shared, m](double t) {
    const double u = std::fmin(std::fmax(t, 0.0), 1.0) * m;
    std::size_t k = static_cast<std::size_t>(u);
    if (k >= shared->size() - 1) k = shared->size() - 2;
    return ((*shared)[k + 1] - (*shared)[k]) * m;
  };
  return c;
}

}  // namespace mgli
