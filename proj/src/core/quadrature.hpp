// SPDX-License-Identifier: Apache-2.0
//
// Adaptive tensor-product Gauss-Legendre quadrature for the continuous
// Gauss linking integral of two parametric curves. Serves as the direct
// (definition-level) evaluation that the exact edge-pair kernel is tested
// against, and as the tool for smooth-curve reference values.

#pragma once

#include <cstddef>
#include <vector>

#include "geometry.hpp"

namespace mgli {

struct QuadratureOptions {
  double abs_tol = 1e-7;           // absolute tolerance on the integral
  std::size_t max_cells = 1u << 20;  // cell budget before giving up
};

struct QuadratureResult {
  double value = 0.0;        // best estimate (high-order rule over all cells)
  double error_bound = 0.0;  // sum of per-cell rule differences
  std::size_t cells = 0;     // leaf cells evaluated
};

// Gauss linking integral of curve1 over s in [s0,s1] against curve2 over
// t in [t0,t1], refined until the error bound drops below abs_tol.
// Throws ConvergenceFailure (carrying the best estimate and bound) if the
// cell budget runs out first.
QuadratureResult gauss_integral_quadrature(const ParametricCurve& curve1,
                                           const ParametricCurve& curve2,
                                           double s0, double s1, double t0, double t1,
                                           const QuadratureOptions& opts = {});

// Full-domain convenience overload: s, t in [0,1].
QuadratureResult gauss_integral_quadrature(const ParametricCurve& curve1,
                                           const ParametricCurve& curve2,
                                           const QuadratureOptions& opts = {});

// Piecewise-linear parametric view of an open vertex walk, with uniform
// parameter speed per edge and exact piecewise-constant derivative.
ParametricCurve walk_curve(std::vector<Point3> walk);

}  // namespace mgli
