// SPDX-License-Identifier: Apache-2.0
//
// Error taxonomy shared by the whole library. Every failure surfaces as an
// mgli::Error carrying one of these codes; the C API maps them 1:1 onto
// status values.
#pragma once

#include <stdexcept>
#include <string>

namespace mgli {

enum class ErrorCode {
  invalid_argument,
  degenerate_geometry,
  singular_configuration,
  convergence_failure,
  parse_error,
  not_found,
  undefined_correlation,
  io_error,
  internal,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::degenerate_geometry: return "degenerate-geometry";
    case ErrorCode::singular_configuration: return "singular-configuration";
    case ErrorCode::convergence_failure: return "convergence-failure";
    case ErrorCode::parse_error: return "parse-error";
    case ErrorCode::not_found: return "not-found";
    case ErrorCode::undefined_correlation: return "undefined-correlation";
    case ErrorCode::io_error: return "io-error";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Thrown when adaptive quadrature exhausts its refinement budget; carries the
// last estimate so callers can still inspect how far the integral got.
class ConvergenceFailure : public Error {
 public:
  ConvergenceFailure(const std::string& what, double estimate, double error_bound)
      : Error(ErrorCode::convergence_failure, what),
        estimate_(estimate),
        error_bound_(error_bound) {}
  double estimate() const { return estimate_; }
  double error_bound() const { return error_bound_; }

 private:
  double estimate_;
  double error_bound_;
};

}  // namespace mgli
