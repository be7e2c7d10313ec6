// SPDX-License-Identifier: Apache-2.0
//
// B-factor regression on multiscale GLI features, Pearson scoring, and
// the multi-protein benchmark harness.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "multiscale.hpp"
#include "protein.hpp"

namespace mgli {

// Sample Pearson correlation. Throws ErrorCode::undefined_correlation
// when either argument has zero variance.
double pearson(const std::vector<double>& x, const std::vector<double>& y);

enum class FeatureTransform { raw, reciprocal, concat };

struct FitOptions {
  FeatureTransform transform = FeatureTransform::reciprocal;
  double epsilon = 1e-3;       // reciprocal regularizer: g = 1 / (f + epsilon)
  double ridge_lambda = 1e-6;  // fallback ridge strength (intercept unpenalized)
};

struct FitReport {
  std::vector<double> weights;      // one per transformed feature column
  double intercept = 0.0;
  std::vector<double> fitted;       // predicted B-factor per residue
  std::optional<double> pearson_r;  // empty when the fit is constant
  bool used_ridge = false;
  double condition = 0.0;           // normal-system condition estimate
  std::size_t n_residues = 0;
  FitOptions options;
};

// Least-squares fit b ~ X w + c with the chosen feature transform and an
// always-included intercept; falls back to ridge when the normal system
// is ill-conditioned. Throws undefined_correlation when the experimental
// B-factors are constant; a constant *fitted* vector instead yields an
// empty pearson_r.
FitReport fit_bfactor(const FeatureMatrix& features, const std::vector<double>& b,
                      const FitOptions& opts = {});

struct BenchmarkRow {
  std::string pdb_id;
  std::string chain;  // empty = first chain in the file
  std::size_t n_residues = 0;
  std::optional<double> pearson_r;
  std::string status;  // "ok" or an error description
  bool ok = false;
};

struct BenchmarkReport {
  std::vector<BenchmarkRow> rows;
  std::optional<double> mean_r;  // over successful rows
  std::size_t failures = 0;
};

// Runs the full pipeline for every `path[,chain]` line of a manifest
// file ('#' comments allowed; paths resolved relative to the manifest).
// Per-protein failures become failed rows; the batch never aborts.
BenchmarkReport run_benchmark(const std::string& manifest_path, const ScaleScheme& scheme,
                              GliMode mode, const FitOptions& opts);

}  // namespace mgli
