// SPDX-License-Identifier: Apache-2.0

#include "flexibility.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

namespace mgli {

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw Error(ErrorCode::invalid_argument,
                "pearson needs two equal-length vectors of size >= 2");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0)
    throw Error(ErrorCode::undefined_correlation,
                "correlation undefined: zero variance input");
  const double r = sxy / std::sqrt(sxx * syy);
  return std::clamp(r, -1.0, 1.0);
}

namespace {

Eigen::MatrixXd transformed_design(const FeatureMatrix& f, const FitOptions& opts) {
  if (!(opts.epsilon > 0.0))
    throw Error(ErrorCode::invalid_argument, "reciprocal epsilon must be positive");
  const std::size_t n = f.rows;
  const std::size_t p = f.cols;
  const bool raw = opts.transform == FeatureTransform::raw ||
                   opts.transform == FeatureTransform::concat;
  const bool rec = opts.transform == FeatureTransform::reciprocal ||
                   opts.transform == FeatureTransform::concat;
  const std::size_t cols = (raw ? p : 0) + (rec ? p : 0);
  Eigen::MatrixXd x(n, cols);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t c = 0;
    if (raw)
      for (std::size_t t = 0; t < p; ++t) x(i, c++) = f.value(i, t);
    if (rec)
      for (std::size_t t = 0; t < p; ++t) {
        const double g = 1.0 / (f.value(i, t) + opts.epsilon);
        if (!std::isfinite(g))
          throw Error(ErrorCode::invalid_argument,
                      "reciprocal transform hit a pole; use the raw transform "
                      "for signed features");
        x(i, c++) = g;
      }
  }
  return x;
}

}  // namespace

FitReport fit_bfactor(const FeatureMatrix& features, const std::vector<double>& b,
                      const FitOptions& opts) {
  if (features.rows != b.size())
    throw Error(ErrorCode::invalid_argument,
                "feature row count does not match B-factor count");
  if (b.size() < 2)
    throw Error(ErrorCode::invalid_argument, "fit needs at least two residues");
  if (!(opts.ridge_lambda >= 0.0))
    throw Error(ErrorCode::invalid_argument, "ridge lambda must be non-negative");
  {
    bool constant = true;
    for (std::size_t i = 1; i < b.size(); ++i)
      if (b[i] != b[0]) { constant = false; break; }
    if (constant)
      throw Error(ErrorCode::undefined_correlation,
                  "experimental B-factors are constant");
  }

  const Eigen::MatrixXd x = transformed_design(features, opts);
  const Eigen::Index n = x.rows();
  const Eigen::Index p = x.cols();
  Eigen::MatrixXd a(n, p + 1);
  a.leftCols(p) = x;
  a.col(p).setOnes();
  Eigen::VectorXd rhs = Eigen::Map<const Eigen::VectorXd>(b.data(),
                                                          static_cast<Eigen::Index>(b.size()));

  Eigen::BDCSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double smax = svd.singularValues()(0);
  const double smin = svd.singularValues()(svd.singularValues().size() - 1);
  // Condition of the normal system A^T A.
  const double cond = (smin > 0.0) ? (smax / smin) * (smax / smin)
                                   : std::numeric_limits<double>::infinity();

  FitReport report;
  report.options = opts;
  report.n_residues = static_cast<std::size_t>(n);
  report.condition = cond;
  report.used_ridge = !(cond <= 1e12);

  Eigen::VectorXd w;
  if (report.used_ridge) {
    Eigen::MatrixXd normal = a.transpose() * a;
    for (Eigen::Index j = 0; j < p; ++j) normal(j, j) += opts.ridge_lambda;
    // Intercept column is unpenalized.
    w = normal.ldlt().solve(a.transpose() * rhs);
  } else {
    w = svd.solve(rhs);
  }

  report.weights.assign(w.data(), w.data() + p);
  report.intercept = w(p);
  Eigen::VectorXd fitted = a * w;
  report.fitted.assign(fitted.data(), fitted.data() + n);
  for (double v : report.fitted)
    if (!std::isfinite(v))
      throw Error(ErrorCode::internal, "fit produced non-finite values");

  try {
    report.pearson_r = pearson(report.fitted, b);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::undefined_correlation) throw;
    report.pearson_r = std::nullopt;  // constant fit, e.g. all-zero features
  }
  return report;
}

namespace {

struct ManifestEntry {
  std::string path;
  std::optional<char> chain;
  std::string display_chain;
};

std::string trim_copy(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<ManifestEntry> read_manifest(const std::string& manifest_path) {
  std::ifstream in(manifest_path);
  if (!in)
    throw Error(ErrorCode::io_error, "cannot read manifest: " + manifest_path);
  const std::filesystem::path base = std::filesystem::path(manifest_path).parent_path();
  std::vector<ManifestEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim_copy(line);
    if (line.empty()) continue;
    ManifestEntry entry;
    const std::size_t comma = line.find(',');
    std::string path_part = trim_copy(line.substr(0, comma));
    if (comma != std::string::npos) {
      const std::string chain_part = trim_copy(line.substr(comma + 1));
      if (chain_part.size() != 1)
        throw Error(ErrorCode::parse_error,
                    "manifest line " + std::to_string(line_no) +
                        ": chain must be a single character");
      entry.chain = chain_part[0];
      entry.display_chain = chain_part;
    }
    if (path_part.empty())
      throw Error(ErrorCode::parse_error,
                  "manifest line " + std::to_string(line_no) + ": missing path");
    std::filesystem::path p(path_part);
    if (p.is_relative()) p = base / p;
    entry.path = p.string();
    entries.push_back(std::move(entry));
  }
  if (entries.empty())
    throw Error(ErrorCode::invalid_argument, "manifest lists no proteins");
  return entries;
}

}  // namespace

BenchmarkReport run_benchmark(const std::string& manifest_path, const ScaleScheme& scheme,
                              GliMode mode, const FitOptions& opts) {
  scheme.validate();
  const std::vector<ManifestEntry> entries = read_manifest(manifest_path);

  BenchmarkReport report;
  report.rows.reserve(entries.size());
  for (const ManifestEntry& entry : entries) {
    BenchmarkRow row;
    row.pdb_id = std::filesystem::path(entry.path).stem().string();
    row.chain = entry.display_chain;
    try {
      std::ifstream in(entry.path, std::ios::binary);
      if (!in) throw Error(ErrorCode::io_error, "cannot read " + entry.path);
      std::ostringstream text;
      text << in.rdbuf();
      const ProteinChain chain = parse_pdb_ca(text.str(), entry.chain);
      if (row.chain.empty()) row.chain = std::string(1, chain.chain_id);
      const FeatureMatrix f = protein_features(chain, scheme, mode);
      const FitReport fit = fit_bfactor(f, chain.b_factors(), opts);
      row.n_residues = chain.size();
      if (fit.pearson_r.has_value()) {
        row.pearson_r = fit.pearson_r;
        row.ok = true;
        row.status = "ok";
      } else {
        row.status = "undefined-correlation";
      }
    } catch (const Error& e) {
      row.status = std::string(error_code_name(e.code())) + ": " + e.what();
    } catch (const std::exception& e) {
      row.status = std::string("error: ") + e.what();
    }
    if (!row.ok) ++report.failures;
    report.rows.push_back(std::move(row));
  }

  double sum = 0.0;
  std::size_t n_ok = 0;
  for (const BenchmarkRow& row : report.rows)
    if (row.pearson_r.has_value()) {
      sum += *row.pearson_r;
      ++n_ok;
    }
  if (n_ok > 0) report.mean_r = sum / static_cast<double>(n_ok);
  return report;
}

}  // namespace mgli
