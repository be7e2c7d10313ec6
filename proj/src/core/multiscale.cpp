// SPDX-License-Identifier: Apache-2.0

#include "multiscale.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "threading.hpp"

namespace mgli {

void ScaleScheme::validate() const {
  if (edges.size() < 2)
    throw Error(ErrorCode::invalid_argument, "scale scheme needs at least two edges");
  if (!(edges.front() >= 0.0))
    throw Error(ErrorCode::invalid_argument, "scale edges must be non-negative");
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (!std::isfinite(edges[i]) || !std::isfinite(edges[i + 1]))
      throw Error(ErrorCode::invalid_argument, "scale edges must be finite");
    if (!(edges[i] < edges[i + 1]))
      throw Error(ErrorCode::invalid_argument, "scale edges must increase strictly");
  }
}

std::size_t ScaleScheme::bin_of(double d) const {
  if (edges.size() < 2 || d < edges.front() || d > edges.back()) return npos;
  if (d == edges.back()) return bins() - 1;
  const auto it = std::upper_bound(edges.begin(), edges.end(), d);
  return static_cast<std::size_t>(it - edges.begin()) - 1;
}

namespace {

std::string format_edge(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace

std::string ScaleScheme::bin_label(std::size_t t) const {
  return format_edge(edges[t]) + "-" + format_edge(edges[t + 1]);
}

ScaleScheme ScaleScheme::parse(const std::string& text) {
  ScaleScheme scheme;
  const auto parse_number = [&](const std::string& tok) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      throw Error(ErrorCode::invalid_argument, "bad number in scale scheme: '" + tok + "'");
    }
    if (used != tok.size())
      throw Error(ErrorCode::invalid_argument, "bad number in scale scheme: '" + tok + "'");
    return v;
  };

  std::vector<std::string> tokens;
  const char sep = (text.find(',') != std::string::npos) ? ',' : ':';
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, sep)) tokens.push_back(tok);

  if (sep == ',') {
    for (const std::string& t : tokens) scheme.edges.push_back(parse_number(t));
  } else {
    if (tokens.size() != 3)
      throw Error(ErrorCode::invalid_argument,
                  "scale scheme must be start:stop:step or a comma-separated edge list");
    const double start = parse_number(tokens[0]);
    const double stop = parse_number(tokens[1]);
    const double step = parse_number(tokens[2]);
    if (!(step > 0.0))
      throw Error(ErrorCode::invalid_argument, "scale step must be positive");
    if (!(stop > start))
      throw Error(ErrorCode::invalid_argument, "scale stop must exceed start");
    const double k_real = (stop - start) / step;
    const long long k = std::llround(k_real);
    if (k < 1 || std::fabs(start + static_cast<double>(k) * step - stop) >
                     1e-9 * std::max(1.0, std::fabs(stop)))
      throw Error(ErrorCode::invalid_argument,
                  "scale stop is not reachable from start by whole steps");
    for (long long i = 0; i < k; ++i)
      scheme.edges.push_back(start + static_cast<double>(i) * step);
    scheme.edges.push_back(stop);
  }
  scheme.validate();
  return scheme;
}

GliMatrix scaled_matrix(const GliMatrix& g, double r_lo, double r_hi, BinClosure closure) {
  if (!(r_lo < r_hi))
    throw Error(ErrorCode::invalid_argument, "scale interval must have r_lo < r_hi");
  GliMatrix out = g;
  for (std::size_t idx = 0; idx < out.values.size(); ++idx) {
    const double d = out.distances[idx];
    const bool inside =
        d >= r_lo && (closure == BinClosure::closed ? d <= r_hi : d < r_hi);
    if (!inside) out.values[idx] = 0.0;
  }
  return out;
}

FeatureMatrix localized_features(const GliMatrix& g, const ScaleScheme& scheme) {
  scheme.validate();
  FeatureMatrix f;
  f.rows = g.rows;
  f.cols = scheme.bins();
  f.values.assign(f.rows * f.cols, 0.0);
  f.row_ids = g.row_ids;
  f.scheme = scheme;
  f.mode = g.mode;
  f.column_labels.reserve(f.cols);
  for (std::size_t t = 0; t < f.cols; ++t) f.column_labels.push_back(scheme.bin_label(t));

  parallel_for(g.rows, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t j = 0; j < g.cols; ++j) {
        const std::size_t t = scheme.bin_of(g.dist(i, j));
        if (t != ScaleScheme::npos) f.values[i * f.cols + t] += g.value(i, j);
      }
  });
  return f;
}

}  // namespace mgli
