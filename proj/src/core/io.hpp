// SPDX-License-Identifier: Apache-2.0
//
// File formats: structure JSON/CSV input and CSV export of matrices,
// features, and benchmark reports. All real cells use %.9g so identical
// runs produce byte-identical artifacts.

#pragma once

#include <string>

#include "flexibility.hpp"
#include "geometry.hpp"
#include "gli.hpp"
#include "multiscale.hpp"

namespace mgli {

// Reads a whole file; ErrorCode::io_error when unreadable.
std::string slurp(const std::string& path);

// {"components":[{"name":..., "closed":..., "vertices":[[x,y,z],...]},...]}
Structure read_structure_json(const std::string& path);

// Header `component,x,y,z`, one vertex per row, components in order of
// first appearance. All components are open unless a JSON sidecar
// `<path>.meta` of the form {"closed": ["name", ...]} marks them closed.
Structure read_structure_csv(const std::string& path);

// Dispatches on the file extension (.json or .csv).
Structure read_structure(const std::string& path);

// "m.csv" -> "m.dist.csv": path of the companion distance matrix.
std::string distance_csv_path(const std::string& values_path);

// Writes the value matrix to `path` and the distance matrix to
// distance_csv_path(path). First row = column segment ids, first column
// = row segment ids.
void write_matrix_csv(const GliMatrix& m, const std::string& path);

// Header row of bin labels, one row per segment id.
void write_features_csv(const FeatureMatrix& f, const std::string& path);

// Columns pdb_id,chain,n_residues,pearson_r,status; one final comment
// line with the mean Pearson r over successful rows.
void write_benchmark_csv(const BenchmarkReport& report, const std::string& path);

std::string format_real(double v);  // %.9g

}  // namespace mgli
