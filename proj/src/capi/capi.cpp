// SPDX-License-Identifier: Apache-2.0
//
// extern "C" shared-library surface: opaque handles over the core types,
// with exceptions mapped to status codes and a thread-local error string.

#include "mgli/mgli.h"

#include <cstring>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "../core/crossings.hpp"
#include "../core/errors.hpp"
#include "../core/flexibility.hpp"
#include "../core/geometry.hpp"
#include "../core/gli.hpp"
#include "../core/io.hpp"
#include "../core/multiscale.hpp"
#include "../core/protein.hpp"
#include "../core/segmentation.hpp"

struct mgli_structure {
  std::shared_ptr<mgli::Structure> impl;
};
struct mgli_segmentation {
  mgli::Segmentation impl;
};
struct mgli_matrix {
  mgli::GliMatrix impl;
};
struct mgli_features {
  mgli::FeatureMatrix impl;
};
struct mgli_protein {
  mgli::ProteinChain impl;
};
struct mgli_fit {
  mgli::FitReport impl;
};
struct mgli_benchmark {
  mgli::BenchmarkReport impl;
};

namespace {

thread_local std::string g_last_error;

mgli_status status_from(mgli::ErrorCode code) {
  using mgli::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument: return MGLI_ERR_INVALID_ARGUMENT;
    case ErrorCode::degenerate_geometry: return MGLI_ERR_DEGENERATE_GEOMETRY;
    case ErrorCode::singular_configuration: return MGLI_ERR_SINGULAR_CONFIGURATION;
    case ErrorCode::convergence_failure: return MGLI_ERR_CONVERGENCE_FAILURE;
    case ErrorCode::parse_error: return MGLI_ERR_PARSE;
    case ErrorCode::not_found: return MGLI_ERR_NOT_FOUND;
    case ErrorCode::undefined_correlation: return MGLI_ERR_UNDEFINED_CORRELATION;
    case ErrorCode::io_error: return MGLI_ERR_IO;
    case ErrorCode::internal: return MGLI_ERR_INTERNAL;
  }
  return MGLI_ERR_INTERNAL;
}

template <typename Fn>
mgli_status wrap(Fn&& fn) noexcept {
  try {
    fn();
    g_last_error.clear();
    return MGLI_OK;
  } catch (const mgli::Error& e) {
    g_last_error = e.what();
    return status_from(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MGLI_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return MGLI_ERR_INTERNAL;
  }
}

mgli_status fail_null(const char* what) {
  g_last_error = std::string("null ") + what;
  return MGLI_ERR_INVALID_ARGUMENT;
}

mgli::GliMode mode_from(int mode) {
  if (mode == MGLI_MODE_SIGNED) return mgli::GliMode::signed_sum;
  if (mode == MGLI_MODE_ABSOLUTE) return mgli::GliMode::absolute;
  throw mgli::Error(mgli::ErrorCode::invalid_argument, "mode must be 0 (signed) or 1 (absolute)");
}

mgli::FeatureTransform transform_from(int transform) {
  switch (transform) {
    case MGLI_TRANSFORM_RAW: return mgli::FeatureTransform::raw;
    case MGLI_TRANSFORM_RECIPROCAL: return mgli::FeatureTransform::reciprocal;
    case MGLI_TRANSFORM_CONCAT: return mgli::FeatureTransform::concat;
    default:
      throw mgli::Error(mgli::ErrorCode::invalid_argument,
                        "transform must be 0 (raw), 1 (reciprocal) or 2 (concat)");
  }
}

const mgli::Component& component_at(const mgli_structure* s, size_t index) {
  if (index >= s->impl->components.size())
    throw mgli::Error(mgli::ErrorCode::not_found, "component index out of range");
  return s->impl->components[index];
}

void append_component(mgli_structure* s, mgli::Component&& comp) {
  s->impl->components.push_back(std::move(comp));
  try {
    s->impl->validate();
  } catch (...) {
    s->impl->components.pop_back();
    throw;
  }
}

}  // namespace

extern "C" {

const char* mgli_version(void) { return "0.1.0"; }

const char* mgli_last_error(void) { return g_last_error.c_str(); }

/* ---- structures ------------------------------------------------------ */

mgli_status mgli_structure_read(const char* path, mgli_structure** out) {
  if (!path || !out) return fail_null("argument");
  return wrap([&] {
    auto handle = std::make_unique<mgli_structure>();
    handle->impl = std::make_shared<mgli::Structure>(mgli::read_structure(path));
    *out = handle.release();
  });
}

mgli_status mgli_structure_create(mgli_structure** out) {
  if (!out) return fail_null("argument");
  return wrap([&] {
    auto handle = std::make_unique<mgli_structure>();
    handle->impl = std::make_shared<mgli::Structure>();
    *out = handle.release();
  });
}

mgli_status mgli_structure_add_component(mgli_structure* s, const char* name, int closed,
                                         const double* xyz, size_t n_vertices) {
  if (!s || !name || !xyz) return fail_null("argument");
  return wrap([&] {
    mgli::Component comp;
    comp.name = name;
    comp.poly.closed = closed != 0;
    comp.poly.vertices.reserve(n_vertices);
    for (size_t i = 0; i < n_vertices; ++i)
      comp.poly.vertices.push_back(
          mgli::Point3{xyz[3 * i], xyz[3 * i + 1], xyz[3 * i + 2]});
    append_component(s, std::move(comp));
  });
}

mgli_status mgli_structure_add_sampled(mgli_structure* s, const char* name, int closed,
                                       mgli_curve_fn fn, void* user, size_t n_vertices) {
  if (!s || !name || !fn) return fail_null("argument");
  return wrap([&] {
    mgli::ParametricCurve curve;
    curve.closed = closed != 0;
    curve.eval = [fn, user](double t) {
      double xyz[3] = {0.0, 0.0, 0.0};
      fn(t, user, xyz);
      return mgli::Point3{xyz[0], xyz[1], xyz[2]};
    };
    mgli::Component comp;
    comp.name = name;
    comp.poly = mgli::sample_parametric(curve, n_vertices);
    append_component(s, std::move(comp));
  });
}

mgli_status mgli_structure_component_count(const mgli_structure* s, size_t* out) {
  if (!s || !out) return fail_null("argument");
  return wrap([&] { *out = s->impl->components.size(); });
}

mgli_status mgli_structure_component_name(const mgli_structure* s, size_t index,
                                          const char** out) {
  if (!s || !out) return fail_null("argument");
  return wrap([&] { *out = component_at(s, index).name.c_str(); });
}

mgli_status mgli_structure_component_index(const mgli_structure* s, const char* name,
                                           size_t* out) {
  if (!s || !name || !out) return fail_null("argument");
  return wrap([&] {
    const size_t idx = s->impl->index_of(name);
    if (idx == mgli::Structure::npos)
      throw mgli::Error(mgli::ErrorCode::not_found,
                        std::string("no component named '") + name + "'");
    *out = idx;
  });
}

void mgli_structure_free(mgli_structure* s) { delete s; }

/* ---- whole-curve GLI ------------------------------------------------- */

mgli_status mgli_component_gli(const mgli_structure* s, size_t comp_a, size_t comp_b,
                               int mode, double* out) {
  if (!s || !out) return fail_null("argument");
  return wrap([&] {
    *out = mgli::polyline_gli(component_at(s, comp_a).poly, component_at(s, comp_b).poly,
                              mode_from(mode));
  });
}

mgli_status mgli_crossing_estimate(const mgli_structure* s, size_t comp_a, size_t comp_b,
                                   size_t n_directions, uint64_t seed, double* value,
                                   double* std_error) {
  if (!s || !value || !std_error) return fail_null("argument");
  return wrap([&] {
    const mgli::CrossingEstimate est = mgli::projection_crossing_estimate(
        component_at(s, comp_a).poly, component_at(s, comp_b).poly, n_directions, seed);
    *value = est.value;
    *std_error = est.std_error;
  });
}

/* ---- segmentations ---------------------------------------------------- */

mgli_status mgli_segmentation_create(const mgli_structure* s, int component,
                                     size_t pieces, mgli_segmentation** out) {
  if (!s || !out) return fail_null("argument");
  return wrap([&] {
    std::optional<size_t> comp;
    if (component >= 0) comp = static_cast<size_t>(component);
    auto handle = std::make_unique<mgli_segmentation>();
    handle->impl = mgli::equal_arc_segmentation(
        std::shared_ptr<const mgli::Structure>(s->impl), comp, pieces);
    *out = handle.release();
  });
}

mgli_status mgli_segmentation_size(const mgli_segmentation* seg, size_t* out) {
  if (!seg || !out) return fail_null("argument");
  return wrap([&] { *out = seg->impl.size(); });
}

void mgli_segmentation_free(mgli_segmentation* seg) { delete seg; }

/* ---- GLI matrices ------------------------------------------------------ */

mgli_status mgli_matrix_cross(const mgli_segmentation* rows, const mgli_segmentation* cols,
                              int mode, mgli_matrix** out) {
  if (!rows || !cols || !out) return fail_null("argument");
  return wrap([&] {
    auto handle = std::make_unique<mgli_matrix>();
    handle->impl = mgli::segmentation_matrix(rows->impl, cols->impl, mode_from(mode));
    *out = handle.release();
  });
}

mgli_status mgli_matrix_self(const mgli_segmentation* seg, int mode, mgli_matrix** out) {
  if (!seg || !out) return fail_null("argument");
  return wrap([&] {
    auto handle = std::make_unique<mgli_matrix>();
    handle->impl = mgli::segmentation_matrix(seg->impl, mode_from(mode));
    *out = handle.release();
  });
}

mgli_status mgli_matrix_shape(const mgli_matrix* m, size_t* rows, size_t* cols) {
  if (!m || !rows || !cols) return fail_null("argument");
  return wrap([&] {
    *rows = m->impl.rows;
    *cols = m->impl.cols;
  });
}

mgli_status mgli_matrix_values(const mgli_matrix* m, const double** out) {
  if (!m || !out) return fail_null("argument");
  return wrap([&] { *out = m->impl.values.data(); });
}

mgli_status mgli_matrix_distances(const mgli_matrix* m, const double** out) {
  if (!m || !out) return fail_null("argument");
  return wrap([&] { *out = m->impl.distances.data(); });
}

mgli_status mgli_matrix_row_id(const mgli_matrix* m, size_t i, const char** out) {
  if (!m || !out) return fail_null("argument");
  return wrap([&] {
    if (i >= m->impl.row_ids.size())
      throw mgli::Error(mgli::ErrorCode::not_found, "row index out of range");
    *out = m->impl.row_ids[i].c_str();
  });
}

mgli_status mgli_matrix_col_id(const mgli_matrix* m, size_t j, const char** out) {
  if (!m || !out) return fail_null("argument");
  return wrap([&] {
    if (j >= m->impl.col_ids.size())
      throw mgli::Error(mgli::ErrorCode::not_found, "column index out of range");
    *out = m->impl.col_ids[j].c_str();
  });
}

mgli_status mgli_matrix_grand_sum(const mgli_matrix* m, double* out) {
  if (!m || !out) return fail_null("argument");
  return wrap([&] { *out = m->impl.grand_sum(); });
}

mgli_status mgli_matrix_flag_count(const mgli_matrix* m, size_t* out) {
  if (!m || !out) return fail_null("argument");
  return wrap([&] { *out = m->impl.flags.size(); });
}

mgli_status mgli_matrix_flag(const mgli_matrix* m, size_t index, size_t* row, size_t* col,
                             int* kind) {
  if (!m || !row || !col || !kind) return fail_null("argument");
  return wrap([&] {
    if (index >= m->impl.flags.size())
      throw mgli::Error(mgli::ErrorCode::not_found, "flag index out of range");
    const mgli::EntryFlag& f = m->impl.flags[index];
    *row = f.row;
    *col = f.col;
    *kind = (f.kind == mgli::FlagKind::overlap) ? MGLI_FLAG_OVERLAP : MGLI_FLAG_SINGULAR;
  });
}

mgli_status mgli_matrix_scaled(const mgli_matrix* m, double r_lo, double r_hi,
                               int closed_upper, mgli_matrix** out) {
  if (!m || !out) return fail_null("argument");
  return wrap([&] {
    auto handle = std::make_unique<mgli_matrix>();
    handle->impl = mgli::scaled_matrix(
        m->impl, r_lo, r_hi,
        closed_upper ? mgli::BinClosure::closed : mgli::BinClosure::half_open);
    *out = handle.release();
  });
}

mgli_status mgli_matrix_write_csv(const mgli_matrix* m, const char* path) {
  if (!m || !path) return fail_null("argument");
  return wrap([&] { mgli::write_matrix_csv(m->impl, path); });
}

void mgli_matrix_free(mgli_matrix* m) { delete m; }

/* ---- multiscale features ---------------------------------------------- */

mgli_status mgli_features_localized(const mgli_matrix* m, const char* scheme,
                                    mgli_features** out) {
  if (!m || !scheme || !out) return fail_null("argument");
  return wrap([&] {
    auto handle = std::make_unique<mgli_features>();
    handle->impl = mgli::localized_features(m->impl, mgli::ScaleScheme::parse(scheme));
    *out = handle.release();
  });
}

mgli_status mgli_features_shape(const mgli_features* f, size_t* rows, size_t* cols) {
  if (!f || !rows || !cols) return fail_null("argument");
  return wrap([&] {
    *rows = f->impl.rows;
    *cols = f->impl.cols;
  });
}

mgli_status mgli_features_values(const mgli_features* f, const double** out) {
  if (!f || !out) return fail_null("argument");
  return wrap([&] { *out = f->impl.values.data(); });
}

mgli_status mgli_features_row_id(const mgli_features* f, size_t i, const char** out) {
  if (!f || !out) return fail_null("argument");
  return wrap([&] {
    if (i >= f->impl.row_ids.size())
      throw mgli::Error(mgli::ErrorCode::not_found, "row index out of range");
    *out = f->impl.row_ids[i].c_str();
  });
}

mgli_status mgli_features_column_label(const mgli_features* f, size_t t, const char** out) {
  if (!f || !out) return fail_null("argument");
  return wrap([&] {
    if (t >= f->impl.column_labels.size())
      throw mgli::Error(mgli::ErrorCode::not_found, "column index out of range");
    *out = f->impl.column_labels[t].c_str();
  });
}

mgli_status mgli_features_write_csv(const mgli_features* f, const char* path) {
  if (!f || !path) return fail_null("argument");
  return wrap([&] { mgli::write_features_csv(f->impl, path); });
}

void mgli_features_free(mgli_features* f) { delete f; }

/* ---- proteins ---------------------------------------------------------- */

mgli_status mgli_protein_read(const char* path, const char* chain, mgli_protein** out) {
  if (!path || !out) return fail_null("argument");
  return wrap([&] {
    std::optional<char> which;
    if (chain && chain[0] != '\0') {
      if (std::strlen(chain) != 1)
        throw mgli::Error(mgli::ErrorCode::invalid_argument,
                          "chain must be a single character");
      which = chain[0];
    }
    auto handle = std::make_unique<mgli_protein>();
    handle->impl = mgli::parse_pdb_ca(mgli::slurp(path), which);
    *out = handle.release();
  });
}

mgli_status mgli_protein_size(const mgli_protein* p, size_t* out) {
  if (!p || !out) return fail_null("argument");
  return wrap([&] { *out = p->impl.size(); });
}

mgli_status mgli_protein_chain_id(const mgli_protein* p, char* out) {
  if (!p || !out) return fail_null("argument");
  return wrap([&] { *out = p->impl.chain_id; });
}

mgli_status mgli_protein_residue(const mgli_protein* p, size_t i, int* res_seq,
                                 char* insertion_code, double* b_factor) {
  if (!p || !res_seq || !insertion_code || !b_factor) return fail_null("argument");
  return wrap([&] {
    if (i >= p->impl.residues.size())
      throw mgli::Error(mgli::ErrorCode::not_found, "residue index out of range");
    const mgli::Residue& r = p->impl.residues[i];
    *res_seq = r.res_seq;
    *insertion_code = r.insertion_code;
    *b_factor = r.b_factor;
  });
}

mgli_status mgli_protein_warning_count(const mgli_protein* p, size_t* out) {
  if (!p || !out) return fail_null("argument");
  return wrap([&] { *out = p->impl.warnings.size(); });
}

mgli_status mgli_protein_warning(const mgli_protein* p, size_t i, const char** out) {
  if (!p || !out) return fail_null("argument");
  return wrap([&] {
    if (i >= p->impl.warnings.size())
      throw mgli::Error(mgli::ErrorCode::not_found, "warning index out of range");
    *out = p->impl.warnings[i].c_str();
  });
}

mgli_status mgli_protein_matrix(const mgli_protein* p, int mode, mgli_matrix** out) {
  if (!p || !out) return fail_null("argument");
  return wrap([&] {
    auto handle = std::make_unique<mgli_matrix>();
    handle->impl = mgli::protein_matrix(p->impl, mode_from(mode));
    *out = handle.release();
  });
}

mgli_status mgli_protein_features(const mgli_protein* p, const char* scheme, int mode,
                                  mgli_features** out) {
  if (!p || !scheme || !out) return fail_null("argument");
  return wrap([&] {
    auto handle = std::make_unique<mgli_features>();
    handle->impl = mgli::protein_features(p->impl, mgli::ScaleScheme::parse(scheme),
                                          mode_from(mode));
    *out = handle.release();
  });
}

void mgli_protein_free(mgli_protein* p) { delete p; }

/* ---- B-factor fitting --------------------------------------------------- */

mgli_status mgli_fit_bfactor(const mgli_features* f, const double* b, size_t n,
                             int transform, double epsilon, double ridge_lambda,
                             mgli_fit** out) {
  if (!f || !b || !out) return fail_null("argument");
  return wrap([&] {
    mgli::FitOptions opts;
    opts.transform = transform_from(transform);
    opts.epsilon = epsilon;
    opts.ridge_lambda = ridge_lambda;
    auto handle = std::make_unique<mgli_fit>();
    handle->impl = mgli::fit_bfactor(f->impl, std::vector<double>(b, b + n), opts);
    *out = handle.release();
  });
}

mgli_status mgli_fit_weight_count(const mgli_fit* r, size_t* out) {
  if (!r || !out) return fail_null("argument");
  return wrap([&] { *out = r->impl.weights.size(); });
}

mgli_status mgli_fit_weights(const mgli_fit* r, const double** out) {
  if (!r || !out) return fail_null("argument");
  return wrap([&] { *out = r->impl.weights.data(); });
}

mgli_status mgli_fit_intercept(const mgli_fit* r, double* out) {
  if (!r || !out) return fail_null("argument");
  return wrap([&] { *out = r->impl.intercept; });
}

mgli_status mgli_fit_fitted(const mgli_fit* r, const double** out) {
  if (!r || !out) return fail_null("argument");
  return wrap([&] { *out = r->impl.fitted.data(); });
}

mgli_status mgli_fit_pearson(const mgli_fit* r, int* has_pearson, double* out) {
  if (!r || !has_pearson || !out) return fail_null("argument");
  return wrap([&] {
    *has_pearson = r->impl.pearson_r.has_value() ? 1 : 0;
    *out = r->impl.pearson_r.value_or(0.0);
  });
}

mgli_status mgli_fit_used_ridge(const mgli_fit* r, int* out) {
  if (!r || !out) return fail_null("argument");
  return wrap([&] { *out = r->impl.used_ridge ? 1 : 0; });
}

mgli_status mgli_fit_condition(const mgli_fit* r, double* out) {
  if (!r || !out) return fail_null("argument");
  return wrap([&] { *out = r->impl.condition; });
}

void mgli_fit_free(mgli_fit* r) { delete r; }

/* ---- benchmark ---------------------------------------------------------- */

mgli_status mgli_benchmark_run(const char* manifest_path, const char* scheme, int mode,
                               int transform, double epsilon, double ridge_lambda,
                               mgli_benchmark** out) {
  if (!manifest_path || !scheme || !out) return fail_null("argument");
  return wrap([&] {
    mgli::FitOptions opts;
    opts.transform = transform_from(transform);
    opts.epsilon = epsilon;
    opts.ridge_lambda = ridge_lambda;
    auto handle = std::make_unique<mgli_benchmark>();
    handle->impl = mgli::run_benchmark(manifest_path, mgli::ScaleScheme::parse(scheme),
                                       mode_from(mode), opts);
    *out = handle.release();
  });
}

mgli_status mgli_benchmark_row_count(const mgli_benchmark* b, size_t* out) {
  if (!b || !out) return fail_null("argument");
  return wrap([&] { *out = b->impl.rows.size(); });
}

mgli_status mgli_benchmark_row(const mgli_benchmark* b, size_t i, const char** pdb_id,
                               const char** chain, size_t* n_residues, int* has_r,
                               double* r, const char** status) {
  if (!b || !pdb_id || !chain || !n_residues || !has_r || !r || !status)
    return fail_null("argument");
  return wrap([&] {
    if (i >= b->impl.rows.size())
      throw mgli::Error(mgli::ErrorCode::not_found, "row index out of range");
    const mgli::BenchmarkRow& row = b->impl.rows[i];
    *pdb_id = row.pdb_id.c_str();
    *chain = row.chain.c_str();
    *n_residues = row.n_residues;
    *has_r = row.pearson_r.has_value() ? 1 : 0;
    *r = row.pearson_r.value_or(0.0);
    *status = row.status.c_str();
  });
}

mgli_status mgli_benchmark_mean(const mgli_benchmark* b, int* has_mean, double* out) {
  if (!b || !has_mean || !out) return fail_null("argument");
  return wrap([&] {
    *has_mean = b->impl.mean_r.has_value() ? 1 : 0;
    *out = b->impl.mean_r.value_or(0.0);
  });
}

mgli_status mgli_benchmark_failures(const mgli_benchmark* b, size_t* out) {
  if (!b || !out) return fail_null("argument");
  return wrap([&] { *out = b->impl.failures; });
}

mgli_status mgli_benchmark_write_csv(const mgli_benchmark* b, const char* path) {
  if (!b || !path) return fail_null("argument");
  return wrap([&] { mgli::write_benchmark_csv(b->impl, path); });
}

void mgli_benchmark_free(mgli_benchmark* b) { delete b; }

}  // extern "C"
