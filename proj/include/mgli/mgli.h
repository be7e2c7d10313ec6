/* SPDX-License-Identifier: Apache-2.0
 *
 * mgli — multiscale Gauss linking integral library: C API.
 *
 * All functions return MGLI_OK (0) on success or a nonzero mgli_status;
 * mgli_last_error() describes the most recent failure on the calling
 * thread. Out-parameters are written only on success. Pointers returned
 * by getters borrow from their handle and stay valid until the handle is
 * freed.
 */

#ifndef MGLI_H
#define MGLI_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#  ifdef MGLI_BUILD
#    define MGLI_API __declspec(dllexport)
#  else
#    define MGLI_API __declspec(dllimport)
#  endif
#else
#  define MGLI_API __attribute__((visibility("default")))
#endif

typedef enum mgli_status {
  MGLI_OK = 0,
  MGLI_ERR_INVALID_ARGUMENT = 1,
  MGLI_ERR_DEGENERATE_GEOMETRY = 2,
  MGLI_ERR_SINGULAR_CONFIGURATION = 3,
  MGLI_ERR_CONVERGENCE_FAILURE = 4,
  MGLI_ERR_PARSE = 5,
  MGLI_ERR_NOT_FOUND = 6,
  MGLI_ERR_UNDEFINED_CORRELATION = 7,
  MGLI_ERR_IO = 8,
  MGLI_ERR_INTERNAL = 9
} mgli_status;

/* GLI accumulation modes. */
#define MGLI_MODE_SIGNED 0
#define MGLI_MODE_ABSOLUTE 1

/* Feature transforms for B-factor fitting. */
#define MGLI_TRANSFORM_RAW 0
#define MGLI_TRANSFORM_RECIPROCAL 1
#define MGLI_TRANSFORM_CONCAT 2

/* Diagnostic flag kinds on matrix entries. */
#define MGLI_FLAG_OVERLAP 0
#define MGLI_FLAG_SINGULAR 1

typedef struct mgli_structure mgli_structure;
typedef struct mgli_segmentation mgli_segmentation;
typedef struct mgli_matrix mgli_matrix;
typedef struct mgli_features mgli_features;
typedef struct mgli_protein mgli_protein;
typedef struct mgli_fit mgli_fit;
typedef struct mgli_benchmark mgli_benchmark;

/* Parametric curve callback: writes the point at t in [0,1] to out_xyz. */
typedef void (*mgli_curve_fn)(double t, void* user, double out_xyz[3]);

MGLI_API const char* mgli_version(void);

/* Message for the most recent failure on this thread ("" if none). */
MGLI_API const char* mgli_last_error(void);

/* ---- structures ------------------------------------------------------ */

/* Reads a structure file (.json or .csv, see README formats). */
MGLI_API mgli_status mgli_structure_read(const char* path, mgli_structure** out);

MGLI_API mgli_status mgli_structure_create(mgli_structure** out);

/* Appends a component with explicit vertices (xyz interleaved, 3*n). */
MGLI_API mgli_status mgli_structure_add_component(mgli_structure* s, const char* name,
                                                  int closed, const double* xyz,
                                                  size_t n_vertices);

/* Appends a component sampled from a parametric curve at n points
 * (t = i/n when closed, i/(n-1) when open). */
MGLI_API mgli_status mgli_structure_add_sampled(mgli_structure* s, const char* name,
                                                int closed, mgli_curve_fn fn, void* user,
                                                size_t n_vertices);

MGLI_API mgli_status mgli_structure_component_count(const mgli_structure* s, size_t* out);
MGLI_API mgli_status mgli_structure_component_name(const mgli_structure* s, size_t index,
                                                   const char** out);
MGLI_API mgli_status mgli_structure_component_index(const mgli_structure* s,
                                                    const char* name, size_t* out);

MGLI_API void mgli_structure_free(mgli_structure* s);

/* ---- whole-curve GLI ------------------------------------------------- */

/* Total GLI between two components (exact edge-pair kernel). */
MGLI_API mgli_status mgli_component_gli(const mgli_structure* s, size_t comp_a,
                                        size_t comp_b, int mode, double* out);

/* Monte Carlo projected-crossing estimate between two components. */
MGLI_API mgli_status mgli_crossing_estimate(const mgli_structure* s, size_t comp_a,
                                            size_t comp_b, size_t n_directions,
                                            uint64_t seed, double* value,
                                            double* std_error);

/* ---- segmentations ---------------------------------------------------- */

/* Equal-arc split into `pieces` per component; component < 0 means all
 * components. */
MGLI_API mgli_status mgli_segmentation_create(const mgli_structure* s, int component,
                                              size_t pieces, mgli_segmentation** out);

MGLI_API mgli_status mgli_segmentation_size(const mgli_segmentation* seg, size_t* out);
MGLI_API void mgli_segmentation_free(mgli_segmentation* seg);

/* ---- GLI matrices ------------------------------------------------------ */

MGLI_API mgli_status mgli_matrix_cross(const mgli_segmentation* rows,
                                       const mgli_segmentation* cols, int mode,
                                       mgli_matrix** out);

/* Self-analysis matrix: symmetric, zero diagonal. */
MGLI_API mgli_status mgli_matrix_self(const mgli_segmentation* seg, int mode,
                                      mgli_matrix** out);

MGLI_API mgli_status mgli_matrix_shape(const mgli_matrix* m, size_t* rows, size_t* cols);
MGLI_API mgli_status mgli_matrix_values(const mgli_matrix* m, const double** out);
MGLI_API mgli_status mgli_matrix_distances(const mgli_matrix* m, const double** out);
MGLI_API mgli_status mgli_matrix_row_id(const mgli_matrix* m, size_t i, const char** out);
MGLI_API mgli_status mgli_matrix_col_id(const mgli_matrix* m, size_t j, const char** out);
MGLI_API mgli_status mgli_matrix_grand_sum(const mgli_matrix* m, double* out);
MGLI_API mgli_status mgli_matrix_flag_count(const mgli_matrix* m, size_t* out);
MGLI_API mgli_status mgli_matrix_flag(const mgli_matrix* m, size_t index, size_t* row,
                                      size_t* col, int* kind);

/* Distance-window mask; closed_upper != 0 includes the upper edge. */
MGLI_API mgli_status mgli_matrix_scaled(const mgli_matrix* m, double r_lo, double r_hi,
                                        int closed_upper, mgli_matrix** out);

/* Writes `path` and the companion distance CSV alongside. */
MGLI_API mgli_status mgli_matrix_write_csv(const mgli_matrix* m, const char* path);

MGLI_API void mgli_matrix_free(mgli_matrix* m);

/* ---- multiscale features ---------------------------------------------- */

/* scheme: "start:stop:step" or comma-separated edges, e.g. "5:27:1". */
MGLI_API mgli_status mgli_features_localized(const mgli_matrix* m, const char* scheme,
                                             mgli_features** out);

MGLI_API mgli_status mgli_features_shape(const mgli_features* f, size_t* rows,
                                         size_t* cols);
MGLI_API mgli_status mgli_features_values(const mgli_features* f, const double** out);
MGLI_API mgli_status mgli_features_row_id(const mgli_features* f, size_t i,
                                          const char** out);
MGLI_API mgli_status mgli_features_column_label(const mgli_features* f, size_t t,
                                                const char** out);
MGLI_API mgli_status mgli_features_write_csv(const mgli_features* f, const char* path);
MGLI_API void mgli_features_free(mgli_features* f);

/* ---- proteins ---------------------------------------------------------- */

/* chain: one-character string, or NULL/"" for the first chain found. */
MGLI_API mgli_status mgli_protein_read(const char* path, const char* chain,
                                       mgli_protein** out);

MGLI_API mgli_status mgli_protein_size(const mgli_protein* p, size_t* out);
MGLI_API mgli_status mgli_protein_chain_id(const mgli_protein* p, char* out);
MGLI_API mgli_status mgli_protein_residue(const mgli_protein* p, size_t i, int* res_seq,
                                          char* insertion_code, double* b_factor);
MGLI_API mgli_status mgli_protein_warning_count(const mgli_protein* p, size_t* out);
MGLI_API mgli_status mgli_protein_warning(const mgli_protein* p, size_t i,
                                          const char** out);
MGLI_API mgli_status mgli_protein_matrix(const mgli_protein* p, int mode,
                                         mgli_matrix** out);
MGLI_API mgli_status mgli_protein_features(const mgli_protein* p, const char* scheme,
                                           int mode, mgli_features** out);
MGLI_API void mgli_protein_free(mgli_protein* p);

/* ---- B-factor fitting --------------------------------------------------- */

/* Least squares of b (length = feature rows) on transformed features.
 * A constant fitted vector yields has_pearson = 0. */
MGLI_API mgli_status mgli_fit_bfactor(const mgli_features* f, const double* b, size_t n,
                                      int transform, double epsilon, double ridge_lambda,
                                      mgli_fit** out);

MGLI_API mgli_status mgli_fit_weight_count(const mgli_fit* r, size_t* out);
MGLI_API mgli_status mgli_fit_weights(const mgli_fit* r, const double** out);
MGLI_API mgli_status mgli_fit_intercept(const mgli_fit* r, double* out);
MGLI_API mgli_status mgli_fit_fitted(const mgli_fit* r, const double** out);
MGLI_API mgli_status mgli_fit_pearson(const mgli_fit* r, int* has_pearson, double* out);
MGLI_API mgli_status mgli_fit_used_ridge(const mgli_fit* r, int* out);
MGLI_API mgli_status mgli_fit_condition(const mgli_fit* r, double* out);
MGLI_API void mgli_fit_free(mgli_fit* r);

/* ---- benchmark ---------------------------------------------------------- */

MGLI_API mgli_status mgli_benchmark_run(const char* manifest_path, const char* scheme,
                                        int mode, int transform, double epsilon,
                                        double ridge_lambda, mgli_benchmark** out);

MGLI_API mgli_status mgli_benchmark_row_count(const mgli_benchmark* b, size_t* out);
MGLI_API mgli_status mgli_benchmark_row(const mgli_benchmark* b, size_t i,
                                        const char** pdb_id, const char** chain,
                                        size_t* n_residues, int* has_r, double* r,
                                        const char** status);
MGLI_API mgli_status mgli_benchmark_mean(const mgli_benchmark* b, int* has_mean,
                                         double* out);
MGLI_API mgli_status mgli_benchmark_failures(const mgli_benchmark* b, size_t* out);
MGLI_API mgli_status mgli_benchmark_write_csv(const mgli_benchmark* b, const char* path);
MGLI_API void mgli_benchmark_free(mgli_benchmark* b);

#ifdef __cplusplus
}
#endif

#endif /* MGLI_H */
