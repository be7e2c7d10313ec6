// SPDX-License-Identifier: Apache-2.0
//
// mgli command-line tool. Talks to the core library exclusively through
// the public C API in mgli/mgli.h.

#include <mgli/mgli.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& message) {
  throw std::runtime_error(message);
}

void check(mgli_status st) {
  if (st != MGLI_OK) fail(mgli_last_error());
}

// RAII for C API handles.
template <typename T, void (*Free)(T*)>
struct Handle {
  T* ptr = nullptr;
  Handle() = default;
  explicit Handle(T* p) : ptr(p) {}
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { if (ptr) Free(ptr); }
  T** out() { return &ptr; }
  T* get() const { return ptr; }
};

using StructureH = Handle<mgli_structure, mgli_structure_free>;
using SegmentationH = Handle<mgli_segmentation, mgli_segmentation_free>;
using MatrixH = Handle<mgli_matrix, mgli_matrix_free>;
using FeaturesH = Handle<mgli_features, mgli_features_free>;
using ProteinH = Handle<mgli_protein, mgli_protein_free>;
using FitH = Handle<mgli_fit, mgli_fit_free>;
using BenchmarkH = Handle<mgli_benchmark, mgli_benchmark_free>;

std::string fmt9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

bool has_suffix(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool is_pdb_path(const std::string& path) {
  return has_suffix(path, ".pdb") || has_suffix(path, ".ent");
}

int mode_from_string(const std::string& mode) {
  if (mode == "signed") return MGLI_MODE_SIGNED;
  if (mode == "absolute") return MGLI_MODE_ABSOLUTE;
  fail("mode must be 'signed' or 'absolute'");
}

int transform_from_string(const std::string& transform) {
  if (transform == "raw") return MGLI_TRANSFORM_RAW;
  if (transform == "reciprocal") return MGLI_TRANSFORM_RECIPROCAL;
  if (transform == "concat") return MGLI_TRANSFORM_CONCAT;
  fail("transform must be 'raw', 'reciprocal' or 'concat'");
}

size_t component_index(const mgli_structure* s, const std::string& name) {
  size_t idx = 0;
  check(mgli_structure_component_index(s, name.c_str(), &idx));
  return idx;
}

void print_protein_warnings(const mgli_protein* p) {
  size_t n = 0;
  check(mgli_protein_warning_count(p, &n));
  for (size_t i = 0; i < n; ++i) {
    const char* w = nullptr;
    check(mgli_protein_warning(p, i, &w));
    std::cerr << "warning: " << w << "\n";
  }
}

/* ---- gli --------------------------------------------------------------- */

struct GliArgs {
  std::string input;
  std::string comp_a, comp_b;
  bool estimate = false;
  size_t directions = 20000;
  uint64_t seed = 42;
};

int run_gli(const GliArgs& args) {
  StructureH s;
  check(mgli_structure_read(args.input.c_str(), s.out()));
  size_t count = 0;
  check(mgli_structure_component_count(s.get(), &count));
  size_t ia = 0, ib = 1;
  if (!args.comp_a.empty()) ia = component_index(s.get(), args.comp_a);
  if (!args.comp_b.empty()) ib = component_index(s.get(), args.comp_b);
  if (args.comp_a.empty() && args.comp_b.empty() && count < 2)
    fail("structure has fewer than two components; name them with -a/-b");

  double signed_total = 0.0, absolute_total = 0.0;
  check(mgli_component_gli(s.get(), ia, ib, MGLI_MODE_SIGNED, &signed_total));
  check(mgli_component_gli(s.get(), ia, ib, MGLI_MODE_ABSOLUTE, &absolute_total));
  std::cout << "signed " << fmt9(signed_total) << "\n";
  std::cout << "absolute " << fmt9(absolute_total) << "\n";
  if (args.estimate) {
    double value = 0.0, std_error = 0.0;
    check(mgli_crossing_estimate(s.get(), ia, ib, args.directions, args.seed, &value,
                                 &std_error));
    std::cout << "estimate " << fmt9(value) << " stderr " << fmt9(std_error)
              << " directions " << args.directions << "\n";
  }
  return 0;
}

/* ---- matrix ------------------------------------------------------------- */

struct MatrixArgs {
  std::string input, out;
  bool self = false;
  std::string component;  // with --self: restrict to one component
  std::string comp_a, comp_b;
  size_t pieces = 8;
  size_t pieces_b = 0;  // 0 = same as pieces
  std::string mode = "signed";
};

int run_matrix(const MatrixArgs& args) {
  StructureH s;
  check(mgli_structure_read(args.input.c_str(), s.out()));
  const int mode = mode_from_string(args.mode);
  MatrixH m;
  if (args.self) {
    int comp = -1;
    if (!args.component.empty())
      comp = static_cast<int>(component_index(s.get(), args.component));
    SegmentationH seg;
    check(mgli_segmentation_create(s.get(), comp, args.pieces, seg.out()));
    check(mgli_matrix_self(seg.get(), mode, m.out()));
  } else {
    if (args.comp_a.empty() || args.comp_b.empty())
      fail("cross matrix needs -a and -b component names (or use --self)");
    SegmentationH rows, cols;
    check(mgli_segmentation_create(
        s.get(), static_cast<int>(component_index(s.get(), args.comp_a)), args.pieces,
        rows.out()));
    check(mgli_segmentation_create(
        s.get(), static_cast<int>(component_index(s.get(), args.comp_b)),
        args.pieces_b ? args.pieces_b : args.pieces, cols.out()));
    check(mgli_matrix_cross(rows.get(), cols.get(), mode, m.out()));
  }
  check(mgli_matrix_write_csv(m.get(), args.out.c_str()));
  double total = 0.0;
  check(mgli_matrix_grand_sum(m.get(), &total));
  std::cout << "wrote " << args.out << "\n";
  std::cout << "grand_sum " << fmt9(total) << "\n";
  return 0;
}

/* ---- features ------------------------------------------------------------ */

struct FeaturesArgs {
  std::string input, out;
  std::string chain;
  std::string scheme = "5:27:1";
  std::string mode = "absolute";
  size_t pieces = 8;
};

int run_features(const FeaturesArgs& args) {
  const int mode = mode_from_string(args.mode);
  FeaturesH f;
  if (is_pdb_path(args.input)) {
    ProteinH p;
    check(mgli_protein_read(args.input.c_str(), args.chain.c_str(), p.out()));
    print_protein_warnings(p.get());
    check(mgli_protein_features(p.get(), args.scheme.c_str(), mode, f.out()));
  } else {
    StructureH s;
    check(mgli_structure_read(args.input.c_str(), s.out()));
    SegmentationH seg;
    check(mgli_segmentation_create(s.get(), -1, args.pieces, seg.out()));
    MatrixH m;
    check(mgli_matrix_self(seg.get(), mode, m.out()));
    check(mgli_features_localized(m.get(), args.scheme.c_str(), f.out()));
  }
  check(mgli_features_write_csv(f.get(), args.out.c_str()));
  size_t rows = 0, cols = 0;
  check(mgli_features_shape(f.get(), &rows, &cols));
  std::cout << "wrote " << args.out << " (" << rows << "x" << cols << ")\n";
  return 0;
}

/* ---- bfactor -------------------------------------------------------------- */

struct BfactorArgs {
  std::string input;
  std::string chain;
  std::string scheme = "5:27:1";
  std::string mode = "absolute";
  std::string transform = "reciprocal";
  double epsilon = 1e-3;
  double lambda = 1e-6;
  std::string out_json, out_csv;
};

int run_bfactor(const BfactorArgs& args) {
  ProteinH p;
  check(mgli_protein_read(args.input.c_str(), args.chain.c_str(), p.out()));
  print_protein_warnings(p.get());
  FeaturesH f;
  check(mgli_protein_features(p.get(), args.scheme.c_str(),
                              mode_from_string(args.mode), f.out()));

  size_t n = 0;
  check(mgli_protein_size(p.get(), &n));
  std::vector<double> b(n);
  for (size_t i = 0; i < n; ++i) {
    int res_seq = 0;
    char icode = ' ';
    check(mgli_protein_residue(p.get(), i, &res_seq, &icode, &b[i]));
  }

  FitH fit;
  check(mgli_fit_bfactor(f.get(), b.data(), n, transform_from_string(args.transform),
                         args.epsilon, args.lambda, fit.out()));

  int has_r = 0;
  double r = 0.0;
  check(mgli_fit_pearson(fit.get(), &has_r, &r));
  const double* fitted = nullptr;
  check(mgli_fit_fitted(fit.get(), &fitted));

  if (!args.out_csv.empty()) {
    std::ofstream out(args.out_csv, std::ios::binary);
    if (!out) fail("cannot write " + args.out_csv);
    out << "residue,experimental_b,fitted_b\n";
    for (size_t i = 0; i < n; ++i) {
      const char* id = nullptr;
      check(mgli_features_row_id(f.get(), i, &id));
      out << id << ',' << fmt9(b[i]) << ',' << fmt9(fitted[i]) << '\n';
    }
  }

  if (!args.out_json.empty()) {
    char chain_id = ' ';
    check(mgli_protein_chain_id(p.get(), &chain_id));
    size_t n_weights = 0;
    check(mgli_fit_weight_count(fit.get(), &n_weights));
    const double* weights = nullptr;
    check(mgli_fit_weights(fit.get(), &weights));
    double intercept = 0.0, condition = 0.0;
    int used_ridge = 0;
    check(mgli_fit_intercept(fit.get(), &intercept));
    check(mgli_fit_condition(fit.get(), &condition));
    check(mgli_fit_used_ridge(fit.get(), &used_ridge));

    ordered_json j;
    j["input"] = args.input;
    j["chain"] = std::string(1, chain_id);
    j["n_residues"] = n;
    j["scheme"] = args.scheme;
    j["mode"] = args.mode;
    j["transform"] = args.transform;
    j["epsilon"] = args.epsilon;
    j["ridge_lambda"] = args.lambda;
    if (has_r) j["pearson_r"] = r;
    else j["pearson_r"] = nullptr;
    j["used_ridge"] = used_ridge != 0;
    j["condition"] = condition;
    j["intercept"] = intercept;
    j["weights"] = std::vector<double>(weights, weights + n_weights);
    std::ofstream out(args.out_json, std::ios::binary);
    if (!out) fail("cannot write " + args.out_json);
    out << j.dump(2) << "\n";
  }

  if (has_r) std::cout << "pearson_r " << fmt9(r) << "\n";
  else std::cout << "pearson_r undefined\n";
  return 0;
}

/* ---- benchmark -------------------------------------------------------------- */

struct BenchmarkArgs {
  std::string manifest;
  std::string scheme = "5:27:1";
  std::string mode = "absolute";
  std::string transform = "reciprocal";
  double epsilon = 1e-3;
  double lambda = 1e-6;
  std::string out;
};

int run_benchmark(const BenchmarkArgs& args) {
  BenchmarkH b;
  check(mgli_benchmark_run(args.manifest.c_str(), args.scheme.c_str(),
                           mode_from_string(args.mode),
                           transform_from_string(args.transform), args.epsilon,
                           args.lambda, b.out()));
  check(mgli_benchmark_write_csv(b.get(), args.out.c_str()));
  int has_mean = 0;
  double mean = 0.0;
  size_t failures = 0, rows = 0;
  check(mgli_benchmark_mean(b.get(), &has_mean, &mean));
  check(mgli_benchmark_failures(b.get(), &failures));
  check(mgli_benchmark_row_count(b.get(), &rows));
  std::cout << "wrote " << args.out << "\n";
  std::cout << "rows " << rows << " failed " << failures << "\n";
  if (has_mean) std::cout << "mean_pearson_r " << fmt9(mean) << "\n";
  else std::cout << "mean_pearson_r undefined\n";
  return failures > 0 ? 1 : 0;
}

/* ---- demo-hopf ---------------------------------------------------------------- */

constexpr double kTau = 6.28318530717958647692;

void hopf_gamma1(double t, void*, double out[3]) {
  out[0] = std::cos(kTau * t);
  out[1] = std::sin(kTau * t);
  out[2] = 0.0;
}

void hopf_gamma2(double t, void*, double out[3]) {
  out[0] = std::cos(kTau * t) + 1.0;
  out[1] = 0.0;
  out[2] = std::sin(kTau * t);
}

void print_matrix(const char* title, const mgli_matrix* m) {
  size_t rows = 0, cols = 0;
  check(mgli_matrix_shape(m, &rows, &cols));
  const double* values = nullptr;
  check(mgli_matrix_values(m, &values));
  std::printf("%s (%zux%zu):\n", title, rows, cols);
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) std::printf(" %8.4f", values[i * cols + j]);
    std::printf("\n");
  }
  double total = 0.0;
  check(mgli_matrix_grand_sum(m, &total));
  std::printf("grand sum of %s = %.3f\n", title, total);
}

int run_demo_hopf(size_t samples) {
  StructureH s;
  check(mgli_structure_create(s.out()));
  check(mgli_structure_add_sampled(s.get(), "gamma1", 1, hopf_gamma1, nullptr, samples));
  check(mgli_structure_add_sampled(s.get(), "gamma2", 1, hopf_gamma2, nullptr, samples));

  SegmentationH rows4, cols4, cols6;
  check(mgli_segmentation_create(s.get(), 0, 4, rows4.out()));
  check(mgli_segmentation_create(s.get(), 1, 4, cols4.out()));
  check(mgli_segmentation_create(s.get(), 1, 6, cols6.out()));

  MatrixH g1, g2;
  check(mgli_matrix_cross(rows4.get(), cols4.get(), MGLI_MODE_SIGNED, g1.out()));
  check(mgli_matrix_cross(rows4.get(), cols6.get(), MGLI_MODE_SIGNED, g2.out()));
  print_matrix("G1", g1.get());
  std::printf("\n");
  print_matrix("G2", g2.get());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multiscale Gauss linking integral toolkit"};
  app.set_version_flag("--version", mgli_version());
  app.require_subcommand(1);

  GliArgs gli_args;
  CLI::App* cmd_gli = app.add_subcommand(
      "gli", "total signed and absolute GLI between two components");
  cmd_gli->add_option("--input", gli_args.input, "structure file (.json or .csv)")
      ->required();
  cmd_gli->add_option("-a,--component-a", gli_args.comp_a, "first component name");
  cmd_gli->add_option("-b,--component-b", gli_args.comp_b, "second component name");
  cmd_gli->add_flag("--estimate", gli_args.estimate,
                    "also print the Monte Carlo crossing estimate");
  cmd_gli->add_option("--directions", gli_args.directions,
                      "projection directions for --estimate");
  cmd_gli->add_option("--seed", gli_args.seed, "random seed for --estimate");

  MatrixArgs matrix_args;
  CLI::App* cmd_matrix =
      app.add_subcommand("matrix", "segment GLI matrix + distance matrix CSVs");
  cmd_matrix->add_option("--input", matrix_args.input, "structure file")->required();
  cmd_matrix->add_option("--out", matrix_args.out, "output CSV path")->required();
  cmd_matrix->add_flag("--self", matrix_args.self, "self-analysis matrix");
  cmd_matrix->add_option("--component", matrix_args.component,
                         "restrict --self to one component");
  cmd_matrix->add_option("-a,--component-a", matrix_args.comp_a, "row component");
  cmd_matrix->add_option("-b,--component-b", matrix_args.comp_b, "column component");
  cmd_matrix->add_option("--pieces", matrix_args.pieces, "pieces per component");
  cmd_matrix->add_option("--pieces-b", matrix_args.pieces_b,
                         "pieces for the column component (default: --pieces)");
  cmd_matrix->add_option("--mode", matrix_args.mode, "signed | absolute");

  FeaturesArgs features_args;
  CLI::App* cmd_features =
      app.add_subcommand("features", "multiscale feature matrix CSV");
  cmd_features->add_option("--input", features_args.input,
                           "input file (.pdb, .json or .csv)")
      ->required();
  cmd_features->add_option("--out", features_args.out, "output CSV path")->required();
  cmd_features->add_option("--chain", features_args.chain, "PDB chain id");
  cmd_features->add_option("--scheme", features_args.scheme,
                           "scale scheme (start:stop:step or comma list)");
  cmd_features->add_option("--mode", features_args.mode, "signed | absolute");
  cmd_features->add_option("--pieces", features_args.pieces,
                           "pieces per component for non-protein structures");

  BfactorArgs bfactor_args;
  CLI::App* cmd_bfactor =
      app.add_subcommand("bfactor", "B-factor fit for one protein chain");
  cmd_bfactor->add_option("--input", bfactor_args.input, "PDB file")->required();
  cmd_bfactor->add_option("--chain", bfactor_args.chain, "chain id");
  cmd_bfactor->add_option("--scheme", bfactor_args.scheme, "scale scheme");
  cmd_bfactor->add_option("--mode", bfactor_args.mode, "signed | absolute");
  cmd_bfactor->add_option("--transform", bfactor_args.transform,
                          "raw | reciprocal | concat");
  cmd_bfactor->add_option("--epsilon", bfactor_args.epsilon, "reciprocal regularizer");
  cmd_bfactor->add_option("--lambda", bfactor_args.lambda, "ridge fallback strength");
  cmd_bfactor->add_option("--out-json", bfactor_args.out_json, "fit report JSON path");
  cmd_bfactor->add_option("--out-csv", bfactor_args.out_csv,
                          "per-residue CSV path (residue, experimental, fitted)");

  BenchmarkArgs benchmark_args;
  CLI::App* cmd_benchmark =
      app.add_subcommand("benchmark", "multi-protein benchmark report CSV");
  cmd_benchmark->add_option("--manifest", benchmark_args.manifest,
                            "manifest file: one `path[,chain]` per line")
      ->required();
  cmd_benchmark->add_option("--scheme", benchmark_args.scheme, "scale scheme");
  cmd_benchmark->add_option("--mode", benchmark_args.mode, "signed | absolute");
  cmd_benchmark->add_option("--transform", benchmark_args.transform,
                            "raw | reciprocal | concat");
  cmd_benchmark->add_option("--epsilon", benchmark_args.epsilon,
                            "reciprocal regularizer");
  cmd_benchmark->add_option("--lambda", benchmark_args.lambda, "ridge fallback strength");
  cmd_benchmark->add_option("--out", benchmark_args.out, "report CSV path")->required();

  size_t demo_samples = 2048;
  CLI::App* cmd_demo = app.add_subcommand(
      "demo-hopf", "print the Hopf-link segment matrices G1 and G2");
  cmd_demo->add_option("--samples", demo_samples, "vertices per circle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_gli->parsed()) return run_gli(gli_args);
    if (cmd_matrix->parsed()) return run_matrix(matrix_args);
    if (cmd_features->parsed()) return run_features(features_args);
    if (cmd_bfactor->parsed()) return run_bfactor(bfactor_args);
    if (cmd_benchmark->parsed()) return run_benchmark(benchmark_args);
    if (cmd_demo->parsed()) return run_demo_hopf(demo_samples);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
