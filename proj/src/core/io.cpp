// SPDX-License-Identifier: Apache-2.0

#include "io.hpp"

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace mgli {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io_error, "cannot write " + path);
  return out;
}

}  // namespace

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

Structure structure_from_json(const json& j, const std::string& origin) {
  if (!j.is_object() || !j.contains("components") || !j["components"].is_array())
    throw Error(ErrorCode::parse_error, origin + ": expected {\"components\": [...]}");
  Structure s;
  for (const json& jc : j["components"]) {
    Component c;
    if (!jc.contains("name") || !jc["name"].is_string())
      throw Error(ErrorCode::parse_error, origin + ": component without string name");
    c.name = jc["name"].get<std::string>();
    c.poly.closed = jc.value("closed", false);
    if (!jc.contains("vertices") || !jc["vertices"].is_array())
      throw Error(ErrorCode::parse_error,
                  origin + ": component '" + c.name + "' without vertices array");
    for (const json& jv : jc["vertices"]) {
      if (!jv.is_array() || jv.size() != 3 || !jv[0].is_number() || !jv[1].is_number() ||
          !jv[2].is_number())
        throw Error(ErrorCode::parse_error,
                    origin + ": vertex of '" + c.name + "' is not [x, y, z]");
      c.poly.vertices.push_back(
          Point3{jv[0].get<double>(), jv[1].get<double>(), jv[2].get<double>()});
    }
    s.components.push_back(std::move(c));
  }
  s.validate();
  return s;
}

}  // namespace

Structure read_structure_json(const std::string& path) {
  json j;
  try {
    j = json::parse(slurp(path));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse_error, path + ": " + e.what());
  }
  return structure_from_json(j, path);
}

Structure read_structure_csv(const std::string& path) {
  std::istringstream in(slurp(path));
  std::string line;
  if (!std::getline(in, line))
    throw Error(ErrorCode::parse_error, path + ": empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (trim(line) != "component,x,y,z")
    throw Error(ErrorCode::parse_error, path + ": header must be component,x,y,z");

  Structure s;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    std::stringstream row(line);
    std::string name, xs, ys, zs, extra;
    if (!std::getline(row, name, ',') || !std::getline(row, xs, ',') ||
        !std::getline(row, ys, ',') || !std::getline(row, zs, ',') ||
        std::getline(row, extra, ','))
      throw Error(ErrorCode::parse_error,
                  path + " line " + std::to_string(line_no) + ": expected 4 fields");
    name = trim(name);
    Point3 v;
    try {
      v = Point3{std::stod(trim(xs)), std::stod(trim(ys)), std::stod(trim(zs))};
    } catch (const std::exception&) {
      throw Error(ErrorCode::parse_error,
                  path + " line " + std::to_string(line_no) + ": bad coordinate");
    }
    const std::size_t idx = s.index_of(name);
    if (idx == Structure::npos) {
      Component c;
      c.name = name;
      c.poly.closed = false;
      c.poly.vertices.push_back(v);
      s.components.push_back(std::move(c));
    } else {
      if (idx + 1 != s.components.size())
        throw Error(ErrorCode::parse_error,
                    path + " line " + std::to_string(line_no) +
                        ": component rows must be contiguous");
      s.components[idx].poly.vertices.push_back(v);
    }
  }

  const std::string meta_path = path + ".meta";
  if (std::filesystem::exists(meta_path)) {
    json meta;
    try {
      meta = json::parse(slurp(meta_path));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::parse_error, meta_path + ": " + e.what());
    }
    if (!meta.is_object() || !meta.contains("closed") || !meta["closed"].is_array())
      throw Error(ErrorCode::parse_error, meta_path + ": expected {\"closed\": [names]}");
    for (const json& jn : meta["closed"]) {
      if (!jn.is_string())
        throw Error(ErrorCode::parse_error, meta_path + ": closed entries must be names");
      const std::size_t idx = s.index_of(jn.get<std::string>());
      if (idx == Structure::npos)
        throw Error(ErrorCode::parse_error,
                    meta_path + ": unknown component '" + jn.get<std::string>() + "'");
      s.components[idx].poly.closed = true;
    }
  }
  s.validate();
  return s;
}

Structure read_structure(const std::string& path) {
  const std::string ext = std::filesystem::path(path).extension().string();
  if (ext == ".json") return read_structure_json(path);
  if (ext == ".csv") return read_structure_csv(path);
  throw Error(ErrorCode::invalid_argument,
              "unknown structure format '" + ext + "' (use .json or .csv)");
}

std::string distance_csv_path(const std::string& values_path) {
  const std::string suffix = ".csv";
  if (values_path.size() > suffix.size() &&
      values_path.compare(values_path.size() - suffix.size(), suffix.size(), suffix) == 0)
    return values_path.substr(0, values_path.size() - suffix.size()) + ".dist.csv";
  return values_path + ".dist.csv";
}

namespace {

void write_grid_csv(std::ofstream& out, const std::vector<std::string>& row_ids,
                    const std::vector<std::string>& col_ids,
                    const std::vector<double>& cells) {
  out << "segment";
  for (const std::string& id : col_ids) out << ',' << csv_escape(id);
  out << '\n';
  const std::size_t cols = col_ids.size();
  for (std::size_t i = 0; i < row_ids.size(); ++i) {
    out << csv_escape(row_ids[i]);
    for (std::size_t j = 0; j < cols; ++j) out << ',' << format_real(cells[i * cols + j]);
    out << '\n';
  }
}

}  // namespace

void write_matrix_csv(const GliMatrix& m, const std::string& path) {
  {
    std::ofstream out = open_out(path);
    write_grid_csv(out, m.row_ids, m.col_ids, m.values);
  }
  std::ofstream out = open_out(distance_csv_path(path));
  write_grid_csv(out, m.row_ids, m.col_ids, m.distances);
}

void write_features_csv(const FeatureMatrix& f, const std::string& path) {
  std::ofstream out = open_out(path);
  write_grid_csv(out, f.row_ids, f.column_labels, f.values);
}

void write_benchmark_csv(const BenchmarkReport& report, const std::string& path) {
  std::ofstream out = open_out(path);
  out << "pdb_id,chain,n_residues,pearson_r,status\n";
  for (const BenchmarkRow& row : report.rows) {
    out << csv_escape(row.pdb_id) << ',' << csv_escape(row.chain) << ','
        << row.n_residues << ',';
    if (row.pearson_r.has_value()) out << format_real(*row.pearson_r);
    out << ',' << csv_escape(row.status) << '\n';
  }
  out << "# mean_pearson_r,";
  if (report.mean_r.has_value()) out << format_real(*report.mean_r);
  else out << "nan";
  out << ",n_ok," << (report.rows.size() - report.failures) << ",n_failed,"
      << report.failures << '\n';
}

}  // namespace mgli
