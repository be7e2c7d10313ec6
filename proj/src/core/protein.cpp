// SPDX-License-Identifier: Apache-2.0

#include "protein.hpp"

#include <cctype>
#include <cmath>
#include <memory>
#include <sstream>

namespace mgli {

std::vector<double> ProteinChain::b_factors() const {
  std::vector<double> out;
  out.reserve(residues.size());
  for (const Residue& r : residues) out.push_back(r.b_factor);
  return out;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string_view field(std::string_view line, std::size_t begin, std::size_t end) {
  if (line.size() <= begin) return {};
  return line.substr(begin, std::min(end, line.size()) - begin);
}

double parse_real(std::string_view raw, std::size_t line_no, const char* what) {
  const std::string t = trim(raw);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    used = std::string::npos;
  }
  if (used != t.size() || t.empty() || !std::isfinite(v))
    throw Error(ErrorCode::parse_error,
                "line " + std::to_string(line_no) + ": malformed " + what + " field");
  return v;
}

int parse_int(std::string_view raw, std::size_t line_no, const char* what) {
  const std::string t = trim(raw);
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(t, &used);
  } catch (const std::exception&) {
    used = std::string::npos;
  }
  if (used != t.size() || t.empty())
    throw Error(ErrorCode::parse_error,
                "line " + std::to_string(line_no) + ": malformed " + what + " field");
  return v;
}

}  // namespace

ProteinChain parse_pdb_ca(std::string_view text, std::optional<char> chain) {
  ProteinChain out;
  bool chain_fixed = chain.has_value();
  if (chain_fixed) out.chain_id = *chain;

  std::size_t line_no = 0;
  bool seen_model = false;
  bool done = false;
  std::size_t pos = 0;
  while (!done && pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos
                                                                          : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::string_view rec = field(line, 0, 6);

    if (rec.rfind("MODEL", 0) == 0) {
      if (seen_model) break;  // model 1 only
      seen_model = true;
      continue;
    }
    if (rec.rfind("ENDMDL", 0) == 0) break;
    if (rec.rfind("TER", 0) == 0) {
      if (out.residues.empty()) continue;
      const char ter_chain = line.size() > 21 ? line[21] : ' ';
      if (!chain_fixed || ter_chain == out.chain_id || ter_chain == ' ') break;
      continue;
    }
    if (rec != "ATOM  ") continue;  // HETATM excluded

    if (trim(field(line, 12, 16)) != "CA") continue;
    const char alt_loc = line.size() > 16 ? line[16] : ' ';
    if (alt_loc != ' ' && alt_loc != 'A') continue;
    const char line_chain = line.size() > 21 ? line[21] : ' ';
    if (!chain_fixed) {
      out.chain_id = line_chain;
      chain_fixed = true;
    } else if (line_chain != out.chain_id) {
      continue;
    }

    Residue r;
    r.res_seq = parse_int(field(line, 22, 26), line_no, "residue number");
    r.insertion_code = line.size() > 26 ? line[26] : ' ';
    r.ca.x = parse_real(field(line, 30, 38), line_no, "x coordinate");
    r.ca.y = parse_real(field(line, 38, 46), line_no, "y coordinate");
    r.ca.z = parse_real(field(line, 46, 54), line_no, "z coordinate");
    r.b_factor = parse_real(field(line, 60, 66), line_no, "B-factor");

    if (!out.residues.empty()) {
      const Residue& prev = out.residues.back();
      if (r.res_seq < prev.res_seq)
        throw Error(ErrorCode::parse_error,
                    "line " + std::to_string(line_no) + ": residue numbers decrease");
      if (r.res_seq == prev.res_seq && r.insertion_code == prev.insertion_code)
        continue;  // duplicate CA record; keep the first
      if (r.res_seq > prev.res_seq + 1)
        out.warnings.push_back("gap between residues " + std::to_string(prev.res_seq) +
                               " and " + std::to_string(r.res_seq) +
                               " bridged by a straight pseudobond");
    }
    out.residues.push_back(r);
  }

  if (out.residues.empty()) {
    std::string which = chain.has_value() ? std::string(1, *chain) : std::string("any");
    throw Error(ErrorCode::not_found, "no CA atoms found for chain " + which);
  }
  if (out.residues.size() < 2)
    throw Error(ErrorCode::invalid_argument, "chain has fewer than two CA residues");
  return out;
}

namespace {

std::string residue_id(char chain_id, const Residue& r) {
  std::string id(1, chain_id);
  id += ':';
  id += std::to_string(r.res_seq);
  if (r.insertion_code != ' ') id += r.insertion_code;
  return id;
}

}  // namespace

Segmentation protein_segmentation(const ProteinChain& chain) {
  const std::size_t n = chain.residues.size();
  if (n < 2)
    throw Error(ErrorCode::invalid_argument, "protein segmentation needs >= 2 residues");

  auto structure = std::make_shared<Structure>();
  Component comp;
  comp.name = std::string(1, chain.chain_id);
  comp.poly.closed = false;
  comp.poly.vertices.reserve(n);
  for (const Residue& r : chain.residues) comp.poly.vertices.push_back(r.ca);
  structure->components.push_back(std::move(comp));
  structure->validate();  // rejects coincident consecutive CA points

  const std::vector<Point3>& c = structure->components[0].poly.vertices;
  // Pseudobond midpoints and cumulative arc lengths, computed once so
  // adjacent segments share boundary vertices and arc values exactly.
  std::vector<Point3> mid(n - 1);
  std::vector<double> cum(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    mid[i] = Point3{0.5 * (c[i].x + c[i + 1].x), 0.5 * (c[i].y + c[i + 1].y),
                    0.5 * (c[i].z + c[i + 1].z)};
    cum[i + 1] = cum[i] + distance(c[i], c[i + 1]);
  }
  std::vector<double> mid_arc(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) mid_arc[i] = 0.5 * (cum[i] + cum[i + 1]);

  Segmentation seg;
  seg.parent = structure;
  seg.segments.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    Segment& s = seg.segments[i];
    s.component = 0;
    s.id = residue_id(chain.chain_id, chain.residues[i]);
    s.representative = c[i];
    if (i == 0) {
      s.vertices = {c[0], mid[0]};
      s.arc_begin = 0.0;
      s.arc_end = mid_arc[0];
    } else if (i + 1 == n) {
      s.vertices = {mid[n - 2], c[n - 1]};
      s.arc_begin = mid_arc[n - 2];
      s.arc_end = cum[n - 1];
    } else {
      s.vertices = {mid[i - 1], c[i], mid[i]};
      s.arc_begin = mid_arc[i - 1];
      s.arc_end = mid_arc[i];
    }
  }
  return seg;
}

GliMatrix protein_matrix(const ProteinChain& chain, GliMode mode) {
  return segmentation_matrix(protein_segmentation(chain), mode);
}

FeatureMatrix protein_features(const ProteinChain& chain, const ScaleScheme& scheme,
                               GliMode mode) {
  return localized_features(protein_matrix(chain, mode), scheme);
}

}  // namespace mgli
