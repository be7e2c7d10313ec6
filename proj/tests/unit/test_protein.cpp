// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <string>

#include "core/flexibility.hpp"
#include "core/geometry.hpp"
#include "core/io.hpp"
#include "core/protein.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace mgli;
using namespace mgli::test;

namespace {

std::string ca_line(int serial, char alt, const std::string& resname, char chain,
                    int resseq, char icode, double x, double y, double z, double b,
                    const char* record = "ATOM  ") {
  char buf[96];
  std::snprintf(buf, sizeof buf,
                "%-6s%5d  CA %c%3s %c%4d%c   %8.3f%8.3f%8.3f%6.2f%6.2f          %2s\n",
                record, serial, alt, resname.c_str(), chain, resseq, icode, x, y, z,
                1.0, b, " C");
  return buf;
}

}  // namespace

TEST_CASE("fixed-column parsing on the two-chain fixture") {
  const std::string text = slurp(data_path("two_chain.pdb"));

  ProteinChain a = parse_pdb_ca(text);  // default: first chain with a CA
  CHECK(a.chain_id == 'A');
  REQUIRE(a.size() == 7);
  const int expect_seq[7] = {1, 2, 3, 4, 4, 5, 8};
  const char expect_icode[7] = {' ', ' ', ' ', ' ', 'A', ' ', ' '};
  const double expect_b[7] = {10, 11, 12, 13, 14, 15, 16};
  for (std::size_t i = 0; i < 7; ++i) {
    CHECK(a.residues[i].res_seq == expect_seq[i]);
    CHECK(a.residues[i].insertion_code == expect_icode[i]);
    CHECK(a.residues[i].b_factor == doctest::Approx(expect_b[i]));
  }
  // altLoc 'B' skipped: residue 2 keeps the 'A' coordinates
  CHECK(a.residues[1].ca.x == doctest::Approx(3.8));
  // duplicate record for residue 3 keeps the first
  CHECK(a.residues[2].b_factor == doctest::Approx(12.0));
  // the numbering gap 5 -> 8 is warned about
  bool warned = false;
  for (const std::string& w : a.warnings)
    if (w.find("gap") != std::string::npos) warned = true;
  CHECK(warned);

  ProteinChain b = parse_pdb_ca(text, 'B');
  CHECK(b.chain_id == 'B');
  REQUIRE(b.size() == 4);
  CHECK(b.residues[0].b_factor == doctest::Approx(20.0));
  CHECK(b.residues[3].b_factor == doctest::Approx(23.0));
}

TEST_CASE("synthetic chains have the expected residue counts") {
  ProteinChain p1 = parse_pdb_ca(slurp(data_path("1V70.pdb")), 'A');
  CHECK(p1.size() == 105);
  ProteinChain p2 = parse_pdb_ca(slurp(data_path("2HQK.pdb")), 'A');
  CHECK(p2.size() == 219);
  CHECK(p2.warnings.empty());
}

TEST_CASE("parser error taxonomy") {
  try {
    parse_pdb_ca("");
    FAIL("expected not_found");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_found);
  }
  try {
    parse_pdb_ca("REMARK nothing here\nEND\n", 'A');
    FAIL("expected not_found");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_found);
  }

  // mangled coordinate field -> parse error naming the line
  std::string bad = ca_line(1, ' ', "ALA", 'A', 1, ' ', 0, 0, 0, 10);
  bad += ca_line(2, ' ', "ALA", 'A', 2, ' ', 3.8, 0, 0, 11);
  bad.replace(bad.find("3.800"), 5, "3.8xx");
  try {
    parse_pdb_ca(bad);
    FAIL("expected parse_error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::parse_error);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }

  // strictly decreasing residue numbering is rejected
  std::string dec = ca_line(1, ' ', "ALA", 'A', 5, ' ', 0, 0, 0, 10);
  dec += ca_line(2, ' ', "ALA", 'A', 4, ' ', 3.8, 0, 0, 11);
  try {
    parse_pdb_ca(dec);
    FAIL("expected parse_error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::parse_error);
  }
}

TEST_CASE("only the first model is read") {
  std::string text = "MODEL        1\n";
  text += ca_line(1, ' ', "ALA", 'A', 1, ' ', 0, 0, 0, 10);
  text += ca_line(2, ' ', "ALA", 'A', 2, ' ', 3.8, 0, 0, 11);
  text += ca_line(3, ' ', "ALA", 'A', 3, ' ', 7.6, 0.5, 0, 12);
  text += "ENDMDL\nMODEL        2\n";
  text += ca_line(4, ' ', "ALA", 'A', 1, ' ', 99, 99, 99, 10);
  text += "ENDMDL\nEND\n";
  ProteinChain c = parse_pdb_ca(text);
  REQUIRE(c.size() == 3);
  CHECK(c.residues[0].ca.x == doctest::Approx(0.0));
}

TEST_CASE("midpoint-rule segmentation of three collinear residues") {
  std::string text;
  text += ca_line(1, ' ', "GLY", 'A', 1, ' ', 0, 0, 0, 1);
  text += ca_line(2, ' ', "GLY", 'A', 2, ' ', 1, 0, 0, 2);
  text += ca_line(3, ' ', "GLY", 'A', 3, ' ', 2, 0, 0, 3);
  ProteinChain c = parse_pdb_ca(text);
  Segmentation seg = protein_segmentation(c);
  REQUIRE(seg.size() == 3);
  // middle segment spans x in [0.5, 1.5]
  CHECK(seg.segments[1].vertices.front().x == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(seg.segments[1].vertices.back().x == doctest::Approx(1.5).epsilon(1e-12));
  // representatives are the C-alpha positions themselves
  CHECK(exactly_equal(seg.segments[0].representative, Point3{0, 0, 0}));
  CHECK(exactly_equal(seg.segments[1].representative, Point3{1, 0, 0}));
  // with one segment per residue, ids carry chain and residue number
  CHECK(seg.segments[0].id == "A:1");
  // termini: first segment starts at the chain start, last ends at the end
  CHECK(seg.segments[0].vertices.front().x == doctest::Approx(0.0));
  CHECK(seg.segments[2].vertices.back().x == doctest::Approx(2.0));
  // tiling: lengths sum to the backbone length
  double total = 0.0;
  for (const Segment& p : seg.segments) total += p.length();
  CHECK(total == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("degenerate chains are rejected") {
  std::string text;
  text += ca_line(1, ' ', "GLY", 'A', 1, ' ', 0, 0, 0, 1);
  // a single CA cannot form a backbone; rejected at parse time
  CHECK_THROWS_AS(parse_pdb_ca(text), Error);

  text += ca_line(2, ' ', "GLY", 'A', 2, ' ', 0, 0, 0, 2);  // coincident CA
  ProteinChain coincident = parse_pdb_ca(text);
  try {
    protein_segmentation(coincident);
    FAIL("expected degenerate_geometry");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::degenerate_geometry);
  }
}

TEST_CASE("protein feature shapes and positivity") {
  ProteinChain c = parse_pdb_ca(slurp(data_path("1V70.pdb")), 'A');
  ScaleScheme scheme = ScaleScheme::parse("5:27:1");
  FeatureMatrix f = protein_features(c, scheme);
  CHECK(f.rows == 105);
  CHECK(f.cols == 22);
  double total = 0.0;
  for (double v : f.values) {
    CHECK(v >= 0.0);  // absolute mode
    total += v;
  }
  CHECK(total > 0.0);  // the window actually captures contacts
}

TEST_CASE("a single huge bin reduces features to absolute row sums") {
  ProteinChain c = parse_pdb_ca(slurp(data_path("two_chain.pdb")), 'A');
  GliMatrix m = protein_matrix(c);
  FeatureMatrix f = protein_features(c, ScaleScheme::parse("0:1000:1000"));
  REQUIRE(f.cols == 1);
  for (std::size_t i = 0; i < m.rows; ++i) {
    double row_sum = 0.0;
    for (std::size_t j = 0; j < m.cols; ++j) row_sum += m.value(i, j);
    CHECK(f.value(i, 0) == row_sum);
  }
}

TEST_CASE("protein matrix is rigid-motion invariant") {
  ProteinChain c = parse_pdb_ca(slurp(data_path("two_chain.pdb")), 'A');
  GliMatrix before = protein_matrix(c);
  Affine rot = Affine::rotation({0.3, -1, 2}, 0.8);
  rot.t = {17, -4, 2.5};
  ProteinChain moved = c;
  for (Residue& r : moved.residues) r.ca = rot.apply(r.ca);
  GliMatrix after = protein_matrix(moved);
  REQUIRE(after.values.size() == before.values.size());
  for (std::size_t i = 0; i < before.values.size(); ++i) {
    CHECK(after.values[i] == doctest::Approx(before.values[i]).epsilon(1e-9));
    CHECK(after.distances[i] ==
          doctest::Approx(before.distances[i]).epsilon(1e-9));
  }
}

TEST_CASE("distances in the protein matrix are C-alpha distances") {
  ProteinChain c = parse_pdb_ca(slurp(data_path("two_chain.pdb")), 'B');
  GliMatrix m = protein_matrix(c);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j)
      CHECK(m.dist(i, j) ==
            doctest::Approx(distance(c.residues[i].ca, c.residues[j].ca)));
}
