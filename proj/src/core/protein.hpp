// SPDX-License-Identifier: Apache-2.0
//
// PDB ingestion (C-alpha trace), the C-alpha-induced backbone
// segmentation, and the protein feature pipeline.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "multiscale.hpp"
#include "segmentation.hpp"

namespace mgli {

struct Residue {
  int res_seq = 0;
  char insertion_code = ' ';
  Point3 ca{};
  double b_factor = 0.0;
};

struct ProteinChain {
  char chain_id = ' ';
  std::vector<Residue> residues;
  std::vector<std::string> warnings;  // e.g. sequence gaps bridged by pseudobonds

  std::size_t size() const { return residues.size(); }
  std::vector<double> b_factors() const;
};

// Extracts the C-alpha trace of one chain from PDB-format text
// (fixed-column ATOM records, model 1 only, altLoc blank or 'A',
// HETATM excluded). With no chain given, the first chain that owns a
// CA atom is used. Gaps in the residue numbering are kept as straight
// pseudobonds and reported in warnings.
ProteinChain parse_pdb_ca(std::string_view text, std::optional<char> chain = std::nullopt);

// Midpoint-rule segmentation of the backbone polyline: segment i runs
// from the midpoint of pseudobond (i-1,i) to the midpoint of (i,i+1)
// (chain termini for the first and last segments), with the C-alpha
// position as representative.
Segmentation protein_segmentation(const ProteinChain& chain);

// Self-analysis GLI matrix of the chain segmentation. Distances are the
// Euclidean C-alpha/C-alpha distances by construction (representatives
// are the C-alpha points).
GliMatrix protein_matrix(const ProteinChain& chain, GliMode mode = GliMode::absolute);

// Localized multiscale features of the chain: one row per residue, one
// column per scheme bin.
FeatureMatrix protein_features(const ProteinChain& chain, const ScaleScheme& scheme,
                               GliMode mode = GliMode::absolute);

}  // namespace mgli
