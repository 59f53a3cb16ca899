// Copyright 2026 The tcnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tcnet/network.hpp"
#include "tcnet/pendant.hpp"
#include "tcnet/shapes.hpp"

namespace tcnet {

struct ReconstructOptions {
  /// Re-enumerate the MLLSs of the answer and compare them with the input.
  bool verify = true;
};

/// One rebuilt blob.
struct TraceStep {
  std::vector<TaxonSet> collapsed;  // common pendants collapsed before the rebuild
  TaxonSet blob;                    // leaf set of the rebuilt blob
  std::string x;                    // the new edge runs from above x ...
  std::string y;                    // ... to a new reticulation above y
  ShapeProfile profile{};
  std::size_t source = 0;           // member the edge was inserted in
};

struct Reconstruction {
  Network network;
  std::vector<TraceStep> trace;
  std::vector<TaxonSet> final_collapsed;  // pendants collapsed when the members agreed
  bool verified = false;
};

/// Rebuilds, from the full MLLS set of a tree-child network of level >= 2,
/// that network. Blobs are rebuilt lowest first: common pendants are
/// collapsed to leaves, a minimal common blob is chosen, a leaf pair in it
/// with shape evidence for a missing edge is found, the edge is inserted in
/// one member and the repaired pendant is collapsed in all of them.
/// Throws Error(NotAnMllsSet) when any step fails or verification rejects.
Reconstruction tcmlls_reconstruct(const std::vector<Network>& members, const ReconstructOptions& options = {});

/// Three MLLSs plus the number of top-level blobs. The loop must finish after
/// exactly `top_level_blobs` rebuilds; verification checks that the answer is
/// tree-child with that many top-level blobs and that each input is one of
/// its MLLSs. Throws Error(NotConsistentTriple).
Reconstruction reconstruct_from_three(const std::vector<Network>& triple, std::size_t top_level_blobs,
                                      const ReconstructOptions& options = {});

/// Inserts the missing edge for the reticulated cherry on (x, y), reticulation
/// above y, in a member showing a subdivided or distant pair, then replaces
/// the pendant at the rebuilt blob's leaf set in every other member.
/// Throws Error(ShapeEvidenceMissing) or Error(PureNodeNotFound).
std::vector<Network> rebuild_h_blob(const std::vector<Network>& members, const std::string& x,
                                    const std::string& y);

}  // namespace tcnet
