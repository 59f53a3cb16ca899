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

#include <optional>
#include <string>
#include <utility>

#include "tcnet/network.hpp"

namespace tcnet {

/// A pendant subnetwork cut off below a cut-edge, kept as a network of its own
/// (with a fresh root edge) together with the leaf label that replaced it.
struct Pendant {
  TaxonSet taxa;
  std::string label;
  Network subnetwork;
};

/// The highest non-root node whose leaf-descendant set is `taxa` and whose
/// in-edge is a cut-edge, i.e. every node below it has all parents below it.
std::optional<NodeId> pendant_root(const Network& n, const TaxonSet& taxa);

/// The subnetwork hanging from `v`, given a fresh root above `v`.
Network extract_pendant(const Network& n, NodeId v);

/// Replaces the pendant at `taxa` by a leaf labelled taxa.composite_label().
/// Throws Error(NoPendantAtSet).
std::pair<Network, Pendant> collapse_pendant(const Network& n, const TaxonSet& taxa);

/// Replaces the leaf `pendant.label` by the stored subnetwork.
Network expand_pendant(const Network& n, const Pendant& pendant);

/// Replaces everything below and including `v` by a copy of `sub` minus its root.
Network replace_pendant(const Network& n, NodeId v, const Network& sub);

}  // namespace tcnet
