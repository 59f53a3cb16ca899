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
#include <vector>

#include "tcnet/network.hpp"

namespace tcnet {

/// A maximal biconnected component with at least three nodes, or a tree node
/// that lies in no such component.
struct Blob {
  std::vector<NodeId> nodes;  // ascending
  std::size_t level = 0;      // reticulations among `nodes`
  NodeId pure_node = 0;       // the unique node of the blob without a parent in it
  TaxonSet leaf_descendants;

  bool contains(NodeId v) const;
};

/// All blobs, ordered by the topological position of their pure nodes.
std::vector<Blob> blobs(const Network& n);

/// Maximum blob level; 0 for trees and the single-leaf network.
std::size_t level(const Network& n);

/// Index into `bs` of the blob holding each node, or -1 (root, leaves).
std::vector<int> blob_membership(const std::vector<Blob>& bs, NodeId id_bound);

}  // namespace tcnet
