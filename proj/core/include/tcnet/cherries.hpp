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
#include <vector>

#include "tcnet/blobs.hpp"
#include "tcnet/network.hpp"

namespace tcnet {

/// Non-reticulations x, y with parents p_x, p_y where p_y is a reticulation,
/// p_x is its other-than-g_y parent, and g_y is the remaining parent.
struct RetCherryShape {
  NodeId x = 0;
  NodeId y = 0;
  NodeId p_x = 0;
  NodeId p_y = 0;
  NodeId g_y = 0;

  friend bool operator==(const RetCherryShape&, const RetCherryShape&) = default;
};

/// Every reticulated cherry shape of `n`, in ascending (p_y, p_x) order.
std::vector<RetCherryShape> ret_cherry_shapes(const Network& n);

/// A shape whose p_x is a lowest tree node of `blob`; deterministic. Exists
/// for every blob of level >= 1 in a tree-child network.
std::optional<RetCherryShape> lowest_ret_cherry_shape(const Network& n, const Blob& blob);

bool is_ret_cherry_shape(const Network& n, const RetCherryShape& s);

/// Deletes (p_x, p_y) and cleans up. Throws Error(ShapeNotPresent).
Network cut_ret_cherry(const Network& n, const RetCherryShape& s);
/// Deletes (g_y, p_y) and cleans up. Throws Error(ShapeNotPresent).
Network isolate_ret_cherry(const Network& n, const RetCherryShape& s);

enum class CherryKind { Cherry, Reticulated };

/// A leaf pair forming a cherry or a reticulated cherry. For reticulated
/// cherries the reticulation is on `y`; plain cherries have x < y.
struct CherryPair {
  std::string x;
  std::string y;
  CherryKind kind = CherryKind::Cherry;

  friend bool operator==(const CherryPair&, const CherryPair&) = default;
};

std::vector<CherryPair> find_cherries(const Network& n);

/// What reduce_pair removed, in terms of node ids of the reduced network.
struct ReductionRecord {
  CherryKind kind = CherryKind::Cherry;
  std::string kept;
  std::string removed;
  // Reticulated only: the edge the deleted reticulation edge hung from. When
  // `attach_child_is_cherry_parent` is set the edge ends at the re-created
  // parent of `kept` rather than at `attach_child`.
  NodeId attach_parent = 0;
  NodeId attach_child = 0;
  bool attach_child_is_cherry_parent = false;
};

/// Reduces the cherry or reticulated cherry on {x, y}: a cherry loses `y`; a
/// reticulated cherry is isolated and then loses its reticulated leaf.
/// Throws Error(NoCherryOnPair).
std::pair<Network, ReductionRecord> reduce_pair(const Network& n, const std::string& x,
                                                const std::string& y);

/// Undoes reduce_pair on the network it returned.
Network expand_pair(const Network& reduced, const ReductionRecord& record);

}  // namespace tcnet
