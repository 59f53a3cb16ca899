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
#include <set>
#include <vector>

#include "tcnet/network.hpp"

namespace tcnet::testkit {

// Slow, independent re-derivations of library results. Every function here
// is exponential somewhere and meant for small instances only.

/// Label-preserving isomorphism by assigning the nodes of `a` top-down in
/// topological order and checking every edge between assigned nodes.
bool isomorphic_by_bijection(const Network& a, const Network& b);

/// Blobs as classes of the relation "u and v lie on a common undirected
/// cycle", plus tree nodes on no cycle. Each set is one blob.
std::set<std::set<NodeId>> blobs_by_cycles(const Network& n);

/// Minimum over all apexes of the summed lengths of directed paths found by
/// exhaustive DFS.
std::size_t up_down_distance_by_paths(const Network& n, NodeId x, NodeId y);

/// Number of directed paths from `v` to each leaf, taxa in sorted order, by
/// walking every path.
std::vector<std::size_t> path_counts_by_walk(const Network& n, NodeId v);

/// Leaf taxa reachable from every node, indexed by NodeId.
std::vector<TaxonSet> descendants_by_search(const Network& n);

/// Cleanup by repeated full scans: delete unlabelled sinks, suppress
/// unlabelled (1,1) nodes, drop one of each pair of parallel edges.
Graph naive_clean_up(Graph g);

/// Every network reachable by deleting any set of reticulation edges that
/// leaves each reticulation at least one in-edge, then cleaning up; pairwise
/// distinct up to isomorphism. Throws Error(TooLargeForOracle).
std::vector<Network> all_subnetworks(const Network& n);

/// The members of all_subnetworks(n) whose level is below the level of `n`.
std::vector<Network> lower_level_subnetworks(const Network& n);

/// The members of lower_level_subnetworks(n) with the most edges.
std::vector<Network> largest_lower_level_subnetworks(const Network& n);

/// Same sets of isomorphism classes, compared with isomorphic_by_bijection.
bool same_classes_by_bijection(const std::vector<Network>& a, const std::vector<Network>& b);

}  // namespace tcnet::testkit
