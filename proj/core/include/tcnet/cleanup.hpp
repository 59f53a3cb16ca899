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

#include <cstdint>
#include <optional>
#include <vector>

#include "tcnet/graph.hpp"
#include "tcnet/network.hpp"

namespace tcnet {

/// Rewrites `g` until none of these applies, trying them in this order:
///   1. delete an unlabelled node of outdegree 0;
///   2. suppress an unlabelled node of indegree 1 and outdegree 1;
///   3. delete one of two parallel edges (the endpoints then fall under 2).
/// With a seed, each step instead picks uniformly among all applicable
/// rewrites; used to check that the result does not depend on the order.
Graph clean_up_graph(Graph g, std::optional<std::uint64_t> seed = std::nullopt);

/// clean_up_graph followed by validation. Throws Error(NotCleanable).
Network clean_up(Graph g);

/// Deletes reticulation edge `e` and cleans up: a maximum subnetwork.
/// Throws Error(NotReticulationEdge).
Network delete_reticulation_edge(const Network& n, Edge e);

/// Deletes all of `edges` at once and cleans up. Each must be a reticulation
/// edge and no two may enter the same reticulation.
Network delete_edges(const Network& n, const std::vector<Edge>& edges);

/// The deletion removes exactly two nodes and three edges.
bool is_valid_edge(const Network& n, Edge e);

/// Every reticulation edge is valid.
bool is_valid_network(const Network& n);

}  // namespace tcnet
