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

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tcnet {

/// Node identifiers are stable: removing a node never renumbers the others,
/// so records taken before an edit still point at the surviving nodes.
using NodeId = std::uint32_t;

struct Edge {
  NodeId tail = 0;
  NodeId head = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Mutable directed multigraph with optional node labels. This is the raw
/// form networks are validated from and the scratch space cleanup works in;
/// parallel edges and arbitrary degrees are representable here.
class Graph {
 public:
  NodeId add_node(std::string label = {});
  void add_edge(NodeId tail, NodeId head);
  /// Removes one copy of the edge. Throws std::out_of_range if it is absent.
  void remove_edge(NodeId tail, NodeId head);
  void remove_node(NodeId v);
  /// Replaces u->v->w by u->w. `v` must have indegree 1 and outdegree 1.
  void suppress(NodeId v);
  /// Inserts a fresh node in the middle of `e` and returns it.
  NodeId subdivide(Edge e, std::string label = {});

  bool contains(NodeId v) const { return v < slots_.size() && slots_[v].alive; }
  bool has_edge(NodeId tail, NodeId head) const;
  std::size_t edge_multiplicity(NodeId tail, NodeId head) const;

  const std::vector<NodeId>& parents(NodeId v) const { return slots_[v].parents; }
  const std::vector<NodeId>& children(NodeId v) const { return slots_[v].children; }
  std::size_t indegree(NodeId v) const { return slots_[v].parents.size(); }
  std::size_t outdegree(NodeId v) const { return slots_[v].children.size(); }
  const std::string& label(NodeId v) const { return slots_[v].label; }
  void set_label(NodeId v, std::string label) { slots_[v].label = std::move(label); }

  /// Live node ids in ascending order.
  std::vector<NodeId> nodes() const;
  std::vector<Edge> edges() const;
  std::size_t node_count() const { return live_nodes_; }
  std::size_t edge_count() const { return live_edges_; }
  /// One past the largest id ever handed out.
  NodeId id_bound() const { return static_cast<NodeId>(slots_.size()); }

  /// Builds a graph from named edges. Nodes without outgoing edges are
  /// labelled with their name; every other name is only a handle.
  static Graph from_named_edges(const std::vector<std::pair<std::string, std::string>>& edges);

 private:
  struct Slot {
    bool alive = true;
    std::string label;
    std::vector<NodeId> parents;
    std::vector<NodeId> children;
  };

  void check(NodeId v) const;

  std::vector<Slot> slots_;
  std::size_t live_nodes_ = 0;
  std::size_t live_edges_ = 0;
};

}  // namespace tcnet
