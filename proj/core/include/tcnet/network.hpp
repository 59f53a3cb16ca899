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
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tcnet/error.hpp"
#include "tcnet/graph.hpp"
#include "tcnet/taxon_set.hpp"

namespace tcnet {

enum class NodeKind : std::uint8_t { Root, Leaf, Tree, Reticulation };

std::string_view to_string(NodeKind kind);

/// The first invariant a raw graph violates, as reported by `diagnose`.
struct Diagnostic {
  Errc code;
  std::string message;
};

/// A rooted binary phylogenetic network: a DAG with one root (in 0, out 1),
/// leaves (in 1, out 0) bijectively labelled by taxa, tree nodes (in 1, out 2)
/// and reticulations (in 2, out 1). Instances are immutable once built; every
/// operation in the library returns a new network.
class Network {
 public:
  /// Validates `graph` and adopts it. Throws Error carrying the code of the
  /// first violated invariant.
  explicit Network(Graph graph);

  static std::optional<Diagnostic> diagnose(const Graph& graph);

  const Graph& graph() const { return graph_; }
  NodeId root() const { return root_; }
  NodeKind kind(NodeId v) const { return kinds_[v]; }
  bool contains(NodeId v) const { return graph_.contains(v); }
  const std::vector<NodeId>& parents(NodeId v) const { return graph_.parents(v); }
  const std::vector<NodeId>& children(NodeId v) const { return graph_.children(v); }
  const std::string& label(NodeId v) const { return graph_.label(v); }

  bool is_root(NodeId v) const { return kinds_[v] == NodeKind::Root; }
  bool is_leaf(NodeId v) const { return kinds_[v] == NodeKind::Leaf; }
  bool is_tree_node(NodeId v) const { return kinds_[v] == NodeKind::Tree; }
  bool is_reticulation(NodeId v) const { return kinds_[v] == NodeKind::Reticulation; }

  std::optional<NodeId> find_leaf(std::string_view taxon) const;
  /// Throws Error(UnknownTaxon) when the taxon is not a leaf label.
  NodeId leaf(std::string_view taxon) const;

  /// Live nodes, root first, every node after all of its parents.
  const std::vector<NodeId>& topological_order() const { return topo_; }
  std::vector<NodeId> nodes() const { return graph_.nodes(); }
  std::vector<NodeId> leaves() const;
  std::vector<NodeId> reticulations() const;
  std::vector<Edge> edges() const { return graph_.edges(); }
  std::vector<Edge> reticulation_edges() const;
  TaxonSet taxa() const;

  std::size_t node_count() const { return graph_.node_count(); }
  std::size_t edge_count() const { return graph_.edge_count(); }
  std::size_t leaf_count() const { return leaf_by_taxon_.size(); }
  std::size_t reticulation_count() const { return reticulation_count_; }
  NodeId id_bound() const { return graph_.id_bound(); }

  /// Human-readable handle for diagnostics: the taxon for leaves, "#id" otherwise.
  std::string describe(NodeId v) const;

 private:
  Graph graph_;
  NodeId root_ = 0;
  std::vector<NodeKind> kinds_;
  std::vector<NodeId> topo_;
  std::map<std::string, NodeId, std::less<>> leaf_by_taxon_;
  std::size_t reticulation_count_ = 0;
};

/// Every non-leaf node has at least one child that is a tree node or a leaf.
bool is_tree_child(const Network& n);

/// Leaf-descendant taxa of every node, indexed by NodeId (dead ids stay empty).
std::vector<TaxonSet> descendant_taxa(const Network& n);

/// Nodes reachable from `v` by directed paths, `v` included.
std::vector<NodeId> descendant_nodes(const Network& n, NodeId v);

}  // namespace tcnet
