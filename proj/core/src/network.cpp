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

#include "tcnet/network.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace tcnet {

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Root: return "root";
    case NodeKind::Leaf: return "leaf";
    case NodeKind::Tree: return "tree";
    case NodeKind::Reticulation: return "reticulation";
  }
  return "?";
}

namespace {

std::string handle(const Graph& g, NodeId v) {
  if (!g.label(v).empty()) return "'" + g.label(v) + "'";
  return "#" + std::to_string(v);
}

// Kahn's algorithm; returns fewer nodes than the graph holds iff there is a cycle.
std::vector<NodeId> topological_sort(const Graph& g) {
  std::vector<std::size_t> remaining(g.id_bound(), 0);
  std::deque<NodeId> ready;
  for (NodeId v : g.nodes()) {
    remaining[v] = g.indegree(v);
    if (remaining[v] == 0) ready.push_back(v);
  }
  std::vector<NodeId> order;
  order.reserve(g.node_count());
  while (!ready.empty()) {
    NodeId v = ready.front();
    ready.pop_front();
    order.push_back(v);
    for (NodeId c : g.children(v))
      if (--remaining[c] == 0) ready.push_back(c);
  }
  return order;
}

}  // namespace

std::optional<Diagnostic> Network::diagnose(const Graph& g) {
  if (g.node_count() == 0) return Diagnostic{Errc::NoRoot, "the graph is empty"};

  auto order = topological_sort(g);
  if (order.size() != g.node_count())
    return Diagnostic{Errc::CycleDetected, "the graph contains a directed cycle"};

  std::vector<NodeId> roots;
  for (NodeId v : g.nodes())
    if (g.indegree(v) == 0) roots.push_back(v);
  if (roots.size() > 1)
    return Diagnostic{Errc::MultipleRoots, std::to_string(roots.size()) + " nodes have indegree 0"};
  NodeId root = roots.front();

  for (NodeId v : g.nodes()) {
    std::size_t in = g.indegree(v);
    std::size_t out = g.outdegree(v);
    bool ok = (in == 0 && out == 1) || (in == 1 && out == 0) || (in == 1 && out == 2) ||
              (in == 2 && out == 1);
    if (!ok)
      return Diagnostic{Errc::DegreeViolation, "node " + handle(g, v) + " has indegree " +
                                                   std::to_string(in) + " and outdegree " +
                                                   std::to_string(out)};
  }

  for (NodeId v : g.nodes()) {
    const auto& ch = g.children(v);
    if (ch.size() == 2 && ch[0] == ch[1])
      return Diagnostic{Errc::ParallelEdge, "node " + handle(g, v) + " has two parallel edges to " +
                                                handle(g, ch[0])};
  }

  std::vector<char> seen(g.id_bound(), 0);
  std::deque<NodeId> queue{root};
  seen[root] = 1;
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop_front();
    for (NodeId c : g.children(v))
      if (!seen[c]) {
        seen[c] = 1;
        queue.push_back(c);
      }
  }
  for (NodeId v : g.nodes())
    if (!seen[v])
      return Diagnostic{Errc::UnreachableNode, "node " + handle(g, v) + " is not reachable from the root"};

  std::set<std::string_view> taxa;
  for (NodeId v : g.nodes()) {
    bool leaf = g.outdegree(v) == 0;
    if (leaf && g.label(v).empty())
      return Diagnostic{Errc::InvalidTaxon, "leaf #" + std::to_string(v) + " has no label"};
    if (!leaf && !g.label(v).empty())
      return Diagnostic{Errc::InvalidTaxon, "non-leaf node " + handle(g, v) + " carries a label"};
    if (leaf && !taxa.insert(g.label(v)).second)
      return Diagnostic{Errc::DuplicateTaxon, "taxon '" + g.label(v) + "' labels more than one leaf"};
  }
  return std::nullopt;
}

Network::Network(Graph graph) : graph_(std::move(graph)) {
  if (auto diag = diagnose(graph_)) throw Error(diag->code, diag->message);
  topo_ = topological_sort(graph_);
  root_ = topo_.front();
  kinds_.assign(graph_.id_bound(), NodeKind::Leaf);
  for (NodeId v : topo_) {
    if (graph_.indegree(v) == 0) {
      kinds_[v] = NodeKind::Root;
    } else if (graph_.outdegree(v) == 0) {
      kinds_[v] = NodeKind::Leaf;
      leaf_by_taxon_.emplace(graph_.label(v), v);
    } else if (graph_.indegree(v) == 2) {
      kinds_[v] = NodeKind::Reticulation;
      ++reticulation_count_;
    } else {
      kinds_[v] = NodeKind::Tree;
    }
  }
}

std::optional<NodeId> Network::find_leaf(std::string_view taxon) const {
  auto it = leaf_by_taxon_.find(taxon);
  if (it == leaf_by_taxon_.end()) return std::nullopt;
  return it->second;
}

NodeId Network::leaf(std::string_view taxon) const {
  if (auto v = find_leaf(taxon)) return *v;
  throw Error(Errc::UnknownTaxon, "no leaf is labelled '" + std::string(taxon) + "'");
}

std::vector<NodeId> Network::leaves() const {
  std::vector<NodeId> out;
  for (const auto& [taxon, v] : leaf_by_taxon_) out.push_back(v);
  return out;
}

std::vector<NodeId> Network::reticulations() const {
  std::vector<NodeId> out;
  for (NodeId v : graph_.nodes())
    if (kinds_[v] == NodeKind::Reticulation) out.push_back(v);
  return out;
}

std::vector<Edge> Network::reticulation_edges() const {
  std::vector<Edge> out;
  for (NodeId r : reticulations())
    for (NodeId p : graph_.parents(r)) out.push_back({p, r});
  std::sort(out.begin(), out.end());
  return out;
}

TaxonSet Network::taxa() const {
  std::vector<std::string> out;
  out.reserve(leaf_by_taxon_.size());
  for (const auto& [taxon, v] : leaf_by_taxon_) out.push_back(taxon);
  return TaxonSet(std::move(out));
}

std::string Network::describe(NodeId v) const {
  if (contains(v) && is_leaf(v)) return label(v);
  return "#" + std::to_string(v);
}

bool is_tree_child(const Network& n) {
  for (NodeId v : n.topological_order()) {
    if (n.is_leaf(v)) continue;
    bool has_tree_child = false;
    for (NodeId c : n.children(v))
      if (!n.is_reticulation(c)) has_tree_child = true;
    if (!has_tree_child) return false;
  }
  return true;
}

std::vector<TaxonSet> descendant_taxa(const Network& n) {
  std::vector<TaxonSet> desc(n.id_bound());
  const auto& order = n.topological_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    NodeId v = *it;
    if (n.is_leaf(v)) {
      desc[v] = TaxonSet{n.label(v)};
      continue;
    }
    const auto& ch = n.children(v);
    desc[v] = desc[ch[0]];
    for (std::size_t i = 1; i < ch.size(); ++i) desc[v] = desc[v].united(desc[ch[i]]);
  }
  return desc;
}

std::vector<NodeId> descendant_nodes(const Network& n, NodeId v) {
  std::vector<char> seen(n.id_bound(), 0);
  std::vector<NodeId> out{v};
  seen[v] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (NodeId c : n.children(out[i]))
      if (!seen[c]) {
        seen[c] = 1;
        out.push_back(c);
      }
  return out;
}

}  // namespace tcnet
