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

#include "tcnet/pendant.hpp"

#include <vector>

#include "tcnet/error.hpp"

namespace tcnet {

namespace {

bool is_pendant_root(const Network& n, NodeId v) {
  if (n.is_root(v) || n.parents(v).size() != 1) return false;
  auto below = descendant_nodes(n, v);
  std::vector<char> inside(n.id_bound(), 0);
  for (NodeId w : below) inside[w] = 1;
  for (NodeId w : below) {
    if (w == v) continue;
    for (NodeId p : n.parents(w))
      if (!inside[p]) return false;
  }
  return true;
}

// Copies `sub` minus its root into `g` and hangs it from `parent`.
void graft(Graph& g, NodeId parent, const Network& sub) {
  std::vector<NodeId> image(sub.id_bound(), 0);
  for (NodeId v : sub.topological_order()) {
    if (sub.is_root(v)) continue;
    image[v] = g.add_node(sub.is_leaf(v) ? sub.label(v) : std::string{});
  }
  for (const Edge& e : sub.edges()) {
    if (sub.is_root(e.tail)) {
      g.add_edge(parent, image[e.head]);
    } else {
      g.add_edge(image[e.tail], image[e.head]);
    }
  }
}

void remove_below(Graph& g, const Network& n, NodeId v) {
  for (NodeId w : descendant_nodes(n, v)) g.remove_node(w);
}

}  // namespace

std::optional<NodeId> pendant_root(const Network& n, const TaxonSet& taxa) {
  auto desc = descendant_taxa(n);
  for (NodeId v : n.topological_order())
    if (desc[v] == taxa && is_pendant_root(n, v)) return v;
  return std::nullopt;
}

Network extract_pendant(const Network& n, NodeId v) {
  Graph g;
  NodeId root = g.add_node();
  std::vector<NodeId> image(n.id_bound(), 0);
  auto below = descendant_nodes(n, v);
  std::vector<char> inside(n.id_bound(), 0);
  for (NodeId w : below) {
    inside[w] = 1;
    image[w] = g.add_node(n.is_leaf(w) ? n.label(w) : std::string{});
  }
  g.add_edge(root, image[v]);
  for (NodeId w : below)
    for (NodeId c : n.children(w))
      if (inside[c]) g.add_edge(image[w], image[c]);
  return Network(std::move(g));
}

std::pair<Network, Pendant> collapse_pendant(const Network& n, const TaxonSet& taxa) {
  auto v = pendant_root(n, taxa);
  if (!v) throw Error(Errc::NoPendantAtSet, "no pendant subnetwork has leaf set " + taxa.composite_label());
  Pendant pendant{taxa, taxa.composite_label(), extract_pendant(n, *v)};
  Graph g = n.graph();
  NodeId parent = n.parents(*v).front();
  remove_below(g, n, *v);
  g.add_edge(parent, g.add_node(pendant.label));
  return {Network(std::move(g)), std::move(pendant)};
}

Network expand_pendant(const Network& n, const Pendant& pendant) {
  NodeId leaf = n.leaf(pendant.label);
  return replace_pendant(n, leaf, pendant.subnetwork);
}

Network replace_pendant(const Network& n, NodeId v, const Network& sub) {
  NodeId parent = n.parents(v).front();
  Graph g = n.graph();
  remove_below(g, n, v);
  graft(g, parent, sub);
  return Network(std::move(g));
}

}  // namespace tcnet
