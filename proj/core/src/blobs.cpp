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

#include "tcnet/blobs.hpp"

#include <algorithm>
#include <utility>

namespace tcnet {

bool Blob::contains(NodeId v) const { return std::binary_search(nodes.begin(), nodes.end(), v); }

namespace {

// Hopcroft-Tarjan biconnected components on the underlying undirected graph,
// iterative so deep networks do not exhaust the stack. Returns node sets.
std::vector<std::vector<NodeId>> biconnected_components(const Network& n) {
  const NodeId bound = n.id_bound();
  std::vector<std::vector<NodeId>> adj(bound);
  for (const Edge& e : n.edges()) {
    adj[e.tail].push_back(e.head);
    adj[e.head].push_back(e.tail);
  }

  std::vector<int> disc(bound, -1), low(bound, 0);
  std::vector<Edge> edge_stack;
  std::vector<std::vector<NodeId>> out;
  int timer = 0;

  struct Frame {
    NodeId v;
    NodeId parent;
    std::size_t next;
  };
  NodeId start = n.root();
  std::vector<Frame> stack{{start, start, 0}};
  disc[start] = low[start] = timer++;

  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next < adj[f.v].size()) {
      NodeId w = adj[f.v][f.next++];
      if (disc[w] == -1) {
        edge_stack.push_back({f.v, w});
        disc[w] = low[w] = timer++;
        stack.push_back({w, f.v, 0});
      } else if (w != f.parent && disc[w] < disc[f.v]) {
        edge_stack.push_back({f.v, w});
        low[f.v] = std::min(low[f.v], disc[w]);
      }
      continue;
    }
    Frame done = f;
    stack.pop_back();
    if (stack.empty()) break;
    NodeId u = stack.back().v;
    low[u] = std::min(low[u], low[done.v]);
    if (low[done.v] >= disc[u]) {
      std::vector<NodeId> comp;
      while (!edge_stack.empty()) {
        Edge e = edge_stack.back();
        edge_stack.pop_back();
        comp.push_back(e.tail);
        comp.push_back(e.head);
        if (e.tail == u && e.head == done.v) break;
      }
      std::sort(comp.begin(), comp.end());
      comp.erase(std::unique(comp.begin(), comp.end()), comp.end());
      out.push_back(std::move(comp));
    }
  }
  return out;
}

}  // namespace

std::vector<Blob> blobs(const Network& n) {
  auto desc = descendant_taxa(n);
  std::vector<int> position(n.id_bound(), 0);
  const auto& order = n.topological_order();
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<int>(i);

  std::vector<Blob> out;
  std::vector<char> covered(n.id_bound(), 0);
  for (auto& comp : biconnected_components(n)) {
    if (comp.size() < 3) continue;
    Blob b;
    b.nodes = std::move(comp);
    for (NodeId v : b.nodes) {
      covered[v] = 1;
      if (n.is_reticulation(v)) ++b.level;
    }
    b.pure_node = *std::min_element(b.nodes.begin(), b.nodes.end(),
                                    [&](NodeId a, NodeId c) { return position[a] < position[c]; });
    out.push_back(std::move(b));
  }
  for (NodeId v : order) {
    if (n.is_tree_node(v) && !covered[v]) {
      Blob b;
      b.nodes = {v};
      b.pure_node = v;
      out.push_back(std::move(b));
    }
  }
  for (Blob& b : out) b.leaf_descendants = desc[b.pure_node];
  std::sort(out.begin(), out.end(), [&](const Blob& a, const Blob& c) {
    return position[a.pure_node] < position[c.pure_node];
  });
  return out;
}

std::size_t level(const Network& n) {
  std::size_t k = 0;
  for (const Blob& b : blobs(n)) k = std::max(k, b.level);
  return k;
}

std::vector<int> blob_membership(const std::vector<Blob>& bs, NodeId id_bound) {
  std::vector<int> of(id_bound, -1);
  for (std::size_t i = 0; i < bs.size(); ++i)
    for (NodeId v : bs[i].nodes) of[v] = static_cast<int>(i);
  return of;
}

}  // namespace tcnet
