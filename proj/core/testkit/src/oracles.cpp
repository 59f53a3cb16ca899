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

#include "tcnet/testkit/oracles.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <queue>

#include "tcnet/displays.hpp"
#include "tcnet/error.hpp"

namespace tcnet::testkit {

namespace {

using Adjacency = std::map<NodeId, std::vector<NodeId>>;

Adjacency undirected(const Network& n) {
  Adjacency adj;
  for (NodeId v : n.nodes()) adj[v];
  for (const Edge& e : n.edges()) {
    adj[e.tail].push_back(e.head);
    adj[e.head].push_back(e.tail);
  }
  return adj;
}

// Whether `to` is reachable from `from` avoiding node `skip` and the single
// undirected edge {cut_a, cut_b}.
bool connected(const Adjacency& adj, NodeId from, NodeId to, std::optional<NodeId> skip,
               std::optional<std::pair<NodeId, NodeId>> cut) {
  std::set<NodeId> seen{from};
  std::vector<NodeId> stack{from};
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    if (v == to) return true;
    for (NodeId w : adj.at(v)) {
      if (skip && w == *skip) continue;
      if (cut && ((v == cut->first && w == cut->second) || (v == cut->second && w == cut->first))) continue;
      if (seen.insert(w).second) stack.push_back(w);
    }
  }
  return false;
}

bool on_common_cycle(const Network& n, const Adjacency& adj, NodeId u, NodeId v) {
  const auto& pu = n.parents(u);
  const auto& pv = n.parents(v);
  bool adjacent_pair = std::find(pu.begin(), pu.end(), v) != pu.end() || std::find(pv.begin(), pv.end(), u) != pv.end();
  if (adjacent_pair) return connected(adj, u, v, std::nullopt, std::make_pair(u, v));
  if (!connected(adj, u, v, std::nullopt, std::nullopt)) return false;
  for (const auto& [z, _] : adj)
    if (z != u && z != v && !connected(adj, u, v, z, std::nullopt)) return false;
  return true;
}

std::size_t level_by_cycles(const Network& n) {
  std::size_t best = 0;
  for (const auto& b : blobs_by_cycles(n))
    best = std::max<std::size_t>(best, std::count_if(b.begin(), b.end(), [&](NodeId v) { return n.is_reticulation(v); }));
  return best;
}

std::vector<Network> dedup_by_bijection(std::vector<Network> all) {
  std::vector<Network> out;
  for (Network& m : all)
    if (std::none_of(out.begin(), out.end(), [&](const Network& o) { return isomorphic_by_bijection(o, m); }))
      out.push_back(std::move(m));
  return out;
}

}  // namespace

bool isomorphic_by_bijection(const Network& a, const Network& b) {
  if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count() || a.taxa() != b.taxa()) return false;
  std::map<NodeId, NodeId> image;
  std::set<NodeId> used;
  for (NodeId v : a.leaves()) {
    NodeId w = b.leaf(a.label(v));
    image[v] = w;
    used.insert(w);
  }
  auto edge_count = [](const Network& n, NodeId t, NodeId h) {
    const auto& cs = n.children(t);
    return std::count(cs.begin(), cs.end(), h);
  };
  std::vector<NodeId> order;
  for (NodeId v : a.topological_order())
    if (!a.is_leaf(v)) order.push_back(v);
  std::vector<NodeId> b_inner;
  for (NodeId w : b.nodes())
    if (!b.is_leaf(w)) b_inner.push_back(w);

  std::function<bool(std::size_t)> assign = [&](std::size_t i) {
    if (i == order.size()) return true;
    NodeId v = order[i];
    for (NodeId w : b_inner) {
      if (used.count(w) || a.kind(v) != b.kind(w)) continue;
      bool fits = true;
      for (NodeId p : a.parents(v)) fits = fits && edge_count(a, p, v) == edge_count(b, image.at(p), w);
      for (NodeId c : a.children(v))
        if (a.is_leaf(c)) fits = fits && edge_count(a, v, c) == edge_count(b, w, image.at(c));
      if (!fits) continue;
      image[v] = w;
      used.insert(w);
      if (assign(i + 1)) return true;
      image.erase(v);
      used.erase(w);
    }
    return false;
  };
  if (!assign(0)) return false;
  std::vector<Edge> mapped;
  for (const Edge& e : a.edges()) mapped.push_back({image.at(e.tail), image.at(e.head)});
  std::sort(mapped.begin(), mapped.end());
  return mapped == b.edges();
}

std::set<std::set<NodeId>> blobs_by_cycles(const Network& n) {
  Adjacency adj = undirected(n);
  std::vector<NodeId> inner;
  for (NodeId v : n.nodes())
    if (n.is_tree_node(v) || n.is_reticulation(v)) inner.push_back(v);
  std::map<NodeId, std::set<NodeId>> cls;
  for (NodeId v : inner) cls[v] = {v};
  for (std::size_t i = 0; i < inner.size(); ++i)
    for (std::size_t j = i + 1; j < inner.size(); ++j)
      if (on_common_cycle(n, adj, inner[i], inner[j])) {
        cls[inner[i]].insert(inner[j]);
        cls[inner[j]].insert(inner[i]);
      }
  std::set<std::set<NodeId>> out;
  for (auto& [v, c] : cls) out.insert(c);
  return out;
}

std::size_t up_down_distance_by_paths(const Network& n, NodeId x, NodeId y) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (NodeId apex : n.nodes()) {
    std::size_t to_x = std::numeric_limits<std::size_t>::max();
    std::size_t to_y = to_x;
    std::function<void(NodeId, std::size_t)> walk = [&](NodeId v, std::size_t len) {
      if (v == x) to_x = std::min(to_x, len);
      if (v == y) to_y = std::min(to_y, len);
      for (NodeId c : n.children(v)) walk(c, len + 1);
    };
    walk(apex, 0);
    if (to_x != std::numeric_limits<std::size_t>::max() && to_y != std::numeric_limits<std::size_t>::max())
      best = std::min(best, to_x + to_y);
  }
  return best;
}

std::vector<std::size_t> path_counts_by_walk(const Network& n, NodeId v) {
  const auto taxa = n.taxa().items();
  std::vector<std::size_t> counts(taxa.size(), 0);
  std::function<void(NodeId)> walk = [&](NodeId u) {
    if (n.is_leaf(u)) {
      auto it = std::lower_bound(taxa.begin(), taxa.end(), n.label(u));
      ++counts[static_cast<std::size_t>(it - taxa.begin())];
    }
    for (NodeId c : n.children(u)) walk(c);
  };
  walk(v);
  return counts;
}

std::vector<TaxonSet> descendants_by_search(const Network& n) {
  std::vector<TaxonSet> out(n.id_bound());
  for (NodeId v : n.nodes()) {
    std::set<NodeId> seen{v};
    std::queue<NodeId> q;
    q.push(v);
    while (!q.empty()) {
      NodeId u = q.front();
      q.pop();
      if (n.is_leaf(u)) out[v].insert(n.label(u));
      for (NodeId c : n.children(u))
        if (seen.insert(c).second) q.push(c);
    }
  }
  return out;
}

Graph naive_clean_up(Graph g) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (NodeId v : g.nodes()) {
      if (!g.contains(v) || !g.label(v).empty()) continue;
      if (g.outdegree(v) == 0 && g.indegree(v) > 0) {
        g.remove_node(v);
        changed = true;
      } else if (g.indegree(v) == 1 && g.outdegree(v) == 1) {
        g.suppress(v);
        changed = true;
      } else {
        for (NodeId c : std::vector<NodeId>(g.children(v)))
          if (g.edge_multiplicity(v, c) > 1) {
            g.remove_edge(v, c);
            changed = true;
            break;
          }
      }
    }
  }
  return g;
}

std::vector<Network> all_subnetworks(const Network& n) {
  auto rets = n.reticulations();
  if (2 * rets.size() > kDisplayEdgeLimit)
    throw Error(Errc::TooLargeForOracle, std::to_string(2 * rets.size()) + " reticulation edges exceed the limit");
  std::vector<Network> all;
  std::vector<int> choice(rets.size(), 0);  // 0 keep both, 1 drop first, 2 drop second
  while (true) {
    Graph g = n.graph();
    for (std::size_t i = 0; i < rets.size(); ++i)
      if (choice[i] > 0) g.remove_edge(n.parents(rets[i])[static_cast<std::size_t>(choice[i] - 1)], rets[i]);
    all.emplace_back(naive_clean_up(std::move(g)));
    std::size_t i = 0;
    while (i < choice.size() && choice[i] == 2) choice[i++] = 0;
    if (i == choice.size()) break;
    ++choice[i];
  }
  return dedup_by_bijection(std::move(all));
}

std::vector<Network> lower_level_subnetworks(const Network& n) {
  std::size_t k = level_by_cycles(n);
  std::vector<Network> out;
  for (Network& m : all_subnetworks(n))
    if (level_by_cycles(m) < k) out.push_back(std::move(m));
  return out;
}

std::vector<Network> largest_lower_level_subnetworks(const Network& n) {
  auto lower = lower_level_subnetworks(n);
  std::size_t most = 0;
  for (const Network& m : lower) most = std::max(most, m.edge_count());
  std::vector<Network> out;
  for (Network& m : lower)
    if (m.edge_count() == most) out.push_back(std::move(m));
  return out;
}

bool same_classes_by_bijection(const std::vector<Network>& a, const std::vector<Network>& b) {
  auto covered = [](const std::vector<Network>& from, const std::vector<Network>& in) {
    return std::all_of(from.begin(), from.end(), [&](const Network& m) {
      return std::any_of(in.begin(), in.end(), [&](const Network& o) { return isomorphic_by_bijection(m, o); });
    });
  };
  return covered(a, b) && covered(b, a);
}

}  // namespace tcnet::testkit
