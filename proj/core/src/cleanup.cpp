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

#include "tcnet/cleanup.hpp"

#include <random>
#include <set>
#include <string>

#include "tcnet/error.hpp"

namespace tcnet {

namespace {

enum class Rule { DeleteSink, Suppress, Parallel };

bool deletable_sink(const Graph& g, NodeId v) {
  return g.contains(v) && g.outdegree(v) == 0 && g.label(v).empty();
}

bool suppressible(const Graph& g, NodeId v) {
  return g.contains(v) && g.indegree(v) == 1 && g.outdegree(v) == 1 && g.label(v).empty();
}

std::optional<NodeId> parallel_child(const Graph& g, NodeId v) {
  if (!g.contains(v)) return std::nullopt;
  const auto& ch = g.children(v);
  for (std::size_t i = 0; i < ch.size(); ++i)
    for (std::size_t j = i + 1; j < ch.size(); ++j)
      if (ch[i] == ch[j]) return ch[i];
  return std::nullopt;
}

bool applies(const Graph& g, NodeId v, Rule r) {
  switch (r) {
    case Rule::DeleteSink: return deletable_sink(g, v);
    case Rule::Suppress: return suppressible(g, v);
    case Rule::Parallel: return parallel_child(g, v).has_value();
  }
  return false;
}

// Applies `r` at `v` and returns the nodes whose applicable rules may have changed.
std::vector<NodeId> apply(Graph& g, NodeId v, Rule r) {
  std::vector<NodeId> touched;
  switch (r) {
    case Rule::DeleteSink:
      touched = g.parents(v);
      g.remove_node(v);
      break;
    case Rule::Suppress:
      touched = {g.parents(v).front(), g.children(v).front()};
      g.suppress(v);
      break;
    case Rule::Parallel: {
      NodeId c = *parallel_child(g, v);
      g.remove_edge(v, c);
      touched = {v, c};
      break;
    }
  }
  return touched;
}

constexpr Rule kRules[] = {Rule::DeleteSink, Rule::Suppress, Rule::Parallel};

Graph clean_in_order(Graph g) {
  auto nodes = g.nodes();
  std::set<NodeId> dirty(nodes.begin(), nodes.end());
  while (!dirty.empty()) {
    bool applied = false;
    for (Rule r : kRules) {
      for (auto it = dirty.begin(); it != dirty.end();) {
        NodeId v = *it;
        bool any = false;
        for (Rule q : kRules) any = any || applies(g, v, q);
        if (!any) {
          it = dirty.erase(it);
          continue;
        }
        if (applies(g, v, r)) {
          for (NodeId t : apply(g, v, r)) dirty.insert(t);
          applied = true;
          break;
        }
        ++it;
      }
      if (applied) break;
    }
    if (!applied) break;
  }
  return g;
}

Graph clean_randomly(Graph g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  while (true) {
    std::vector<std::pair<NodeId, Rule>> options;
    for (NodeId v : g.nodes())
      for (Rule r : kRules)
        if (applies(g, v, r)) options.emplace_back(v, r);
    if (options.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    auto [v, r] = options[pick(rng)];
    apply(g, v, r);
  }
  return g;
}

void require_reticulation_edge(const Network& n, Edge e) {
  if (!n.contains(e.tail) || !n.contains(e.head) || !n.graph().has_edge(e.tail, e.head))
    throw Error(Errc::NotReticulationEdge,
                "(" + n.describe(e.tail) + "," + n.describe(e.head) + ") is not an edge");
  if (!n.is_reticulation(e.head))
    throw Error(Errc::NotReticulationEdge,
                "head " + n.describe(e.head) + " of the edge is not a reticulation");
}

}  // namespace

Graph clean_up_graph(Graph g, std::optional<std::uint64_t> seed) {
  return seed ? clean_randomly(std::move(g), *seed) : clean_in_order(std::move(g));
}

Network clean_up(Graph g) {
  Graph cleaned = clean_up_graph(std::move(g));
  if (auto diag = Network::diagnose(cleaned))
    throw Error(Errc::NotCleanable, "cleanup did not yield a network: " + diag->message);
  return Network(std::move(cleaned));
}

Network delete_reticulation_edge(const Network& n, Edge e) {
  require_reticulation_edge(n, e);
  Graph g = n.graph();
  g.remove_edge(e.tail, e.head);
  return clean_up(std::move(g));
}

Network delete_edges(const Network& n, const std::vector<Edge>& edges) {
  std::set<NodeId> heads;
  for (const Edge& e : edges) {
    require_reticulation_edge(n, e);
    if (!heads.insert(e.head).second)
      throw Error(Errc::NotReticulationEdge,
                  "two deleted edges enter reticulation " + n.describe(e.head));
  }
  Graph g = n.graph();
  for (const Edge& e : edges) g.remove_edge(e.tail, e.head);
  return clean_up(std::move(g));
}

bool is_valid_edge(const Network& n, Edge e) {
  Network m = delete_reticulation_edge(n, e);
  return m.node_count() + 2 == n.node_count() && m.edge_count() + 3 == n.edge_count();
}

bool is_valid_network(const Network& n) {
  for (const Edge& e : n.reticulation_edges())
    if (!is_valid_edge(n, e)) return false;
  return true;
}

}  // namespace tcnet
