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

#include "tcnet/graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tcnet {

namespace {

void erase_one(std::vector<NodeId>& list, NodeId v) {
  auto it = std::find(list.begin(), list.end(), v);
  if (it == list.end()) throw std::out_of_range("edge endpoint not found");
  list.erase(it);
}

}  // namespace

void Graph::check(NodeId v) const {
  if (!contains(v)) throw std::out_of_range("node " + std::to_string(v) + " is not in the graph");
}

NodeId Graph::add_node(std::string label) {
  slots_.push_back(Slot{true, std::move(label), {}, {}});
  ++live_nodes_;
  return static_cast<NodeId>(slots_.size() - 1);
}

void Graph::add_edge(NodeId tail, NodeId head) {
  check(tail);
  check(head);
  slots_[tail].children.push_back(head);
  slots_[head].parents.push_back(tail);
  ++live_edges_;
}

void Graph::remove_edge(NodeId tail, NodeId head) {
  check(tail);
  check(head);
  erase_one(slots_[tail].children, head);
  erase_one(slots_[head].parents, tail);
  --live_edges_;
}

void Graph::remove_node(NodeId v) {
  check(v);
  auto parents = slots_[v].parents;
  for (NodeId p : parents) remove_edge(p, v);
  auto children = slots_[v].children;
  for (NodeId c : children) remove_edge(v, c);
  slots_[v].alive = false;
  slots_[v].label.clear();
  --live_nodes_;
}

void Graph::suppress(NodeId v) {
  check(v);
  if (indegree(v) != 1 || outdegree(v) != 1)
    throw std::logic_error("suppress requires an indegree-1 outdegree-1 node");
  NodeId u = slots_[v].parents.front();
  NodeId w = slots_[v].children.front();
  remove_node(v);
  add_edge(u, w);
}

NodeId Graph::subdivide(Edge e, std::string label) {
  remove_edge(e.tail, e.head);
  NodeId mid = add_node(std::move(label));
  add_edge(e.tail, mid);
  add_edge(mid, e.head);
  return mid;
}

bool Graph::has_edge(NodeId tail, NodeId head) const {
  if (!contains(tail) || !contains(head)) return false;
  const auto& ch = slots_[tail].children;
  return std::find(ch.begin(), ch.end(), head) != ch.end();
}

std::size_t Graph::edge_multiplicity(NodeId tail, NodeId head) const {
  if (!contains(tail)) return 0;
  const auto& ch = slots_[tail].children;
  return static_cast<std::size_t>(std::count(ch.begin(), ch.end(), head));
}

std::vector<NodeId> Graph::nodes() const {
  std::vector<NodeId> out;
  out.reserve(live_nodes_);
  for (NodeId v = 0; v < slots_.size(); ++v)
    if (slots_[v].alive) out.push_back(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(live_edges_);
  for (NodeId v = 0; v < slots_.size(); ++v) {
    if (!slots_[v].alive) continue;
    for (NodeId c : slots_[v].children) out.push_back({v, c});
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph Graph::from_named_edges(const std::vector<std::pair<std::string, std::string>>& edges) {
  Graph g;
  std::map<std::string, NodeId> ids;
  std::vector<std::string> order;
  auto id_of = [&](const std::string& name) {
    auto [it, inserted] = ids.try_emplace(name, 0);
    if (inserted) {
      it->second = g.add_node();
      order.push_back(name);
    }
    return it->second;
  };
  for (const auto& [from, to] : edges) {
    NodeId a = id_of(from);
    NodeId b = id_of(to);
    g.add_edge(a, b);
  }
  for (const auto& name : order) {
    NodeId v = ids.at(name);
    if (g.outdegree(v) == 0) g.set_label(v, name);
  }
  return g;
}

}  // namespace tcnet
