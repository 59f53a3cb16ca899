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

#include "tcnet/cherries.hpp"

#include <algorithm>

#include "tcnet/cleanup.hpp"
#include "tcnet/error.hpp"

namespace tcnet {

namespace {

NodeId other_of(const std::vector<NodeId>& pair, NodeId v) { return pair[0] == v ? pair[1] : pair[0]; }

std::string show(const Network& n, const RetCherryShape& s) {
  return "<" + n.describe(s.x) + "," + n.describe(s.y) + ">";
}

void require_shape(const Network& n, const RetCherryShape& s) {
  if (!is_ret_cherry_shape(n, s))
    throw Error(Errc::ShapeNotPresent, show(n, s) + " is not a reticulated cherry shape");
}

}  // namespace

bool is_ret_cherry_shape(const Network& n, const RetCherryShape& s) {
  for (NodeId v : {s.x, s.y, s.p_x, s.p_y, s.g_y})
    if (!n.contains(v)) return false;
  if (!n.is_reticulation(s.p_y) || n.is_reticulation(s.x) || n.is_reticulation(s.y)) return false;
  if (n.is_root(s.x) || n.is_root(s.y)) return false;
  if (n.children(s.p_y).front() != s.y || n.parents(s.x).front() != s.p_x) return false;
  const auto& ps = n.parents(s.p_y);
  if (s.p_x == s.g_y) return false;
  return std::find(ps.begin(), ps.end(), s.p_x) != ps.end() &&
         std::find(ps.begin(), ps.end(), s.g_y) != ps.end();
}

std::vector<RetCherryShape> ret_cherry_shapes(const Network& n) {
  std::vector<RetCherryShape> out;
  for (NodeId r : n.reticulations()) {
    NodeId y = n.children(r).front();
    if (n.is_reticulation(y)) continue;
    auto ps = n.parents(r);
    std::sort(ps.begin(), ps.end());
    for (NodeId p : ps) {
      if (!n.is_tree_node(p)) continue;
      NodeId x = other_of(n.children(p), r);
      if (n.is_reticulation(x)) continue;
      out.push_back({x, y, p, r, other_of(n.parents(r), p)});
    }
  }
  return out;
}

std::optional<RetCherryShape> lowest_ret_cherry_shape(const Network& n, const Blob& blob) {
  if (blob.level == 0) return std::nullopt;
  const auto& order = n.topological_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    NodeId a = *it;
    if (!n.is_tree_node(a) || !blob.contains(a)) continue;
    // The last tree node of the blob in topological order has no tree-node
    // descendant inside the blob.
    const auto& ch = n.children(a);
    for (NodeId c : ch) {
      if (!n.is_reticulation(c) || !blob.contains(c)) continue;
      RetCherryShape s{other_of(ch, c), n.children(c).front(), a, c, other_of(n.parents(c), a)};
      if (is_ret_cherry_shape(n, s)) return s;
    }
    return std::nullopt;
  }
  return std::nullopt;
}

Network cut_ret_cherry(const Network& n, const RetCherryShape& s) {
  require_shape(n, s);
  return delete_reticulation_edge(n, {s.p_x, s.p_y});
}

Network isolate_ret_cherry(const Network& n, const RetCherryShape& s) {
  require_shape(n, s);
  return delete_reticulation_edge(n, {s.g_y, s.p_y});
}

std::vector<CherryPair> find_cherries(const Network& n) {
  std::vector<CherryPair> out;
  for (NodeId v : n.topological_order()) {
    if (!n.is_tree_node(v)) continue;
    const auto& ch = n.children(v);
    if (n.is_leaf(ch[0]) && n.is_leaf(ch[1])) {
      auto [a, b] = std::minmax(n.label(ch[0]), n.label(ch[1]));
      out.push_back({a, b, CherryKind::Cherry});
    }
  }
  for (const RetCherryShape& s : ret_cherry_shapes(n))
    if (n.is_leaf(s.x) && n.is_leaf(s.y))
      out.push_back({n.label(s.x), n.label(s.y), CherryKind::Reticulated});
  std::sort(out.begin(), out.end(), [](const CherryPair& a, const CherryPair& b) {
    return std::tie(a.x, a.y, a.kind) < std::tie(b.x, b.y, b.kind);
  });
  return out;
}

std::pair<Network, ReductionRecord> reduce_pair(const Network& n, const std::string& x,
                                                const std::string& y) {
  NodeId vx = n.leaf(x);
  NodeId vy = n.leaf(y);
  NodeId px = n.parents(vx).front();
  NodeId py = n.parents(vy).front();

  if (px == py) {
    Graph g = n.graph();
    g.remove_node(vy);
    return {clean_up(std::move(g)), ReductionRecord{CherryKind::Cherry, x, y, 0, 0, false}};
  }

  for (const RetCherryShape& s : ret_cherry_shapes(n)) {
    bool forward = s.x == vx && s.y == vy;
    bool backward = s.x == vy && s.y == vx;
    if (!forward && !backward) continue;
    ReductionRecord rec;
    rec.kind = CherryKind::Reticulated;
    rec.kept = n.label(s.x);
    rec.removed = n.label(s.y);
    rec.attach_parent = n.parents(s.g_y).front();
    rec.attach_child = other_of(n.children(s.g_y), s.p_y);
    rec.attach_child_is_cherry_parent = rec.attach_child == s.p_x;
    Graph g = n.graph();
    g.remove_edge(s.g_y, s.p_y);
    g.remove_node(s.y);
    return {clean_up(std::move(g)), rec};
  }
  throw Error(Errc::NoCherryOnPair, "{" + x + "," + y + "} is neither a cherry nor a reticulated cherry");
}

Network expand_pair(const Network& reduced, const ReductionRecord& rec) {
  Graph g = reduced.graph();
  NodeId kept = reduced.leaf(rec.kept);
  NodeId parent = g.subdivide({g.parents(kept).front(), kept});
  NodeId removed = g.add_node(rec.removed);
  g.add_edge(parent, removed);
  if (rec.kind == CherryKind::Reticulated) {
    NodeId head = rec.attach_child_is_cherry_parent ? parent : rec.attach_child;
    if (!g.has_edge(rec.attach_parent, head))
      throw Error(Errc::ValidationError, "reduction record does not match the network");
    NodeId top = g.subdivide({rec.attach_parent, head});
    NodeId ret = g.subdivide({parent, removed});
    g.add_edge(top, ret);
  }
  return Network(std::move(g));
}

}  // namespace tcnet
