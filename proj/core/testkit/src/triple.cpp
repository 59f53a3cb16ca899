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

#include "tcnet/testkit/triple.hpp"

#include <algorithm>
#include <vector>

#include "tcnet/blobs.hpp"
#include "tcnet/cherries.hpp"
#include "tcnet/cleanup.hpp"
#include "tcnet/error.hpp"

namespace tcnet::testkit {

namespace {

bool adjacent(const Network& n, NodeId a, NodeId b) {
  auto is_parent = [&](NodeId p, NodeId c) {
    const auto& ps = n.parents(c);
    return std::find(ps.begin(), ps.end(), p) != ps.end();
  };
  return is_parent(a, b) || is_parent(b, a);
}

// A reticulation edge of `b` not entering p_y after whose deletion the
// parents of p_y are still non-adjacent.
Edge keeping_edge(const Network& n, const Blob& b, const RetCherryShape& s) {
  for (const Edge& e : n.reticulation_edges()) {
    if (!b.contains(e.head) || e.head == s.p_y) continue;
    Network m = delete_reticulation_edge(n, e);
    const auto& ps = m.parents(s.p_y);
    if (ps.size() == 2 && !adjacent(m, ps[0], ps[1])) return e;
  }
  throw Error(Errc::Unsatisfiable, "no edge of the blob keeps the reticulated cherry on " + n.describe(s.p_y));
}

}  // namespace

DesignatedTriple designated_triple(const Network& n) {
  if (!is_tree_child(n)) throw Error(Errc::NotTreeChild, "the network is not tree-child");
  std::size_t k = level(n);
  if (k < 2) throw Error(Errc::LevelZeroInput, "the network has level " + std::to_string(k) + ", not >= 2");
  std::vector<Edge> cut, isolate, keep;
  for (const Blob& b : blobs(n)) {
    if (b.level != k) continue;
    RetCherryShape s = *lowest_ret_cherry_shape(n, b);
    cut.push_back({s.p_x, s.p_y});
    isolate.push_back({s.g_y, s.p_y});
    keep.push_back(keeping_edge(n, b, s));
  }
  return {delete_edges(n, cut), delete_edges(n, isolate), delete_edges(n, keep)};
}

}  // namespace tcnet::testkit
