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

#include "tcnet/distance.hpp"

#include <algorithm>
#include <deque>

namespace tcnet {

std::vector<std::size_t> distances_to(const Network& n, NodeId target) {
  std::vector<std::size_t> dist(n.id_bound(), kUnreachable);
  std::deque<NodeId> queue{target};
  dist[target] = 0;
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop_front();
    for (NodeId p : n.parents(v))
      if (dist[p] == kUnreachable) {
        dist[p] = dist[v] + 1;
        queue.push_back(p);
      }
  }
  return dist;
}

std::size_t up_down_distance(const Network& n, NodeId x, NodeId y) {
  auto dx = distances_to(n, x);
  auto dy = distances_to(n, y);
  std::size_t best = kUnreachable;
  for (NodeId w : n.topological_order())
    if (dx[w] != kUnreachable && dy[w] != kUnreachable) best = std::min(best, dx[w] + dy[w]);
  return best;
}

}  // namespace tcnet
