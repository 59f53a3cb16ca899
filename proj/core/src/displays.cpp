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

#include "tcnet/displays.hpp"

#include <string>

#include "tcnet/cleanup.hpp"
#include "tcnet/error.hpp"
#include "tcnet/isomorphism.hpp"

namespace tcnet {

namespace {

void guard(const Network& n) {
  std::size_t edges = 2 * n.reticulation_count();
  if (edges > kDisplayEdgeLimit)
    throw Error(Errc::TooLargeForOracle, std::to_string(edges) + " reticulation edges exceed the limit of " +
                                             std::to_string(kDisplayEdgeLimit));
}

// Calls `visit` with each of the 3^r deletion sets.
template <typename Visit>
bool for_each_deletion_set(const Network& n, Visit&& visit) {
  auto rets = n.reticulations();
  std::vector<int> choice(rets.size(), 0);
  while (true) {
    std::vector<Edge> deleted;
    for (std::size_t i = 0; i < rets.size(); ++i)
      if (choice[i] > 0) deleted.push_back({n.parents(rets[i])[choice[i] - 1], rets[i]});
    if (visit(deleted)) return true;
    std::size_t i = 0;
    while (i < choice.size() && choice[i] == 2) choice[i++] = 0;
    if (i == choice.size()) return false;
    ++choice[i];
  }
}

}  // namespace

std::vector<Network> displayed_networks(const Network& n) {
  guard(n);
  std::vector<Network> all;
  for_each_deletion_set(n, [&](const std::vector<Edge>& deleted) {
    all.push_back(delete_edges(n, deleted));
    return false;
  });
  return unique_up_to_isomorphism(std::move(all));
}

bool displays(const Network& n, const Network& m) {
  guard(n);
  if (n.taxa() != m.taxa()) return false;
  return for_each_deletion_set(n, [&](const std::vector<Edge>& deleted) {
    return is_isomorphic(delete_edges(n, deleted), m);
  });
}

}  // namespace tcnet
