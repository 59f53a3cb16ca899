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

#include "tcnet/mlls.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "tcnet/blobs.hpp"
#include "tcnet/cleanup.hpp"
#include "tcnet/displays.hpp"
#include "tcnet/error.hpp"
#include "tcnet/isomorphism.hpp"

namespace tcnet {

namespace {

void require_reticulated(const Network& n) {
  if (n.reticulation_count() == 0) throw Error(Errc::LevelZeroInput, "the network has no reticulations");
}

// Candidate edges per top-level blob.
std::vector<std::vector<Edge>> choices_per_blob(const Network& n) {
  auto bs = blobs(n);
  std::size_t k = 0;
  for (const Blob& b : bs) k = std::max(k, b.level);
  bool tree_child = is_tree_child(n);
  std::vector<std::vector<Edge>> out;
  for (const Blob& b : bs) {
    if (b.level != k) continue;
    std::vector<Edge> valid;
    for (NodeId r : b.nodes) {
      if (!n.is_reticulation(r)) continue;
      for (NodeId p : n.parents(r)) {
        Edge e{p, r};
        if (tree_child || is_valid_edge(n, e)) valid.push_back(e);
      }
    }
    if (valid.empty())
      throw Error(Errc::NoValidEdgeInBlob,
                  "the blob below " + n.describe(b.pure_node) + " has no valid reticulation edge");
    out.push_back(std::move(valid));
  }
  return out;
}

}  // namespace

std::vector<std::pair<Edge, Network>> maximum_subnetworks(const Network& n) {
  require_reticulated(n);
  std::vector<std::pair<Edge, Network>> out;
  for (const Edge& e : n.reticulation_edges()) out.emplace_back(e, delete_reticulation_edge(n, e));
  return out;
}

std::size_t mlls_combinations(const Network& n) {
  require_reticulated(n);
  std::size_t total = 1;
  for (const auto& c : choices_per_blob(n)) total *= c.size();
  return total;
}

MllsSet enumerate_mlls(const Network& n) {
  require_reticulated(n);
  auto choices = choices_per_blob(n);
  MllsSet out;
  std::unordered_map<std::string, std::size_t> by_key;
  std::vector<std::size_t> pick(choices.size(), 0);
  while (true) {
    std::vector<Edge> deleted;
    for (std::size_t i = 0; i < choices.size(); ++i) deleted.push_back(choices[i][pick[i]]);
    Network m = delete_edges(n, deleted);
    bool fresh = true;
    if (is_tree_child(m)) {
      fresh = by_key.emplace(canonical_key(m), out.networks.size()).second;
    } else {
      for (const Network& seen : out.networks)
        if (is_isomorphic(seen, m)) {
          fresh = false;
          break;
        }
    }
    if (fresh) {
      out.networks.push_back(std::move(m));
      out.provenance.push_back(std::move(deleted));
    }
    std::size_t i = 0;
    while (i < pick.size() && pick[i] + 1 == choices[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
    ++pick[i];
  }
  return out;
}

std::vector<Network> lower_level_closure(const std::vector<Network>& members) {
  std::vector<Network> all;
  for (const Network& m : members) {
    auto shown = displayed_networks(m);
    all.insert(all.end(), shown.begin(), shown.end());
  }
  return unique_up_to_isomorphism(std::move(all));
}

}  // namespace tcnet
