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

#include "tcnet/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "tcnet/error.hpp"

namespace tcnet {

namespace {

std::size_t non_leaf_count(const Network& n) { return n.node_count() - n.leaf_count(); }

struct Matcher {
  const Network& a;
  const Network& b;
  std::vector<NodeId> order;  // non-leaf nodes of a, children before parents
  std::vector<NodeId> image;
  std::vector<char> used;
  static constexpr NodeId kNone = static_cast<NodeId>(-1);

  Matcher(const Network& a_, const Network& b_)
      : a(a_), b(b_), image(a_.id_bound(), kNone), used(b_.id_bound(), 0) {
    const auto& topo = a.topological_order();
    for (auto it = topo.rbegin(); it != topo.rend(); ++it)
      if (!a.is_leaf(*it)) order.push_back(*it);
  }

  bool children_match(NodeId v, NodeId w) const {
    std::vector<NodeId> mapped;
    for (NodeId c : a.children(v)) mapped.push_back(image[c]);
    std::vector<NodeId> actual = b.children(w);
    std::sort(mapped.begin(), mapped.end());
    std::sort(actual.begin(), actual.end());
    return mapped == actual;
  }

  bool extend(std::size_t i) {
    if (i == order.size()) return true;
    NodeId v = order[i];
    // Every child is already mapped, so the image is a parent of the first child's image.
    NodeId c0 = image[a.children(v).front()];
    std::vector<NodeId> candidates = b.parents(c0);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (NodeId w : candidates) {
      if (used[w] || b.kind(w) != a.kind(v) || !children_match(v, w)) continue;
      image[v] = w;
      used[w] = 1;
      if (extend(i + 1)) return true;
      used[w] = 0;
      image[v] = kNone;
    }
    return false;
  }

  bool run() {
    for (NodeId v : a.leaves()) {
      auto w = b.find_leaf(a.label(v));
      if (!w) return false;
      image[v] = *w;
      used[*w] = 1;
    }
    return extend(0);
  }
};

bool less_mu(const MuVector& x, const MuVector& y) {
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

bool cheap_mismatch(const Network& a, const Network& b) {
  return a.node_count() != b.node_count() || a.edge_count() != b.edge_count() ||
         a.reticulation_count() != b.reticulation_count() || a.taxa() != b.taxa();
}

}  // namespace

std::vector<MuVector> mu_vectors(const Network& n) {
  TaxonSet taxa = n.taxa();
  std::map<std::string_view, std::size_t> index;
  for (std::size_t i = 0; i < taxa.size(); ++i) index.emplace(taxa.items()[i], i);

  std::vector<MuVector> mu(n.id_bound());
  const auto& order = n.topological_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    NodeId v = *it;
    mu[v].assign(taxa.size(), 0);
    if (n.is_leaf(v)) {
      mu[v][index.at(n.label(v))] = 1;
      continue;
    }
    for (NodeId c : n.children(v))
      for (std::size_t i = 0; i < taxa.size(); ++i) mu[v][i] += mu[c][i];
  }
  return mu;
}

std::vector<MuVector> mu_representation(const Network& n) {
  auto all = mu_vectors(n);
  std::vector<MuVector> out;
  out.reserve(n.node_count());
  for (NodeId v : n.topological_order()) out.push_back(std::move(all[v]));
  std::sort(out.begin(), out.end(), less_mu);
  return out;
}

bool match_by_search(const Network& a, const Network& b) {
  if (cheap_mismatch(a, b)) return false;
  return Matcher(a, b).run();
}

bool is_isomorphic(const Network& a, const Network& b) {
  if (cheap_mismatch(a, b)) return false;
  bool tc_a = is_tree_child(a);
  if (tc_a != is_tree_child(b)) return false;
  if (tc_a) return mu_representation(a) == mu_representation(b);
  if (non_leaf_count(a) > kBruteForceNodeLimit || non_leaf_count(b) > kBruteForceNodeLimit)
    throw Error(Errc::NotTreeChildAndTooLarge,
                "non-tree-child comparison needs at most " + std::to_string(kBruteForceNodeLimit) +
                    " non-leaf nodes");
  return match_by_search(a, b);
}

std::string canonical_key(const Network& n) {
  if (!is_tree_child(n)) throw Error(Errc::NotTreeChild, "canonical keys need a tree-child network");
  std::string key;
  for (const auto& t : n.taxa()) {
    key += std::to_string(t.size());
    key += ':';
    key += t;
  }
  key += '|';
  for (const MuVector& m : mu_representation(n)) {
    for (const PathCount& c : m) {
      key += c.str();
      key += ',';
    }
    key += ';';
  }
  return key;
}

std::vector<Network> unique_up_to_isomorphism(std::vector<Network> networks) {
  std::vector<Network> out;
  std::unordered_set<std::string> seen;
  for (Network& n : networks) {
    if (is_tree_child(n)) {
      if (seen.insert(canonical_key(n)).second) out.push_back(std::move(n));
      continue;
    }
    bool duplicate = std::any_of(out.begin(), out.end(),
                                 [&](const Network& m) { return is_isomorphic(n, m); });
    if (!duplicate) out.push_back(std::move(n));
  }
  return out;
}

bool same_isomorphism_classes(const std::vector<Network>& a, const std::vector<Network>& b) {
  auto covered = [](const std::vector<Network>& xs, const std::vector<Network>& ys) {
    return std::all_of(xs.begin(), xs.end(), [&](const Network& x) {
      return std::any_of(ys.begin(), ys.end(), [&](const Network& y) { return is_isomorphic(x, y); });
    });
  };
  return covered(a, b) && covered(b, a);
}

}  // namespace tcnet
