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

#include "tcnet/testkit/generator.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "tcnet/blobs.hpp"
#include "tcnet/error.hpp"

namespace tcnet::testkit {

namespace {

constexpr int kMaxAttempts = 100;

// Modulo keeps draws identical across standard libraries.
std::size_t pick(std::mt19937_64& rng, std::size_t bound) { return static_cast<std::size_t>(rng() % bound); }

template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[pick(rng, i)]);
}

class Builder {
 public:
  explicit Builder(std::mt19937_64& rng) : rng_(rng) {
    NodeId root = g_.add_node();
    g_.add_edge(root, g_.add_node(next_label()));
  }

  // A leaf becomes the parent of itself and a new leaf.
  void cherry() {
    NodeId v = random_leaf();
    std::string label = g_.label(v);
    g_.set_label(v, {});
    g_.add_edge(v, g_.add_node(std::move(label)));
    g_.add_edge(v, g_.add_node(next_label()));
  }

  // A leaf becomes a triangle t->a, t->c, a->c over the old leaf (below a)
  // and a new leaf (below c), then the blob grows to `level`.
  void blob(std::size_t level) {
    NodeId t = random_leaf();
    std::string label = g_.label(t);
    g_.set_label(t, {});
    NodeId a = g_.add_node();
    NodeId c = g_.add_node();
    g_.add_edge(t, a);
    g_.add_edge(t, c);
    g_.add_edge(a, c);
    g_.add_edge(a, g_.add_node(std::move(label)));
    g_.add_edge(c, g_.add_node(next_label()));
    for (std::size_t i = 1; i < level; ++i) grow(a);
  }

  Graph finish() {
    std::vector<NodeId> ls;
    for (NodeId v : g_.nodes())
      if (g_.outdegree(v) == 0) ls.push_back(v);
    shuffle(ls, rng_);
    for (std::size_t i = 0; i < ls.size(); ++i) g_.set_label(ls[i], "t" + std::to_string(i + 1));
    return std::move(g_);
  }

 private:
  std::string next_label() { return "L" + std::to_string(counter_++); }

  NodeId random_leaf() {
    std::vector<NodeId> ls;
    for (NodeId v : g_.nodes())
      if (g_.outdegree(v) == 0) ls.push_back(v);
    return ls[pick(rng_, ls.size())];
  }

  // Inverse reticulated cherry inside the blob holding `member`: a leaf x
  // hanging from the blob gets a new parent p_x, an edge (u, w) leaving a
  // blob node or entering the pure node gets a new node g_y, and a new leaf y
  // hangs below a reticulation with parents p_x and g_y.
  void grow(NodeId member) {
    Network n(g_);
    auto bs = blobs(n);
    const Blob& b = *std::find_if(bs.begin(), bs.end(), [&](const Blob& bl) { return bl.contains(member); });
    std::vector<NodeId> xs;
    for (NodeId v : n.leaves())
      if (b.contains(n.parents(v).front())) xs.push_back(v);
    NodeId x = xs[pick(rng_, xs.size())];
    Edge x_in{n.parents(x).front(), x};
    std::vector<Edge> targets;
    for (const Edge& e : n.edges()) {
      if (e == x_in || n.is_reticulation(e.head)) continue;
      if (b.contains(e.tail) || e.head == b.pure_node) targets.push_back(e);
    }
    Edge e = targets[pick(rng_, targets.size())];
    NodeId p_x = g_.subdivide(x_in);
    NodeId g_y = g_.subdivide(e);
    NodeId p_y = g_.add_node();
    g_.add_edge(p_x, p_y);
    g_.add_edge(g_y, p_y);
    g_.add_edge(p_y, g_.add_node(next_label()));
  }

  std::mt19937_64& rng_;
  Graph g_;
  std::size_t counter_ = 0;
};

struct Plan {
  std::vector<std::size_t> blob_levels;  // one entry per blob, any order
  std::size_t cherries = 0;
};

Plan make_plan(const GenSpec& spec, std::mt19937_64& rng) {
  Plan plan;
  std::size_t k = spec.target_level;
  std::size_t top = k == 0 ? 0 : spec.n_level_k_blobs;
  std::size_t leaves_left = spec.n_leaves - 1 - top * k;
  std::size_t rets_left = spec.max_reticulations.value_or(spec.n_leaves) - top * k;
  plan.blob_levels.assign(top, k);
  while (k >= 2 && leaves_left > 0 && rets_left > 0 && pick(rng, 3) == 0) {
    std::size_t j = 1 + pick(rng, std::min({k - 1, leaves_left, rets_left}));
    plan.blob_levels.push_back(j);
    leaves_left -= j;
    rets_left -= j;
  }
  plan.cherries = leaves_left;
  return plan;
}

bool meets(const Network& n, const GenSpec& spec) {
  if (n.leaf_count() != spec.n_leaves || !is_tree_child(n)) return false;
  auto bs = blobs(n);
  std::size_t k = level(n);
  if (k != spec.target_level) return false;
  if (k == 0) return true;
  auto top = static_cast<std::size_t>(std::count_if(bs.begin(), bs.end(), [&](const Blob& b) { return b.level == k; }));
  return top == spec.n_level_k_blobs &&
         (!spec.max_reticulations || n.reticulation_count() <= *spec.max_reticulations);
}

}  // namespace

Network random_tree_child(const GenSpec& spec) {
  std::size_t k = spec.target_level;
  std::size_t top = k == 0 ? 0 : spec.n_level_k_blobs;
  if (spec.n_leaves == 0) throw Error(Errc::Unsatisfiable, "a network needs at least one leaf");
  if (k > 0 && top == 0) throw Error(Errc::Unsatisfiable, "a network of level >= 1 needs a blob of that level");
  if (spec.n_leaves < top * k + 1)
    throw Error(Errc::Unsatisfiable, std::to_string(top) + " blobs of level " + std::to_string(k) + " need at least " +
                                         std::to_string(top * k + 1) + " leaves");
  if (spec.max_reticulations && *spec.max_reticulations < top * k)
    throw Error(Errc::Unsatisfiable, "the reticulation cap is below " + std::to_string(top * k));

  std::mt19937_64 rng(spec.seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Plan plan = make_plan(spec, rng);
    std::vector<std::size_t> events(plan.blob_levels);
    events.insert(events.end(), plan.cherries, 0);
    shuffle(events, rng);
    Builder b(rng);
    for (std::size_t e : events) {
      if (e == 0)
        b.cherry();
      else
        b.blob(e);
    }
    Network n(b.finish());
    if (meets(n, spec)) return n;
  }
  throw Error(Errc::Unsatisfiable, "no network met the spec after " + std::to_string(kMaxAttempts) + " attempts");
}

}  // namespace tcnet::testkit
