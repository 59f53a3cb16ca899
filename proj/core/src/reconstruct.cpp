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

#include "tcnet/reconstruct.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>

#include "tcnet/blob_tree.hpp"
#include "tcnet/blobs.hpp"
#include "tcnet/error.hpp"
#include "tcnet/isomorphism.hpp"
#include "tcnet/mlls.hpp"

namespace tcnet {

namespace {

std::size_t idx(ShapeKind k) { return static_cast<std::size_t>(k); }

bool shows_missing_edge(ShapeKind k) {
  return k == ShapeKind::SubdividedXY || k == ShapeKind::SubdividedYX || k == ShapeKind::Distant;
}

// Evidence that (x, y) is a reticulated cherry, reticulation above y, whose
// blob lost an edge: some member has the cherry, some the reticulated cherry,
// some a subdivided or distant pair, and none the shapes that rule this out.
bool is_evidence(const ShapeProfile& p) {
  bool missing = p[idx(ShapeKind::SubdividedXY)] || p[idx(ShapeKind::SubdividedYX)] ||
                 p[idx(ShapeKind::Distant)];
  return p[idx(ShapeKind::Cherry)] && p[idx(ShapeKind::RetCherryXY)] && missing &&
         !p[idx(ShapeKind::TriangleYX)] && !p[idx(ShapeKind::RetCherryYX)];
}

ShapeProfile mirrored(const ShapeProfile& p) {
  ShapeProfile out{};
  for (ShapeKind k : kAllShapeKinds) out[idx(tcnet::mirrored(k))] = p[idx(k)];
  return out;
}

bool all_isomorphic(const std::vector<Network>& members) {
  std::string first = canonical_key(members.front());
  return std::all_of(members.begin() + 1, members.end(),
                     [&](const Network& m) { return canonical_key(m) == first; });
}

Network insert_edge_above(const Network& n, const std::string& x, const std::string& y) {
  Graph g = n.graph();
  NodeId vx = n.leaf(x);
  NodeId vy = n.leaf(y);
  NodeId a = g.subdivide({n.parents(vx).front(), vx});
  NodeId c = g.subdivide({n.parents(vy).front(), vy});
  g.add_edge(a, c);
  return Network(std::move(g));
}

// The leaf set of the blob holding y's parent.
TaxonSet blob_above(const Network& n, const std::string& y) {
  NodeId p = n.parents(n.leaf(y)).front();
  for (const Blob& b : blobs(n))
    if (b.contains(p)) return b.leaf_descendants;
  throw Error(Errc::PureNodeNotFound, "no blob holds the parent of " + y);
}

class Reconstructor {
 public:
  Reconstructor(std::vector<Network> members, Errc failure, std::optional<std::size_t> rebuild_limit)
      : members_(std::move(members)), failure_(failure), limit_(rebuild_limit) {}

  Network run() {
    while (!all_isomorphic(members_)) {
      if (limit_ && trace_.size() == *limit_)
        fail("the networks still differ after " + std::to_string(*limit_) + " rebuilt blobs");
      TraceStep step;
      step.collapsed = collapse_common_pendants();
      if (all_isomorphic(members_)) {
        final_collapsed_ = std::move(step.collapsed);
        break;
      }
      rebuild_lowest_blob(step);
      trace_.push_back(std::move(step));
    }
    if (limit_ && trace_.size() != *limit_)
      fail("the networks agreed after " + std::to_string(trace_.size()) + " rebuilt blobs, not " +
           std::to_string(*limit_));
    Network out = members_.front();
    for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) out = expand_pendant(out, *it);
    return out;
  }

  std::vector<TraceStep> take_trace() { return std::move(trace_); }
  std::vector<TaxonSet> take_final_collapsed() { return std::move(final_collapsed_); }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw Error(failure_, what); }

  std::vector<TaxonSet> collapse_common_pendants() {
    TaxonSet all = members_.front().taxa();
    auto common = foundation_nodes(members_);
    std::vector<TaxonSet> order(common.begin(), common.end());
    std::stable_sort(order.begin(), order.end(),
                     [](const TaxonSet& a, const TaxonSet& b) { return a.size() > b.size(); });
    std::vector<TaxonSet> chosen;
    for (const TaxonSet& a : order) {
      if (a == all) continue;
      if (std::any_of(chosen.begin(), chosen.end(), [&](const TaxonSet& c) { return a.is_subset_of(c); }))
        continue;
      std::optional<std::string> key;
      bool same = true;
      for (const Network& m : members_) {
        auto root = pendant_root(m, a);
        if (!root) {
          same = false;
          break;
        }
        std::string k = canonical_key(extract_pendant(m, *root));
        if (key && *key != k) {
          same = false;
          break;
        }
        key = std::move(k);
      }
      if (same) chosen.push_back(a);
    }
    for (const TaxonSet& a : chosen) collapse_everywhere(a, std::nullopt);
    return chosen;
  }

  // Collapses `a` in every member; the stored pendant comes from `source`
  // (or from the first member when all pendants agree).
  void collapse_everywhere(const TaxonSet& a, std::optional<std::size_t> source) {
    std::optional<Pendant> kept;
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (!pendant_root(members_[i], a))
        fail("no pendant subnetwork with leaf set " + a.composite_label() + " in member " + std::to_string(i));
      auto [collapsed, pendant] = collapse_pendant(members_[i], a);
      members_[i] = std::move(collapsed);
      if ((source && *source == i) || (!source && i == 0)) kept = std::move(pendant);
    }
    stack_.push_back(std::move(*kept));
    for (auto it = cache_.begin(); it != cache_.end();) {
      if (a.contains(it->first.first) || a.contains(it->first.second))
        it = cache_.erase(it);
      else
        ++it;
    }
  }

  const ShapeProfile& profile(const std::string& x, const std::string& y) {
    auto key = std::make_pair(x, y);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, shape_profile(members_, x, y)).first;
    return it->second;
  }

  TaxonSet lowest_common_blob() {
    auto common = foundation_nodes(members_);
    std::optional<TaxonSet> best;
    for (const TaxonSet& a : common) {
      bool minimal = std::none_of(common.begin(), common.end(),
                                  [&](const TaxonSet& b) { return b.is_strict_subset_of(a); });
      if (!minimal) continue;
      if (!best || a.size() < best->size()) best = a;  // ties: std::set order is lexicographic
    }
    if (!best) fail("the networks share no blob");
    return *best;
  }

  void rebuild_lowest_blob(TraceStep& step) {
    TaxonSet a = lowest_common_blob();
    const auto& taxa = a.items();
    for (std::size_t i = 0; i < taxa.size(); ++i) {
      for (std::size_t j = i + 1; j < taxa.size(); ++j) {
        ShapeProfile p = profile(taxa[i], taxa[j]);
        std::string x = taxa[i];
        std::string y = taxa[j];
        if (!is_evidence(p)) {
          p = mirrored(p);
          std::swap(x, y);
          if (!is_evidence(p)) continue;
        }
        step.blob = a;
        step.x = x;
        step.y = y;
        step.profile = p;
        rebuild(step);
        return;
      }
    }
    fail("no leaf pair in " + a.composite_label() + " shows a missing reticulation edge");
  }

  void rebuild(TraceStep& step) {
    std::size_t source = members_.size();
    for (std::size_t i = 0; i < members_.size() && source == members_.size(); ++i)
      if (shows_missing_edge(classify_pair(members_[i], step.x, step.y))) source = i;
    Network repaired = insert_edge_above(members_[source], step.x, step.y);
    if (!is_tree_child(repaired)) fail("inserting the edge breaks the tree-child property");
    if (blob_above(repaired, step.y) != step.blob)
      fail("the repaired blob does not have leaf set " + step.blob.composite_label());
    members_[source] = std::move(repaired);
    step.source = source;
    collapse_everywhere(step.blob, source);
  }

  std::vector<Network> members_;
  Errc failure_;
  std::optional<std::size_t> limit_;
  std::vector<Pendant> stack_;
  std::vector<TraceStep> trace_;
  std::vector<TaxonSet> final_collapsed_;
  std::map<std::pair<std::string, std::string>, ShapeProfile> cache_;
};

void check_members(const std::vector<Network>& members, Errc failure) {
  if (members.empty()) throw Error(failure, "no networks given");
  TaxonSet taxa = members.front().taxa();
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i].taxa() != taxa) throw Error(failure, "member " + std::to_string(i) + " has different taxa");
    if (!is_tree_child(members[i])) throw Error(failure, "member " + std::to_string(i) + " is not tree-child");
  }
  if (std::all_of(members.begin(), members.end(), [](const Network& m) { return m.reticulation_count() == 0; }))
    throw Error(failure, "every member is a tree, so the source would have level 1");
}

Reconstruction run_loop(const std::vector<Network>& members, Errc failure, std::optional<std::size_t> limit) {
  check_members(members, failure);
  Reconstructor r(members, failure, limit);
  try {
    Network out = r.run();
    return Reconstruction{std::move(out), r.take_trace(), r.take_final_collapsed(), false};
  } catch (const Error& e) {
    if (e.code() == failure) throw;
    throw Error(failure, e.detail());
  }
}

std::size_t count_top_level_blobs(const Network& n) {
  auto bs = blobs(n);
  std::size_t k = 0;
  for (const Blob& b : bs) k = std::max(k, b.level);
  return static_cast<std::size_t>(std::count_if(bs.begin(), bs.end(), [&](const Blob& b) { return b.level == k; }));
}

}  // namespace

Reconstruction tcmlls_reconstruct(const std::vector<Network>& members, const ReconstructOptions& options) {
  Reconstruction out = run_loop(members, Errc::NotAnMllsSet, std::nullopt);
  if (options.verify) {
    if (!is_tree_child(out.network) || out.network.reticulation_count() == 0)
      throw Error(Errc::NotAnMllsSet, "the candidate network is not a reticulated tree-child network");
    if (!same_isomorphism_classes(enumerate_mlls(out.network).networks, members))
      throw Error(Errc::NotAnMllsSet, "the MLLSs of the candidate network differ from the input");
    out.verified = true;
  }
  return out;
}

Reconstruction reconstruct_from_three(const std::vector<Network>& triple, std::size_t top_level_blobs,
                                      const ReconstructOptions& options) {
  if (triple.size() != 3) throw Error(Errc::NotConsistentTriple, "expected exactly three networks");
  if (top_level_blobs == 0) throw Error(Errc::NotConsistentTriple, "the blob count must be at least 1");
  Reconstruction out = run_loop(triple, Errc::NotConsistentTriple, top_level_blobs);
  if (options.verify) {
    const Network& n = out.network;
    if (!is_tree_child(n) || n.reticulation_count() == 0)
      throw Error(Errc::NotConsistentTriple, "the candidate network is not a reticulated tree-child network");
    if (count_top_level_blobs(n) != top_level_blobs)
      throw Error(Errc::NotConsistentTriple, "the candidate network has " +
                                                 std::to_string(count_top_level_blobs(n)) + " top-level blobs");
    auto mlls = enumerate_mlls(n).networks;
    for (const Network& m : triple)
      if (std::none_of(mlls.begin(), mlls.end(), [&](const Network& c) { return is_isomorphic(c, m); }))
        throw Error(Errc::NotConsistentTriple, "an input network is not an MLLS of the candidate network");
    out.verified = true;
  }
  return out;
}

std::vector<Network> rebuild_h_blob(const std::vector<Network>& members, const std::string& x,
                                    const std::string& y) {
  std::optional<std::size_t> source;
  for (std::size_t i = 0; i < members.size() && !source; ++i)
    if (shows_missing_edge(classify_pair(members[i], x, y))) source = i;
  if (!source)
    throw Error(Errc::ShapeEvidenceMissing, "no member shows a subdivided or distant pair on {" + x + "," + y + "}");
  Network repaired = insert_edge_above(members[*source], x, y);
  TaxonSet a = blob_above(repaired, y);
  auto top = pendant_root(repaired, a);
  if (!top) throw Error(Errc::PureNodeNotFound, "the repaired blob " + a.composite_label() + " is not pendant");
  Network part = extract_pendant(repaired, *top);
  std::vector<Network> out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i == *source) {
      out.push_back(repaired);
      continue;
    }
    auto at = pendant_root(members[i], a);
    if (!at)
      throw Error(Errc::PureNodeNotFound, "member " + std::to_string(i) + " has no pendant with leaf set " +
                                              a.composite_label());
    out.push_back(replace_pendant(members[i], *at, part));
  }
  return out;
}

}  // namespace tcnet
