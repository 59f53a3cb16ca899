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

#include "tcnet/blob_tree.hpp"

#include <algorithm>
#include <map>

#include "tcnet/blobs.hpp"
#include "tcnet/error.hpp"

namespace tcnet {

BlobTree::BlobTree() { nodes_.push_back(Node{}); }

std::size_t BlobTree::add_child(std::size_t parent, TaxonSet label) {
  nodes_.push_back(Node{std::move(label), parent, {}});
  std::size_t id = nodes_.size() - 1;
  nodes_[parent].children.push_back(id);
  return id;
}

std::vector<TaxonSet> BlobTree::labels() const {
  std::vector<TaxonSet> out;
  for (const Node& n : nodes_)
    if (n.label) out.push_back(*n.label);
  std::sort(out.begin(), out.end());
  return out;
}

bool BlobTree::has_unique_labels() const {
  auto all = labels();
  return std::adjacent_find(all.begin(), all.end()) == all.end();
}

std::optional<std::size_t> BlobTree::find(const TaxonSet& label) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].label && *nodes_[i].label == label) return i;
  return std::nullopt;
}

std::vector<TaxonSet> BlobTree::children_of(const std::optional<TaxonSet>& label) const {
  std::optional<std::size_t> at = label ? find(*label) : std::optional<std::size_t>(kRoot);
  std::vector<TaxonSet> out;
  if (!at) return out;
  for (std::size_t c : nodes_[*at].children) out.push_back(*nodes_[c].label);
  std::sort(out.begin(), out.end());
  return out;
}

std::string BlobTree::canonical_form(std::size_t i) const {
  std::string out = nodes_[i].label ? nodes_[i].label->composite_label() : std::string("*");
  std::vector<std::string> parts;
  for (std::size_t c : nodes_[i].children) parts.push_back(canonical_form(c));
  std::sort(parts.begin(), parts.end());
  out += '[';
  for (const auto& p : parts) out += p;
  out += ']';
  return out;
}

std::string BlobTree::canonical_form() const { return canonical_form(kRoot); }

BlobTree blob_tree(const Network& n) {
  auto bs = blobs(n);
  auto member = blob_membership(bs, n.id_bound());
  BlobTree tree;
  std::vector<std::size_t> tree_node(bs.size(), BlobTree::kRoot);
  // Blobs come in topological order of their pure nodes, so a parent blob is
  // always placed before its children.
  for (std::size_t i = 0; i < bs.size(); ++i) {
    NodeId above = n.parents(bs[i].pure_node).front();
    std::size_t parent = member[above] < 0 ? BlobTree::kRoot : tree_node[member[above]];
    tree_node[i] = tree.add_child(parent, bs[i].leaf_descendants);
  }
  return tree;
}

std::set<TaxonSet> foundation_nodes(const std::vector<Network>& members) {
  std::set<TaxonSet> common;
  for (std::size_t i = 0; i < members.size(); ++i) {
    auto labels = blob_tree(members[i]).labels();
    std::set<TaxonSet> here(labels.begin(), labels.end());
    if (i == 0) {
      common = std::move(here);
      continue;
    }
    std::set<TaxonSet> kept;
    std::set_intersection(common.begin(), common.end(), here.begin(), here.end(),
                          std::inserter(kept, kept.end()));
    common = std::move(kept);
  }
  return common;
}

BlobTree reconstruct_blob_tree(const std::vector<Network>& members) {
  if (members.empty()) throw Error(Errc::InconsistentInput, "no networks given");
  TaxonSet taxa = members.front().taxa();
  for (const Network& m : members)
    if (m.taxa() != taxa) throw Error(Errc::InconsistentInput, "the networks have different taxon sets");

  auto common = foundation_nodes(members);
  BlobTree tree;
  if (common.empty()) {
    if (taxa.size() >= 2) throw Error(Errc::InconsistentInput, "no blob is common to all networks");
    return tree;
  }
  if (taxa.size() >= 2 && !common.count(taxa))
    throw Error(Errc::InconsistentInput, "the top blob " + taxa.composite_label() + " is not common");

  // Larger sets first, so every parent exists before its children.
  std::vector<TaxonSet> order(common.begin(), common.end());
  std::stable_sort(order.begin(), order.end(),
                   [](const TaxonSet& a, const TaxonSet& b) { return a.size() > b.size(); });
  std::map<TaxonSet, std::size_t> placed;
  for (const TaxonSet& a : order) {
    // The strict supersets must form a chain; the smallest is the parent.
    const TaxonSet* smallest = nullptr;
    for (const TaxonSet& c : order)
      if (a.is_strict_subset_of(c)) smallest = &c;
    for (const TaxonSet& c : order)
      if (smallest && a.is_strict_subset_of(c) && !smallest->is_subset_of(c))
        throw Error(Errc::InconsistentInput,
                    a.composite_label() + " has no unique smallest superset among the common blobs");
    std::size_t parent = smallest ? placed.at(*smallest) : BlobTree::kRoot;
    placed.emplace(a, tree.add_child(parent, a));
  }
  return tree;
}

std::set<TaxonSet> identify_level_k_blobs(const std::vector<Network>& members, const BlobTree& tree) {
  std::set<TaxonSet> flagged;
  std::vector<BlobTree> trees;
  for (const Network& m : members) trees.push_back(blob_tree(m));
  for (const TaxonSet& a : tree.labels()) {
    auto expected = tree.children_of(a);
    for (const BlobTree& t : trees)
      if (t.children_of(a) != expected) {
        flagged.insert(a);
        break;
      }
  }
  return flagged;
}

}  // namespace tcnet
