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

#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tcnet/network.hpp"

namespace tcnet {

/// Rooted tree with an unlabelled root; every other node is labelled by the
/// leaf-descendant set of the blob it stands for.
class BlobTree {
 public:
  struct Node {
    std::optional<TaxonSet> label;  // empty for the root
    std::optional<std::size_t> parent;
    std::vector<std::size_t> children;
  };

  BlobTree();

  static constexpr std::size_t kRoot = 0;

  std::size_t add_child(std::size_t parent, TaxonSet label);

  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(std::size_t i) const { return nodes_[i]; }
  std::size_t size() const { return nodes_.size(); }

  /// Labels of the non-root nodes, sorted (duplicates kept).
  std::vector<TaxonSet> labels() const;
  bool has_unique_labels() const;
  std::optional<std::size_t> find(const TaxonSet& label) const;
  /// Sorted child labels of the node labelled `label` (or of the root).
  std::vector<TaxonSet> children_of(const std::optional<TaxonSet>& label) const;

  /// A string equal for two trees iff they are the same labelled rooted tree.
  std::string canonical_form() const;

  friend bool operator==(const BlobTree& a, const BlobTree& b) {
    return a.canonical_form() == b.canonical_form();
  }

 private:
  std::string canonical_form(std::size_t i) const;
  std::vector<Node> nodes_;
};

/// Contract every blob of `n` to a node labelled by its leaf-descendant set
/// and drop the leaves.
BlobTree blob_tree(const Network& n);

/// Blob-node labels present in the blob trees of every member.
std::set<TaxonSet> foundation_nodes(const std::vector<Network>& members);

/// Tree on the common blob-node labels of the members, each node hanging
/// below its smallest strict superset. Throws Error(InconsistentInput) when
/// the members differ in taxa, a label has two incomparable minimal
/// supersets, or the common labels lack the full taxon set.
BlobTree reconstruct_blob_tree(const std::vector<Network>& members);

/// Labels of `tree` whose child set differs in the blob tree of some member.
std::set<TaxonSet> identify_level_k_blobs(const std::vector<Network>& members, const BlobTree& tree);

}  // namespace tcnet
