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

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "tcnet/blobs.hpp"
#include "tcnet/error.hpp"
#include "tcnet/isomorphism.hpp"
#include "tcnet/newick.hpp"
#include "tcnet/pendant.hpp"

namespace tcnet {
namespace {

TEST(Pendant, CollapseAndExpand) {
  Network n = parse_newick("(((x,(y)#H1),#H1),(z,w));");
  auto [collapsed, pendant] = collapse_pendant(n, TaxonSet{"x", "y"});
  EXPECT_EQ(pendant.label, "{x,y}");
  EXPECT_EQ(to_newick(pendant.subnetwork), "((x,(y)#H1),#H1);");
  EXPECT_EQ(collapsed.leaf_count(), 3u);
  EXPECT_EQ(collapsed.reticulation_count(), 0u);
  EXPECT_TRUE(is_isomorphic(expand_pendant(collapsed, pendant), n));
}

TEST(Pendant, RootIsHighestNodeWithTheSet) {
  // The entry node of the triangle, not one of its inner nodes.
  Network n = parse_newick("(((x,(y)#H1),#H1),z);");
  auto v = pendant_root(n, TaxonSet{"x", "y"});
  ASSERT_TRUE(v);
  EXPECT_TRUE(n.is_tree_node(*v));
  EXPECT_EQ(n.children(*v).size(), 2u);
}

TEST(Pendant, NoPendantInsideABlob) {
  // y alone is pendant; {x,z} is the leaf set of no node.
  Network n = parse_newick("((x,(y)#H1),(#H1,z));");
  EXPECT_TRUE(pendant_root(n, TaxonSet{"y"}));
  EXPECT_FALSE(pendant_root(n, TaxonSet{"x", "z"}));
  try {
    collapse_pendant(n, TaxonSet{"x", "z"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NoPendantAtSet);
  }
}

TEST(Pendant, EveryBlobCollapsesAndExpands) {
  for (const Network& n : test::corpus({.count = 30, .seed = 61, .min_level = 1})) {
    for (const Blob& b : blobs(n)) {
      if (b.leaf_descendants == n.taxa()) continue;
      auto [collapsed, pendant] = collapse_pendant(n, b.leaf_descendants);
      EXPECT_TRUE(is_tree_child(collapsed));
      EXPECT_EQ(collapsed.leaf_count() + b.leaf_descendants.size(), n.leaf_count() + 1);
      EXPECT_TRUE(is_isomorphic(expand_pendant(collapsed, pendant), n));
    }
  }
}

TEST(Pendant, ReplaceSwapsTheSubnetwork) {
  Network n = parse_newick("(((x,(y)#H1),#H1),z);");
  Network other = parse_newick("(((x)#H1,y),#H1);");
  auto v = pendant_root(n, TaxonSet{"x", "y"});
  ASSERT_TRUE(v);
  Network swapped = replace_pendant(n, *v, other);
  EXPECT_TRUE(is_isomorphic(swapped, parse_newick("((((x)#H1,y),#H1),z);")));
}

}  // namespace
}  // namespace tcnet
