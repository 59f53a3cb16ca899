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

#include <algorithm>

#include "corpus.hpp"
#include "tcnet/blobs.hpp"
#include "tcnet/cherries.hpp"
#include "tcnet/error.hpp"
#include "tcnet/isomorphism.hpp"
#include "tcnet/newick.hpp"

namespace tcnet {
namespace {

TEST(RetCherryShapes, Triangle) {
  Network n = parse_newick("((x,(y)#H1),#H1);");
  // Both parents of the reticulation form a shape: one with the leaf x, one
  // with the tree node above x.
  auto shapes = ret_cherry_shapes(n);
  ASSERT_EQ(shapes.size(), 2u);
  auto it = std::find_if(shapes.begin(), shapes.end(), [&](const RetCherryShape& s) { return n.is_leaf(s.x); });
  ASSERT_NE(it, shapes.end());
  const auto& s = *it;
  EXPECT_EQ(s.x, n.leaf("x"));
  EXPECT_EQ(s.y, n.leaf("y"));
  EXPECT_TRUE(is_ret_cherry_shape(n, s));
  EXPECT_EQ(to_newick(cut_ret_cherry(n, s)), "(x,y);");
  EXPECT_EQ(to_newick(isolate_ret_cherry(n, s)), "(x,y);");
}

TEST(RetCherryShapes, MissingShapeIsReported) {
  Network n = parse_newick("((x,(y)#H1),#H1);");
  RetCherryShape s = ret_cherry_shapes(n).front();
  Network tree = parse_newick("(x,y);");
  try {
    cut_ret_cherry(tree, s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ShapeNotPresent);
  }
}

// Every reticulation of a tree-child network sits in a reticulated cherry
// shape, and every blob of level >= 1 has a lowest one.
TEST(RetCherryShapes, CoverEveryReticulation) {
  for (const Network& n : test::corpus({.count = 50, .seed = 51, .min_level = 1})) {
    std::set<NodeId> covered;
    for (const auto& s : ret_cherry_shapes(n)) {
      EXPECT_TRUE(is_ret_cherry_shape(n, s));
      covered.insert(s.p_y);
    }
    auto rets = n.reticulations();
    EXPECT_EQ(covered, std::set<NodeId>(rets.begin(), rets.end()));
    for (const Blob& b : blobs(n)) {
      if (b.level == 0) continue;
      auto s = lowest_ret_cherry_shape(n, b);
      ASSERT_TRUE(s);
      EXPECT_TRUE(b.contains(s->p_x));
      EXPECT_TRUE(b.contains(s->p_y));
      EXPECT_FALSE(b.contains(s->x));
      EXPECT_FALSE(b.contains(s->y));
    }
  }
}

TEST(Cherries, AlwaysPresent) {
  for (const Network& n : test::corpus({.count = 60, .seed = 52, .min_level = 0})) {
    if (n.leaf_count() < 2) continue;
    auto pairs = find_cherries(n);
    EXPECT_FALSE(pairs.empty()) << to_newick(n);
    for (const auto& p : pairs) {
      NodeId px = n.parents(n.leaf(p.x)).front();
      NodeId py = n.parents(n.leaf(p.y)).front();
      if (p.kind == CherryKind::Cherry) {
        EXPECT_EQ(px, py);
        EXPECT_LT(p.x, p.y);
      } else {
        EXPECT_TRUE(n.is_reticulation(py));
        const auto& ps = n.parents(py);
        EXPECT_NE(std::find(ps.begin(), ps.end(), px), ps.end());
      }
    }
  }
}

TEST(Cherries, ReduceThenExpandRestores) {
  for (const Network& n : test::corpus({.count = 40, .seed = 53, .min_level = 1})) {
    for (const auto& p : find_cherries(n)) {
      auto [reduced, record] = reduce_pair(n, p.x, p.y);
      EXPECT_EQ(reduced.leaf_count() + 1, n.leaf_count());
      EXPECT_TRUE(is_tree_child(reduced));
      if (p.kind == CherryKind::Reticulated) {
        EXPECT_EQ(reduced.reticulation_count() + 1, n.reticulation_count());
      }
      EXPECT_TRUE(is_isomorphic(expand_pair(reduced, record), n)) << to_newick(n) << " " << p.x << " " << p.y;
    }
  }
}

TEST(Cherries, RepeatedReductionEndsInOneLeaf) {
  for (Network n : test::corpus({.count = 20, .seed = 54, .min_level = 1})) {
    while (n.leaf_count() > 1) {
      auto pairs = find_cherries(n);
      ASSERT_FALSE(pairs.empty());
      n = reduce_pair(n, pairs.front().x, pairs.front().y).first;
    }
    EXPECT_EQ(n.reticulation_count(), 0u);
  }
}

TEST(Cherries, NoCherryOnPair) {
  Network n = parse_newick("((x,y),z);");
  try {
    reduce_pair(n, "x", "z");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NoCherryOnPair);
  }
}

}  // namespace
}  // namespace tcnet
