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

#include "tcnet/graph.hpp"
#include "tcnet/taxon_set.hpp"

namespace tcnet {
namespace {

TEST(TaxonSet, SortsAndDeduplicates) {
  TaxonSet s{"c", "a", "b", "a"};
  EXPECT_EQ(s.items(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(s.composite_label(), "{a,b,c}");
}

TEST(TaxonSet, SubsetRelations) {
  TaxonSet ab{"a", "b"};
  TaxonSet abc{"a", "b", "c"};
  EXPECT_TRUE(ab.is_subset_of(abc));
  EXPECT_TRUE(ab.is_strict_subset_of(abc));
  EXPECT_FALSE(abc.is_strict_subset_of(abc));
  EXPECT_TRUE(abc.is_subset_of(abc));
  EXPECT_FALSE(abc.is_subset_of(ab));
  EXPECT_TRUE(ab.intersects(TaxonSet{"b", "z"}));
  EXPECT_FALSE(ab.intersects(TaxonSet{"y", "z"}));
  EXPECT_EQ(ab.united(TaxonSet{"c"}), abc);
}

TEST(TaxonSet, InsertKeepsOrder) {
  TaxonSet s{"b"};
  s.insert("a");
  s.insert("b");
  EXPECT_EQ(s, (TaxonSet{"a", "b"}));
  EXPECT_TRUE(s.contains("a"));
  EXPECT_FALSE(s.contains("c"));
}

TEST(Graph, SubdivideAndSuppressAreInverse) {
  Graph g;
  NodeId a = g.add_node();
  NodeId b = g.add_node("b");
  g.add_edge(a, b);
  NodeId m = g.subdivide({a, b});
  EXPECT_TRUE(g.has_edge(a, m));
  EXPECT_TRUE(g.has_edge(m, b));
  EXPECT_FALSE(g.has_edge(a, b));
  g.suppress(m);
  EXPECT_TRUE(g.has_edge(a, b));
  EXPECT_FALSE(g.contains(m));
  EXPECT_EQ(g.node_count(), 2u);
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(Graph, IdsStayStableAfterRemoval) {
  Graph g;
  NodeId a = g.add_node();
  NodeId b = g.add_node();
  NodeId c = g.add_node("c");
  g.add_edge(a, b);
  g.add_edge(b, c);
  g.remove_node(b);
  EXPECT_TRUE(g.contains(a));
  EXPECT_TRUE(g.contains(c));
  EXPECT_EQ(g.label(c), "c");
  EXPECT_EQ(g.edge_count(), 0u);
  EXPECT_EQ(g.id_bound(), 3u);
}

TEST(Graph, CountsParallelEdges) {
  Graph g;
  NodeId a = g.add_node();
  NodeId b = g.add_node();
  g.add_edge(a, b);
  g.add_edge(a, b);
  EXPECT_EQ(g.edge_multiplicity(a, b), 2u);
  g.remove_edge(a, b);
  EXPECT_EQ(g.edge_multiplicity(a, b), 1u);
  EXPECT_THROW(g.remove_edge(b, a), std::out_of_range);
}

TEST(Graph, FromNamedEdgesLabelsSinksOnly) {
  Graph g = Graph::from_named_edges({{"r", "t"}, {"t", "x"}, {"t", "y"}});
  std::size_t labelled = 0;
  for (NodeId v : g.nodes())
    if (!g.label(v).empty()) ++labelled;
  EXPECT_EQ(labelled, 2u);
  EXPECT_EQ(g.edge_count(), 3u);
}

}  // namespace
}  // namespace tcnet
