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
#include "tcnet/cleanup.hpp"
#include "tcnet/error.hpp"
#include "tcnet/isomorphism.hpp"
#include "tcnet/mlls.hpp"
#include "tcnet/newick.hpp"
#include "tcnet/testkit/fixtures.hpp"
#include "tcnet/testkit/oracles.hpp"

namespace tcnet {
namespace {

// The edge (u, v) of the diamond: u is the tree node that is a parent of both
// reticulations.
Edge diamond_edge(const Network& d) {
  for (NodeId v : d.reticulations())
    for (NodeId u : d.parents(v)) {
      const auto& cs = d.children(u);
      if (d.is_tree_node(u) && std::all_of(cs.begin(), cs.end(), [&](NodeId c) { return d.is_reticulation(c); }) &&
          std::find(cs.begin(), cs.end(), v) != cs.end() && d.children(v).size() == 1 &&
          d.is_reticulation(d.children(v).front()))
        return {u, v};
    }
  throw std::logic_error("no diamond edge");
}

TEST(Cleanup, DiamondEdgeIsInvalid) {
  Network d = testkit::fixtures().at("diamond");
  Edge e = diamond_edge(d);
  EXPECT_FALSE(is_valid_edge(d, e));
  EXPECT_FALSE(is_valid_network(d));
  Network m = delete_reticulation_edge(d, e);
  EXPECT_EQ(d.node_count() - m.node_count(), 4u);
  EXPECT_EQ(d.edge_count() - m.edge_count(), 6u);
  EXPECT_EQ(to_newick(m), "x;");
}

TEST(Cleanup, TriangleDeletionGivesCherry) {
  Network n = parse_newick("((x,(y)#H1),#H1);");
  for (const Edge& e : n.reticulation_edges()) {
    EXPECT_TRUE(is_valid_edge(n, e));
    Network m = delete_reticulation_edge(n, e);
    EXPECT_EQ(to_newick(m), "(x,y);");
    EXPECT_EQ(n.node_count() - m.node_count(), 2u);
    EXPECT_EQ(n.edge_count() - m.edge_count(), 3u);
  }
}

TEST(Cleanup, RejectsTreeEdges) {
  Network n = parse_newick("((x,(y)#H1),#H1);");
  Edge tree_edge{n.root(), n.children(n.root()).front()};
  try {
    delete_reticulation_edge(n, tree_edge);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotReticulationEdge);
  }
  auto both = n.reticulation_edges();
  try {
    delete_edges(n, both);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotReticulationEdge);
  }
}

TEST(Cleanup, ReportsUncleanableGraphs) {
  Graph g;
  NodeId r = g.add_node();
  g.add_edge(r, g.add_node("x"));
  g.add_edge(r, g.add_node("y"));
  try {
    clean_up(g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotCleanable);
  }
}

// Deleting any set of reticulation edges and cleaning up in random rule
// orders always yields the same network.
TEST(Cleanup, IsConfluent) {
  std::mt19937_64 rng(31);
  for (const Network& n : test::corpus({.count = 30, .seed = 31, .min_level = 1, .max_leaves = 12})) {
    for (int round = 0; round < 4; ++round) {
      Graph g = n.graph();
      for (NodeId r : n.reticulations())
        if (rng() % 2) g.remove_edge(n.parents(r)[rng() % 2], r);
      Network fixed = clean_up(g);
      for (std::uint64_t seed = 0; seed < 4; ++seed)
        EXPECT_TRUE(is_isomorphic(Network(clean_up_graph(g, seed * 7 + round)), fixed));
      EXPECT_TRUE(is_isomorphic(Network(testkit::naive_clean_up(g)), fixed));
    }
  }
}

TEST(Cleanup, TreeChildEdgesAreValidAndStayTreeChild) {
  for (const Network& n : test::corpus({.count = 40, .seed = 32, .min_level = 1})) {
    EXPECT_TRUE(is_valid_network(n));
    for (const auto& [e, m] : maximum_subnetworks(n)) {
      EXPECT_TRUE(is_valid_edge(n, e));
      EXPECT_TRUE(is_tree_child(m));
      EXPECT_EQ(n.node_count() - m.node_count(), 2u);
      EXPECT_EQ(n.edge_count() - m.edge_count(), 3u);
    }
  }
}

TEST(Cleanup, SimultaneousDeletionMatchesSequential) {
  for (const Network& n : test::corpus({.count = 20, .seed = 33, .min_level = 2, .max_top_blobs = 3})) {
    std::vector<Edge> chosen;
    std::set<NodeId> heads;
    for (const Edge& e : n.reticulation_edges())
      if (heads.insert(e.head).second) chosen.push_back(e);
    Network together = delete_edges(n, chosen);
    Graph g = n.graph();
    for (const Edge& e : chosen) g.remove_edge(e.tail, e.head);
    EXPECT_TRUE(is_isomorphic(together, Network(testkit::naive_clean_up(g))));
  }
}

}  // namespace
}  // namespace tcnet
