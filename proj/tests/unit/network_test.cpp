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
#include "tcnet/error.hpp"
#include "tcnet/network.hpp"
#include "tcnet/newick.hpp"
#include "tcnet/testkit/oracles.hpp"

namespace tcnet {
namespace {

std::optional<Errc> code_of(const Graph& g) {
  auto d = Network::diagnose(g);
  return d ? std::optional<Errc>(d->code) : std::nullopt;
}

TEST(NetworkValidation, AcceptsCherry) {
  Graph g = Graph::from_named_edges({{"r", "t"}, {"t", "x"}, {"t", "y"}});
  EXPECT_FALSE(code_of(g));
  Network n(g);
  EXPECT_EQ(n.leaf_count(), 2u);
  EXPECT_TRUE(n.is_root(n.root()));
  EXPECT_EQ(n.kind(n.parents(n.leaf("x")).front()), NodeKind::Tree);
}

TEST(NetworkValidation, SingleLeaf) {
  Graph g = Graph::from_named_edges({{"r", "x"}});
  Network n(g);
  EXPECT_EQ(n.leaf_count(), 1u);
  EXPECT_EQ(n.node_count(), 2u);
}

TEST(NetworkValidation, EmptyGraphHasNoRoot) { EXPECT_EQ(code_of(Graph{}), Errc::NoRoot); }

TEST(NetworkValidation, DetectsCycle) {
  Graph g;
  NodeId r = g.add_node();
  NodeId a = g.add_node();
  NodeId b = g.add_node();
  g.add_edge(r, a);
  g.add_edge(a, b);
  g.add_edge(b, a);
  EXPECT_EQ(code_of(g), Errc::CycleDetected);
}

TEST(NetworkValidation, DetectsMultipleRoots) {
  Graph g = Graph::from_named_edges({{"r", "x"}, {"s", "y"}});
  EXPECT_EQ(code_of(g), Errc::MultipleRoots);
}

TEST(NetworkValidation, DetectsDegreeViolation) {
  Graph g = Graph::from_named_edges({{"r", "t"}, {"t", "x"}, {"t", "y"}, {"t", "z"}});
  EXPECT_EQ(code_of(g), Errc::DegreeViolation);
  Graph h = Graph::from_named_edges({{"r", "t"}, {"t", "u"}, {"u", "x"}});
  EXPECT_EQ(code_of(h), Errc::DegreeViolation);
}

TEST(NetworkValidation, DetectsParallelEdge) {
  Graph g;
  NodeId r = g.add_node();
  NodeId t = g.add_node();
  NodeId h = g.add_node();
  NodeId x = g.add_node("x");
  g.add_edge(r, t);
  g.add_edge(t, h);
  g.add_edge(t, h);
  g.add_edge(h, x);
  EXPECT_EQ(code_of(g), Errc::ParallelEdge);
}

TEST(NetworkValidation, DetectsBadLabels) {
  Graph g;
  NodeId r = g.add_node();
  NodeId t = g.add_node();
  g.add_edge(r, t);
  g.add_edge(t, g.add_node("x"));
  g.add_edge(t, g.add_node());
  EXPECT_EQ(code_of(g), Errc::InvalidTaxon);
  g.set_label(t, "inner");
  EXPECT_EQ(code_of(g), Errc::InvalidTaxon);
}

TEST(NetworkValidation, DetectsDuplicateTaxon) {
  Graph g;
  NodeId r = g.add_node();
  NodeId t = g.add_node();
  g.add_edge(r, t);
  g.add_edge(t, g.add_node("x"));
  g.add_edge(t, g.add_node("x"));
  EXPECT_EQ(code_of(g), Errc::DuplicateTaxon);
}

TEST(NetworkValidation, ConstructorThrowsTheDiagnosedCode) {
  try {
    Network n(Graph::from_named_edges({{"r", "x"}, {"s", "y"}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::MultipleRoots);
  }
}

TEST(NetworkQueries, UnknownTaxonThrows) {
  Network n = parse_newick("(x,y);");
  EXPECT_FALSE(n.find_leaf("z"));
  try {
    n.leaf("z");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnknownTaxon);
  }
}

TEST(NetworkQueries, TopologicalOrderPutsParentsFirst) {
  for (const Network& n : test::corpus({.count = 20, .seed = 3})) {
    std::vector<std::size_t> pos(n.id_bound());
    const auto& order = n.topological_order();
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    EXPECT_EQ(order.front(), n.root());
    for (const Edge& e : n.edges()) EXPECT_LT(pos[e.tail], pos[e.head]);
  }
}

TEST(TreeChild, RecognisesViolation) {
  // A tree node whose children are both reticulations.
  Network bad = parse_newick("((a,(b)#H1),((c)#H2,(#H1,#H2)));");
  EXPECT_FALSE(is_tree_child(bad));
  EXPECT_TRUE(is_tree_child(parse_newick("((x,(y)#H1),#H1);")));
}

TEST(Descendants, MatchReachabilityOracle) {
  for (const Network& n : test::corpus({.count = 30, .seed = 5})) {
    auto fast = descendant_taxa(n);
    auto slow = testkit::descendants_by_search(n);
    for (NodeId v : n.nodes()) EXPECT_EQ(fast[v], slow[v]);
    auto below_root = descendant_nodes(n, n.root());
    EXPECT_EQ(below_root.size(), n.node_count());
  }
}

}  // namespace
}  // namespace tcnet
