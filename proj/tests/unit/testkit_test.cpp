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
#include "tcnet/cleanup.hpp"
#include "tcnet/error.hpp"
#include "tcnet/isomorphism.hpp"
#include "tcnet/newick.hpp"
#include "tcnet/testkit/fixtures.hpp"
#include "tcnet/testkit/generator.hpp"
#include "tcnet/testkit/oracles.hpp"
#include "tcnet/testkit/triple.hpp"
#include "tcnet/mlls.hpp"

namespace tcnet {
namespace {

using testkit::GenSpec;
using testkit::random_tree_child;

Errc failure(const GenSpec& spec) {
  try {
    random_tree_child(spec);
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::NotAnMllsSet;
}

TEST(Generator, Deterministic) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GenSpec spec{12, 3, 2, seed, std::nullopt};
    Network a = random_tree_child(spec);
    Network b = random_tree_child(spec);
    EXPECT_EQ(to_newick(a), to_newick(b));
    EXPECT_EQ(canonical_key(a), canonical_key(b));
  }
}

TEST(Generator, TwoLeaves) {
  EXPECT_EQ(to_newick(random_tree_child({2, 0, 1, 4, std::nullopt})), "(t1,t2);");
  std::set<std::string> seen;
  for (std::uint64_t seed = 0; seed < 20; ++seed) seen.insert(to_newick(random_tree_child({2, 1, 1, seed, std::nullopt})));
  EXPECT_EQ(seen, (std::set<std::string>{"((t1,(t2)#H1),#H1);", "(((t1)#H1,t2),#H1);"}));
}

TEST(Generator, Unsatisfiable) {
  EXPECT_EQ(failure({2, 2, 1, 0, std::nullopt}), Errc::Unsatisfiable);
  EXPECT_EQ(failure({6, 3, 2, 0, std::nullopt}), Errc::Unsatisfiable);
  EXPECT_EQ(failure({0, 0, 1, 0, std::nullopt}), Errc::Unsatisfiable);
  EXPECT_EQ(failure({9, 2, 2, 0, 3}), Errc::Unsatisfiable);
  EXPECT_EQ(failure({9, 2, 0, 0, std::nullopt}), Errc::Unsatisfiable);
}

TEST(Generator, CorpusMeetsSpecs) {
  std::size_t made = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    std::size_t k = seed % 5;
    std::size_t l = k == 0 ? 1 : 1 + seed % 2;
    std::size_t n = std::max<std::size_t>(l * k + 1, 1 + (seed * 31) % 20);
    GenSpec spec{n, k, l, seed, std::nullopt};
    Network net = random_tree_child(spec);
    ASSERT_FALSE(Network::diagnose(net.graph()));
    EXPECT_TRUE(is_tree_child(net));
    EXPECT_EQ(net.leaf_count(), n);
    EXPECT_EQ(level(net), k);
    EXPECT_LE(net.reticulation_count() + 1, n);
    ++made;
  }
  EXPECT_EQ(made, 1000u);
}

TEST(Generator, RespectsReticulationCap) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Network n = random_tree_child({15, 3, 1, seed, 4});
    EXPECT_LE(n.reticulation_count(), 4u);
    EXPECT_EQ(level(n), 3u);
  }
}

TEST(Fixtures, GirthFourTripleSharesItsTrees) {
  auto f = testkit::fixtures();
  std::vector<Network> triple{f.at("girth4_x"), f.at("girth4_y"), f.at("girth4_z")};
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(level(triple[i]), 1u);
    EXPECT_EQ(testkit::lower_level_subnetworks(triple[i]).size(), 2u);
    for (std::size_t j = i + 1; j < 3; ++j) {
      EXPECT_FALSE(testkit::isomorphic_by_bijection(triple[i], triple[j]));
      EXPECT_TRUE(testkit::same_classes_by_bijection(testkit::lower_level_subnetworks(triple[i]),
                                                     testkit::lower_level_subnetworks(triple[j])));
    }
  }
}

TEST(Fixtures, InvalidPairSharesLowerLevelSubnetworks) {
  auto f = testkit::fixtures();
  const Network& a = f.at("invalid_l2_a");
  const Network& b = f.at("invalid_l2_b");
  EXPECT_EQ(level(a), 2u);
  EXPECT_EQ(level(b), 2u);
  EXPECT_FALSE(is_valid_network(a));
  EXPECT_FALSE(is_valid_network(b));
  EXPECT_FALSE(testkit::isomorphic_by_bijection(a, b));
  EXPECT_TRUE(testkit::same_classes_by_bijection(testkit::lower_level_subnetworks(a), testkit::lower_level_subnetworks(b)));
  auto shipped = read_newick_file(TCNET_FIXTURE_DIR "/invalid_l2_shared.enwk");
  EXPECT_TRUE(testkit::same_classes_by_bijection(shipped, testkit::lower_level_subnetworks(a)));
}

TEST(Fixtures, ShippedFilesMatch) {
  for (const auto& [name, n] : testkit::fixtures()) {
    auto file = read_newick_file(std::string(TCNET_FIXTURE_DIR) + "/" + name + ".enwk");
    ASSERT_EQ(file.size(), 1u) << name;
    EXPECT_TRUE(testkit::isomorphic_by_bijection(file.front(), n)) << name;
  }
}

TEST(Oracles, BijectionOnSmallCases) {
  EXPECT_TRUE(testkit::isomorphic_by_bijection(parse_newick("((x,y),z);"), parse_newick("(z,(y,x));")));
  EXPECT_FALSE(testkit::isomorphic_by_bijection(parse_newick("((x,y),z);"), parse_newick("(x,(y,z));")));
  EXPECT_FALSE(testkit::isomorphic_by_bijection(parse_newick("((x,(y)#H1),#H1);"), parse_newick("(((x)#H1,y),#H1);")));
}

TEST(Oracles, NaiveCleanupAgreesOnDiamond) {
  Graph g = Graph::from_named_edges({{"r", "p"}, {"p", "u"}, {"p", "v"}, {"u", "v"}, {"u", "w"}, {"v", "w"}, {"w", "x"}});
  Network d(g);
  for (Edge e : d.reticulation_edges()) {
    Graph h = d.graph();
    h.remove_edge(e.tail, e.head);
    Graph fast = clean_up_graph(h);
    Graph slow = testkit::naive_clean_up(h);
    EXPECT_EQ(fast.node_count(), slow.node_count());
    EXPECT_EQ(fast.edge_count(), slow.edge_count());
  }
}

TEST(DesignatedTriple, MembersAreMlls) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    Network n = random_tree_child({8 + seed % 6, 2 + seed % 2, 1 + seed % 2, seed, std::nullopt});
    auto triple = testkit::designated_triple(n);
    auto mlls = enumerate_mlls(n).networks;
    for (const Network* m : {&triple.cut, &triple.isolate, &triple.keep}) {
      EXPECT_TRUE(std::any_of(mlls.begin(), mlls.end(), [&](const Network& o) { return is_isomorphic(*m, o); }))
          << to_newick(n);
    }
    EXPECT_FALSE(is_isomorphic(triple.cut, triple.isolate));
  }
}

TEST(DesignatedTriple, Rejections) {
  EXPECT_THROW(testkit::designated_triple(parse_newick("((x,(y)#H1),#H1);")), Error);
  auto f = testkit::fixtures();
  EXPECT_THROW(testkit::designated_triple(f.at("invalid_l2_a")), Error);
}

}  // namespace
}  // namespace tcnet
