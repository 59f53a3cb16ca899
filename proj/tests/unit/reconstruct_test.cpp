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
#include "tcnet/cherries.hpp"
#include "tcnet/error.hpp"
#include "tcnet/isomorphism.hpp"
#include "tcnet/mlls.hpp"
#include "tcnet/newick.hpp"
#include "tcnet/reconstruct.hpp"
#include "tcnet/report.hpp"
#include "tcnet/testkit/fixtures.hpp"
#include "tcnet/testkit/triple.hpp"

namespace tcnet {
namespace {

Errc failure(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Unsatisfiable;
}

std::size_t top_level_blob_count(const Network& n) {
  auto bs = blobs(n);
  std::size_t k = level(n);
  return static_cast<std::size_t>(std::count_if(bs.begin(), bs.end(), [&](const Blob& b) { return b.level == k; }));
}

TEST(Reconstruct, RoundTrip) {
  for (const Network& n : test::corpus({.count = 40, .seed = 111, .max_top_blobs = 3})) {
    Reconstruction r = tcmlls_reconstruct(enumerate_mlls(n).networks);
    EXPECT_TRUE(r.verified);
    EXPECT_TRUE(is_isomorphic(r.network, n)) << to_newick(n);
    EXPECT_EQ(r.trace.size(), top_level_blob_count(n));
  }
}

TEST(Reconstruct, ToleratesDuplicatesAndOrder) {
  for (const Network& n : test::corpus({.count = 10, .seed = 112})) {
    auto members = enumerate_mlls(n).networks;
    std::reverse(members.begin(), members.end());
    members.push_back(members.front());
    EXPECT_TRUE(is_isomorphic(tcmlls_reconstruct(members).network, n));
  }
}

TEST(Reconstruct, TraceIsDeterministic) {
  Network n = test::corpus({.count = 1, .seed = 113, .min_level = 3, .max_level = 3}).front();
  auto members = enumerate_mlls(n).networks;
  std::string first = trace_to_json(tcmlls_reconstruct(members));
  EXPECT_EQ(trace_to_json(tcmlls_reconstruct(members)), first);
  EXPECT_NE(first.find("\"verified\": true"), std::string::npos);
}

TEST(Reconstruct, LevelOneEvidenceIsRejected) {
  EXPECT_EQ(failure([] { tcmlls_reconstruct({parse_newick("(x,y);")}); }), Errc::NotAnMllsSet);
}

TEST(Reconstruct, RejectsBadInputSets) {
  EXPECT_EQ(failure([] { tcmlls_reconstruct({}); }), Errc::NotAnMllsSet);
  EXPECT_EQ(failure([] { tcmlls_reconstruct({parse_newick("((x,(y)#H1),#H1);"), parse_newick("(x,z);")}); }),
            Errc::NotAnMllsSet);
  auto f = testkit::fixtures();
  EXPECT_EQ(failure([&] { tcmlls_reconstruct({f.at("invalid_l2_a")}); }), Errc::NotAnMllsSet);
}

TEST(Reconstruct, SingletonIsReturnedUnverified) {
  Network m = parse_newick("(((x,(y)#H1),#H1),z);");
  Reconstruction r = tcmlls_reconstruct({m}, {.verify = false});
  EXPECT_TRUE(is_isomorphic(r.network, m));
  EXPECT_FALSE(r.verified);
  EXPECT_TRUE(r.trace.empty());
  EXPECT_EQ(failure([&] { tcmlls_reconstruct({m}); }), Errc::NotAnMllsSet);
}

TEST(Reconstruct, InvalidPairSharedSetIsNeverAccepted) {
  auto shared = read_newick_file(TCNET_FIXTURE_DIR "/invalid_l2_shared.enwk");
  EXPECT_EQ(failure([&] { tcmlls_reconstruct(shared); }), Errc::NotAnMllsSet);
}

TEST(Reconstruct, DistinctNetworksHaveDistinctMlls) {
  auto nets = test::corpus({.count = 30, .seed = 114, .max_level = 3, .max_leaves = 6, .max_top_blobs = 1});
  for (std::size_t i = 0; i < nets.size(); ++i)
    for (std::size_t j = i + 1; j < nets.size(); ++j) {
      if (nets[i].taxa() != nets[j].taxa()) continue;
      bool same_network = is_isomorphic(nets[i], nets[j]);
      bool same_mlls = same_isomorphism_classes(enumerate_mlls(nets[i]).networks, enumerate_mlls(nets[j]).networks);
      EXPECT_EQ(same_network, same_mlls) << to_newick(nets[i]) << " " << to_newick(nets[j]);
    }
}

TEST(ReconstructFromThree, DesignatedTriple) {
  for (const Network& n : test::corpus({.count = 40, .seed = 115, .max_top_blobs = 3})) {
    auto t = testkit::designated_triple(n);
    Reconstruction r = reconstruct_from_three({t.cut, t.isolate, t.keep}, top_level_blob_count(n));
    EXPECT_TRUE(r.verified);
    EXPECT_TRUE(is_isomorphic(r.network, n)) << to_newick(n);
  }
}

TEST(ReconstructFromThree, AgreesWithFullSetForOneBlob) {
  for (const Network& n : test::corpus({.count = 15, .seed = 116, .max_top_blobs = 1})) {
    auto t = testkit::designated_triple(n);
    Network three = reconstruct_from_three({t.cut, t.isolate, t.keep}, 1).network;
    EXPECT_TRUE(is_isomorphic(three, tcmlls_reconstruct(enumerate_mlls(n).networks).network));
  }
}

TEST(ReconstructFromThree, MixedTriplesFail) {
  auto nets = test::corpus({.count = 12, .seed = 117, .max_level = 2, .max_leaves = 8, .max_top_blobs = 1});
  std::size_t checked = 0;
  for (std::size_t i = 0; i + 1 < nets.size(); ++i) {
    const Network& a = nets[i];
    const Network& b = nets[i + 1];
    if (a.taxa() != b.taxa() || is_isomorphic(a, b)) continue;
    auto ta = testkit::designated_triple(a);
    auto tb = testkit::designated_triple(b);
    std::vector<Network> mixed{ta.cut, ta.isolate, tb.keep};
    if (same_isomorphism_classes({tb.keep}, {ta.keep})) continue;
    ++checked;
    try {
      Reconstruction r = reconstruct_from_three(mixed, 1);
      // A success must still explain all three inputs.
      auto mlls = enumerate_mlls(r.network).networks;
      for (const Network& m : mixed)
        EXPECT_TRUE(std::any_of(mlls.begin(), mlls.end(), [&](const Network& c) { return is_isomorphic(c, m); }));
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::NotConsistentTriple);
    }
  }
  EXPECT_GT(checked, 0u);
}

TEST(ReconstructFromThree, WrongBlobCountFails) {
  Network n = test::corpus({.count = 1, .seed = 118, .max_top_blobs = 1}).front();
  auto t = testkit::designated_triple(n);
  EXPECT_EQ(failure([&] { reconstruct_from_three({t.cut, t.isolate, t.keep}, 2); }), Errc::NotConsistentTriple);
  EXPECT_EQ(failure([&] { reconstruct_from_three({t.cut, t.isolate}, 1); }), Errc::NotConsistentTriple);
}

TEST(RebuildHBlob, RestoresASingleBlob) {
  std::size_t checked = 0;
  for (const Network& n : test::corpus({.count = 40, .seed = 119, .max_top_blobs = 1})) {
    auto bs = blobs(n);
    const Blob& top = *std::find_if(bs.begin(), bs.end(), [&](const Blob& bl) { return bl.level == level(n); });
    auto s = lowest_ret_cherry_shape(n, top);
    if (!n.is_leaf(s->x) || !n.is_leaf(s->y)) continue;
    ++checked;
    auto rebuilt = rebuild_h_blob(enumerate_mlls(n).networks, n.label(s->x), n.label(s->y));
    for (const Network& m : rebuilt) EXPECT_TRUE(is_isomorphic(m, n)) << to_newick(n);
  }
  EXPECT_GT(checked, 0u);
}

TEST(RebuildHBlob, NeedsEvidence) {
  Network n = parse_newick("((x,(y)#H1),(z,#H1));");
  EXPECT_EQ(failure([&] { rebuild_h_blob({n}, "x", "y"); }), Errc::ShapeEvidenceMissing);
}

// Reducing a cherry, or a reticulated cherry of a lower-level blob, commutes
// with taking MLLSs.
TEST(RebuildHBlob, ReductionCommutesWithMlls) {
  std::size_t checked = 0;
  for (const Network& n : test::corpus({.count = 30, .seed = 120, .max_level = 3, .max_leaves = 12})) {
    auto bs = blobs(n);
    std::size_t k = level(n);
    for (const auto& p : find_cherries(n)) {
      if (p.kind == CherryKind::Reticulated) {
        NodeId r = n.parents(n.leaf(p.y)).front();
        auto blob = std::find_if(bs.begin(), bs.end(), [&](const Blob& b) { return b.contains(r); });
        if (blob->level == k) continue;
      }
      Network reduced = reduce_pair(n, p.x, p.y).first;
      std::vector<Network> reduced_members;
      for (const Network& m : enumerate_mlls(n).networks) reduced_members.push_back(reduce_pair(m, p.x, p.y).first);
      EXPECT_TRUE(same_isomorphism_classes(enumerate_mlls(reduced).networks, reduced_members)) << to_newick(n);
      ++checked;
    }
  }
  EXPECT_GT(checked, 0u);
}

}  // namespace
}  // namespace tcnet
