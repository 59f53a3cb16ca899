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

#include "tcnet/testkit/fixtures.hpp"

#include <utility>
#include <vector>

#include "tcnet/newick.hpp"

namespace tcnet::testkit {

namespace {

using Edges = std::vector<std::pair<std::string, std::string>>;

Network build(const Edges& edges) { return Network(Graph::from_named_edges(edges)); }

// Triangle whose reticulation sits above `below`.
Network triangle(const std::string& above, const std::string& below) {
  return build({{"root", "t"}, {"t", "a"}, {"t", "c"}, {"a", above}, {"a", "c"}, {"c", below}});
}

// Found by random search over level-2 networks on three leaves; the
// property is rechecked by the tests.
constexpr const char* kInvalidA = "(((a,(((b,c))#H2)#H1),#H2),#H1);";
constexpr const char* kInvalidB = "((a,(((b,c))#H2)#H1),(#H2,#H1));";

}  // namespace

std::map<std::string, Network> fixtures() {
  std::map<std::string, Network> out;
  out.emplace("girth3_xy", triangle("x", "y"));
  out.emplace("girth3_yx", triangle("y", "x"));
  out.emplace("girth4_z", build({{"root", "t"}, {"t", "a"}, {"t", "b"}, {"a", "x"}, {"a", "r"}, {"b", "y"},
                                 {"b", "r"}, {"r", "z"}}));
  out.emplace("girth4_x", build({{"root", "t"}, {"t", "r"}, {"t", "c"}, {"c", "y"}, {"c", "w"}, {"w", "z"},
                                 {"w", "r"}, {"r", "x"}}));
  out.emplace("girth4_y", build({{"root", "t"}, {"t", "r"}, {"t", "c"}, {"c", "x"}, {"c", "w"}, {"w", "z"},
                                 {"w", "r"}, {"r", "y"}}));
  out.emplace("diamond", build({{"root", "p"}, {"p", "u"}, {"p", "v"}, {"u", "v"}, {"u", "w"}, {"v", "w"},
                                {"w", "x"}}));
  out.emplace("invalid_l2_a", parse_newick(kInvalidA));
  out.emplace("invalid_l2_b", parse_newick(kInvalidB));
  return out;
}

}  // namespace tcnet::testkit
