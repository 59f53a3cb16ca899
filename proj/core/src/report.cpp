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

#include "tcnet/report.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "tcnet/newick.hpp"

namespace tcnet {

namespace {

using nlohmann::json;

json taxa_json(const TaxonSet& s) { return json(s.items()); }

json node_json(const BlobTree& t, std::size_t i) {
  const auto& node = t.node(i);
  json out;
  out["label"] = node.label ? taxa_json(*node.label) : json(nullptr);
  std::vector<std::size_t> kids = node.children;
  std::sort(kids.begin(), kids.end(),
            [&](std::size_t a, std::size_t b) { return *t.node(a).label < *t.node(b).label; });
  out["children"] = json::array();
  for (std::size_t c : kids) out["children"].push_back(node_json(t, c));
  return out;
}

}  // namespace

std::string blob_tree_to_json(const BlobTree& tree, int indent) {
  return node_json(tree, BlobTree::kRoot).dump(indent);
}

std::string trace_to_json(const Reconstruction& r, int indent) {
  json steps = json::array();
  for (const TraceStep& s : r.trace) {
    json collapsed = json::array();
    for (const TaxonSet& c : s.collapsed) collapsed.push_back(taxa_json(c));
    json profile = json::object();
    for (ShapeKind k : kAllShapeKinds) profile[std::string(to_string(k))] = s.profile[static_cast<std::size_t>(k)];
    steps.push_back({{"collapsed", collapsed},
                     {"blob", taxa_json(s.blob)},
                     {"pair", {s.x, s.y}},
                     {"profile", profile},
                     {"source_member", s.source},
                     {"inserted_edge", {{"from_above", s.x}, {"to_above", s.y}}}});
  }
  json final_collapsed = json::array();
  for (const TaxonSet& c : r.final_collapsed) final_collapsed.push_back(taxa_json(c));
  json out{{"steps", steps},
           {"final_collapsed", final_collapsed},
           {"verified", r.verified},
           {"network", to_newick(r.network)}};
  return out.dump(indent);
}

std::string networks_to_json(const std::vector<Network>& networks, int indent) {
  json list = json::array();
  for (const Network& n : networks) list.push_back(to_newick(n));
  return json{{"networks", list}}.dump(indent);
}

}  // namespace tcnet
