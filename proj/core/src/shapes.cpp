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

#include "tcnet/shapes.hpp"

#include <algorithm>
#include <initializer_list>

#include "tcnet/blobs.hpp"
#include "tcnet/distance.hpp"
#include "tcnet/error.hpp"

namespace tcnet {

namespace {

std::size_t idx(ShapeKind k) { return static_cast<std::size_t>(k); }

bool is_child(const Network& n, NodeId parent, NodeId child) {
  const auto& ch = n.children(parent);
  return std::find(ch.begin(), ch.end(), child) != ch.end();
}

// Shape when p_upper is the parent of p_lower, from the lower leaf's side.
ShapeKind adjacent_shape(const Network& n, NodeId p_upper, NodeId p_lower, bool lower_is_y) {
  if (!n.is_reticulation(p_lower)) return lower_is_y ? ShapeKind::SubdividedXY : ShapeKind::SubdividedYX;
  const auto& ps = n.parents(p_lower);
  NodeId other = ps[0] == p_upper ? ps[1] : ps[0];
  bool triangle = n.parents(p_upper).front() == other;
  if (lower_is_y) return triangle ? ShapeKind::TriangleXY : ShapeKind::RetCherryXY;
  return triangle ? ShapeKind::TriangleYX : ShapeKind::RetCherryYX;
}

struct Row {
  InferredShape result;
  std::vector<ShapeKind> required;
  std::vector<ShapeKind> forbidden;
};

std::vector<Row> table() {
  using K = ShapeKind;
  auto all_but = [](std::initializer_list<K> keep) {
    std::vector<K> out;
    for (K k : kAllShapeKinds)
      if (std::find(keep.begin(), keep.end(), k) == keep.end()) out.push_back(k);
    return out;
  };
  return {
      {{K::Cherry, std::nullopt}, {K::Cherry}, all_but({K::Cherry})},
      {{K::TriangleXY, std::nullopt}, {K::TriangleXY}, all_but({K::TriangleXY})},
      {{K::TriangleYX, std::nullopt}, {K::TriangleYX}, all_but({K::TriangleYX})},
      // Deleting an edge of the blob can suppress every node between p_x and
      // g_y, so a same-direction triangle may show up next to the cherry.
      {{K::RetCherryXY, true}, {K::Cherry, K::RetCherryXY}, {K::TriangleYX, K::RetCherryYX}},
      {{K::RetCherryYX, true}, {K::Cherry, K::RetCherryYX}, {K::TriangleXY, K::RetCherryXY}},
      {{K::RetCherryXY, false}, {K::RetCherryXY}, all_but({K::RetCherryXY})},
      {{K::RetCherryYX, false}, {K::RetCherryYX}, all_but({K::RetCherryYX})},
      {{K::SubdividedXY, std::nullopt}, {K::SubdividedXY}, all_but({K::SubdividedXY, K::Cherry})},
      {{K::SubdividedYX, std::nullopt}, {K::SubdividedYX}, all_but({K::SubdividedYX, K::Cherry})},
      {{K::Distant, std::nullopt}, {K::Distant}, {K::Cherry}},
  };
}

}  // namespace

std::string_view to_string(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::Cherry: return "cherry";
    case ShapeKind::SubdividedXY: return "subdivided(x,y)";
    case ShapeKind::SubdividedYX: return "subdivided(y,x)";
    case ShapeKind::TriangleXY: return "triangle(x,y)";
    case ShapeKind::TriangleYX: return "triangle(y,x)";
    case ShapeKind::RetCherryXY: return "ret-cherry(x,y)";
    case ShapeKind::RetCherryYX: return "ret-cherry(y,x)";
    case ShapeKind::Distant: return "distant";
  }
  return "?";
}

ShapeKind mirrored(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::SubdividedXY: return ShapeKind::SubdividedYX;
    case ShapeKind::SubdividedYX: return ShapeKind::SubdividedXY;
    case ShapeKind::TriangleXY: return ShapeKind::TriangleYX;
    case ShapeKind::TriangleYX: return ShapeKind::TriangleXY;
    case ShapeKind::RetCherryXY: return ShapeKind::RetCherryYX;
    case ShapeKind::RetCherryYX: return ShapeKind::RetCherryXY;
    default: return kind;
  }
}

std::string to_string(const InferredShape& s) {
  std::string out(to_string(s.shape));
  if (s.blob_is_top_level) out += *s.blob_is_top_level ? " [top-level blob]" : " [lower-level blob]";
  return out;
}

ShapeKind classify_pair(const Network& n, std::string_view x, std::string_view y) {
  if (x == y) throw Error(Errc::InconsistentInput, "a leaf pair needs two distinct taxa");
  NodeId vx = n.leaf(x);
  NodeId vy = n.leaf(y);
  std::size_t d = up_down_distance(n, vx, vy);
  if (d == 2) return ShapeKind::Cherry;
  if (d >= 4) return ShapeKind::Distant;
  NodeId px = n.parents(vx).front();
  NodeId py = n.parents(vy).front();
  if (is_child(n, px, py)) return adjacent_shape(n, px, py, true);
  if (is_child(n, py, px)) return adjacent_shape(n, py, px, false);
  throw Error(Errc::InconsistentInput, "distance 3 without adjacent leaf parents");
}

ShapeProfile shape_profile(const std::vector<Network>& members, std::string_view x, std::string_view y) {
  ShapeProfile p{};
  for (const Network& m : members) ++p[idx(classify_pair(m, x, y))];
  return p;
}

std::vector<InferredShape> matching_rows(const ShapeProfile& profile) {
  std::vector<InferredShape> out;
  for (const Row& row : table()) {
    bool ok = std::all_of(row.required.begin(), row.required.end(),
                          [&](ShapeKind k) { return profile[idx(k)] > 0; }) &&
              std::none_of(row.forbidden.begin(), row.forbidden.end(),
                           [&](ShapeKind k) { return profile[idx(k)] > 0; });
    if (ok) out.push_back(row.result);
  }
  return out;
}

InferredShape infer_from_profile(const ShapeProfile& profile) {
  auto rows = matching_rows(profile);
  if (rows.size() != 1)
    throw Error(Errc::NoRuleMatches, rows.empty() ? "the shape profile fits no table row"
                                                  : "the shape profile fits several table rows");
  return rows.front();
}

InferredShape infer_shape(const std::vector<Network>& members, std::string_view x, std::string_view y) {
  if (members.empty()) throw Error(Errc::NoRuleMatches, "no networks given");
  bool all_trees = std::all_of(members.begin(), members.end(),
                               [](const Network& m) { return m.reticulation_count() == 0; });
  if (all_trees)
    throw Error(Errc::NoRuleMatches, "every network is a tree; level-1 sources are not identifiable");
  return infer_from_profile(shape_profile(members, x, y));
}

}  // namespace tcnet
