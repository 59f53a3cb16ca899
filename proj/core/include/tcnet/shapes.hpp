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

#pragma once

#include <array>
#include <cstdint>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tcnet/network.hpp"

namespace tcnet {

/// Topology of an ordered leaf pair (x, y). With p_x, p_y the leaf parents:
///   Cherry        p_x == p_y
///   SubdividedXY  p_x is the parent of the tree node p_y
///   TriangleXY    p_x is a parent of the reticulation p_y and p_x's parent is
///                 p_y's other parent
///   RetCherryXY   as TriangleXY but p_x's parent is not p_y's other parent
///   Distant       up-down distance at least 4
/// The YX kinds are the mirror images.
enum class ShapeKind : std::uint8_t {
  Cherry,
  SubdividedXY,
  SubdividedYX,
  TriangleXY,
  TriangleYX,
  RetCherryXY,
  RetCherryYX,
  Distant,
};

inline constexpr std::size_t kShapeKindCount = 8;
inline constexpr std::array<ShapeKind, kShapeKindCount> kAllShapeKinds = {
    ShapeKind::Cherry,      ShapeKind::SubdividedXY, ShapeKind::SubdividedYX, ShapeKind::TriangleXY,
    ShapeKind::TriangleYX,  ShapeKind::RetCherryXY,  ShapeKind::RetCherryYX,  ShapeKind::Distant};

std::string_view to_string(ShapeKind kind);
/// The kind seen from (y, x).
ShapeKind mirrored(ShapeKind kind);

/// Counts per ShapeKind, indexed by its underlying value.
using ShapeProfile = std::array<std::size_t, kShapeKindCount>;

struct InferredShape {
  ShapeKind shape = ShapeKind::Cherry;
  /// Only for RetCherry kinds: whether the blob of the reticulation has the
  /// maximum level of the hidden network.
  std::optional<bool> blob_is_top_level;

  friend bool operator==(const InferredShape&, const InferredShape&) = default;
};

std::string to_string(const InferredShape& s);

/// Throws Error(UnknownTaxon) for missing taxa and InconsistentInput if x == y.
ShapeKind classify_pair(const Network& n, std::string_view x, std::string_view y);

ShapeProfile shape_profile(const std::vector<Network>& members, std::string_view x, std::string_view y);

/// Every row of the identifiability table the profile fits. A profile from a
/// genuine MLLS set fits exactly one.
std::vector<InferredShape> matching_rows(const ShapeProfile& profile);

/// The unique matching row. Throws Error(NoRuleMatches).
InferredShape infer_from_profile(const ShapeProfile& profile);

/// infer_from_profile over the members' profile. Sets whose members are all
/// trees come from level-1 networks, which the table does not cover; they
/// are rejected with NoRuleMatches.
InferredShape infer_shape(const std::vector<Network>& members, std::string_view x, std::string_view y);

}  // namespace tcnet
