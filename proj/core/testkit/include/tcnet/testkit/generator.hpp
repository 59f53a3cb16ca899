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

#include <cstddef>
#include <cstdint>
#include <optional>

#include "tcnet/network.hpp"

namespace tcnet::testkit {

struct GenSpec {
  std::size_t n_leaves = 1;
  /// Level of the result; 0 asks for a tree.
  std::size_t target_level = 0;
  /// Number of blobs of level target_level (ignored for trees).
  std::size_t n_level_k_blobs = 1;
  std::uint64_t seed = 0;
  /// Cap on the total number of reticulations, lower-level blobs included.
  std::optional<std::size_t> max_reticulations;
};

/// Random binary tree-child network built by inverse cherry and inverse
/// reticulated-cherry steps. Deterministic given the spec. Leaves are
/// labelled t1..tn in random order.
/// Throws Error(Unsatisfiable) when n_leaves < target_level * n_level_k_blobs + 1
/// or the reticulation cap is below target_level * n_level_k_blobs.
Network random_tree_child(const GenSpec& spec);

}  // namespace tcnet::testkit
