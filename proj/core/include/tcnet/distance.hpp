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
#include <limits>
#include <vector>

#include "tcnet/network.hpp"

namespace tcnet {

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// Length of a shortest path that climbs from `x` to an apex and descends to
/// `y`. Zero when x == y; kUnreachable when the two have no common ancestor.
std::size_t up_down_distance(const Network& n, NodeId x, NodeId y);

/// Directed distance from every node down to `target` (kUnreachable if none).
std::vector<std::size_t> distances_to(const Network& n, NodeId target);

}  // namespace tcnet
