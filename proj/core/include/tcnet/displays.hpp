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
#include <vector>

#include "tcnet/network.hpp"

namespace tcnet {

/// Exhaustive oracles over deletion sets are refused beyond this many
/// reticulation edges.
inline constexpr std::size_t kDisplayEdgeLimit = 12;

/// Every network obtained by deleting at most one in-edge per reticulation and
/// cleaning up, up to isomorphism. Throws Error(TooLargeForOracle).
std::vector<Network> displayed_networks(const Network& n);

/// Whether some such deletion set turns `n` into a network isomorphic to `m`.
/// Throws Error(TooLargeForOracle).
bool displays(const Network& n, const Network& m);

}  // namespace tcnet
