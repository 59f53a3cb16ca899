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
#include <utility>
#include <vector>

#include "tcnet/network.hpp"

namespace tcnet {

/// One network per reticulation edge, in edge order. Throws Error(LevelZeroInput).
std::vector<std::pair<Edge, Network>> maximum_subnetworks(const Network& n);

/// The maximum lower-level subnetworks, deduplicated by isomorphism.
/// `provenance[i]` is the first deletion set (one edge per top-level blob)
/// that produced `networks[i]`.
struct MllsSet {
  std::vector<Network> networks;
  std::vector<std::vector<Edge>> provenance;
};

/// Deletes one valid reticulation edge from every blob of maximum level, in
/// every combination. Throws Error(LevelZeroInput) or Error(NoValidEdgeInBlob).
MllsSet enumerate_mlls(const Network& n);

/// Number of deletion sets enumerate_mlls would try, without building them.
std::size_t mlls_combinations(const Network& n);

/// The members plus everything they display, deduplicated by isomorphism.
/// Every member must have at most kDisplayEdgeLimit reticulation edges.
/// Throws Error(TooLargeForOracle).
std::vector<Network> lower_level_closure(const std::vector<Network>& members);

}  // namespace tcnet
