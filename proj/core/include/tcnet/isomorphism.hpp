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
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tcnet/network.hpp"

namespace tcnet {

using PathCount = boost::multiprecision::cpp_int;

/// Number of directed paths from a node to each leaf, taxa in sorted order.
using MuVector = std::vector<PathCount>;

/// mu(v) for every node, indexed by NodeId (dead ids hold empty vectors).
std::vector<MuVector> mu_vectors(const Network& n);

/// The multiset of mu-vectors of all nodes, sorted.
std::vector<MuVector> mu_representation(const Network& n);

/// Networks with at most this many non-leaf nodes may be compared by search
/// when either is not tree-child.
inline constexpr std::size_t kBruteForceNodeLimit = 14;

/// Label-preserving isomorphism. Tree-child inputs compare mu-representations;
/// anything else goes to match_by_search under kBruteForceNodeLimit.
/// Throws Error(NotTreeChildAndTooLarge).
bool is_isomorphic(const Network& a, const Network& b);

/// Label-preserving isomorphism by bottom-up backtracking; any size.
bool match_by_search(const Network& a, const Network& b);

/// Equal keys iff isomorphic. Throws Error(NotTreeChild).
std::string canonical_key(const Network& n);

/// Drops later networks isomorphic to an earlier one; order is kept.
std::vector<Network> unique_up_to_isomorphism(std::vector<Network> networks);

/// Whether two collections agree as sets of isomorphism classes.
bool same_isomorphism_classes(const std::vector<Network>& a, const std::vector<Network>& b);

}  // namespace tcnet
