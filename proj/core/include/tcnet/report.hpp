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

#include <string>
#include <vector>

#include "tcnet/blob_tree.hpp"
#include "tcnet/network.hpp"
#include "tcnet/reconstruct.hpp"

namespace tcnet {

/// {"label": [taxa] | null, "children": [...]}, children sorted by label.
std::string blob_tree_to_json(const BlobTree& tree, int indent = 2);

/// Per step: collapsed pendants, chosen blob, pair, shape profile, inserted edge.
std::string trace_to_json(const Reconstruction& r, int indent = 2);

/// {"networks": ["<enewick>", ...]}
std::string networks_to_json(const std::vector<Network>& networks, int indent = 2);

}  // namespace tcnet
