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

#include "tcnet/network.hpp"

namespace tcnet::testkit {

/// Three MLLSs that determine a tree-child network of level >= 2 once the
/// number of top-level blobs is known. Each top-level blob contributes its
/// lowest reticulated cherry shape (x, y, p_x, p_y, g_y):
///   cut      deletes (p_x, p_y) in every top-level blob
///   isolate  deletes (g_y, p_y) in every top-level blob
///   keep     deletes an edge not entering p_y, chosen so that the two
///            parents of p_y stay non-adjacent
struct DesignatedTriple {
  Network cut;
  Network isolate;
  Network keep;
};

/// Throws Error(LevelZeroInput) for level < 2 and Error(NotTreeChild).
DesignatedTriple designated_triple(const Network& n);

}  // namespace tcnet::testkit
