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

#include <map>
#include <string>

#include "tcnet/network.hpp"

namespace tcnet::testkit {

/// Hand-built instances, by name:
///   girth3_xy, girth3_yx    the two level-1 triangles on {x, y}
///   girth4_x, girth4_y, girth4_z
///                           level-1 networks on {x, y, z} with a 4-cycle
///                           whose reticulation sits above the named leaf
///   diamond                 level-2 network whose edge (u, v) is invalid
///   invalid_l2_a, invalid_l2_b
///                           non-isomorphic level-2 networks with invalid
///                           edges displaying the same level <= 1 networks
std::map<std::string, Network> fixtures();

}  // namespace tcnet::testkit
