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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "tcnet/network.hpp"

namespace tcnet {

/// Parses one extended Newick network ("(x,(y)#H1,#H1);"). A root edge is
/// added above the top-level node unless that node already has a single
/// child. Reticulations are written once with their child and once bare;
/// "name#H1" without children is a reticulation above leaf "name".
/// Internal node names are ignored; branch lengths are rejected.
/// Throws Error with SyntaxError, DanglingHybridLabel or ValidationError.
Network parse_newick(std::string_view text);

/// One network per non-blank line.
std::vector<Network> parse_newick_lines(std::string_view text);

/// Deterministic extended Newick: siblings in decreasing mu-vector order,
/// hybrid tags numbered by first appearance.
std::string to_newick(const Network& n);

std::vector<Network> read_newick_file(const std::filesystem::path& path);
void write_newick_file(const std::filesystem::path& path, const std::vector<Network>& networks);

}  // namespace tcnet
