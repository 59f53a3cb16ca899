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

#include <stdexcept>
#include <string>
#include <string_view>

namespace tcnet {

/// Every failure the library reports carries one of these codes. The CLI maps
/// them onto exit statuses and prints the name returned by `to_string`.
enum class Errc {
  // network validation
  CycleDetected,
  MultipleRoots,
  NoRoot,
  DegreeViolation,
  ParallelEdge,
  UnreachableNode,
  DuplicateTaxon,
  InvalidTaxon,
  // network operations
  NotCleanable,
  NotReticulationEdge,
  ShapeNotPresent,
  NoCherryOnPair,
  NoPendantAtSet,
  TooLargeForOracle,
  UnknownTaxon,
  // eNewick
  SyntaxError,
  DanglingHybridLabel,
  ValidationError,
  // blob trees and shapes
  InconsistentInput,
  NoRuleMatches,
  // MLLS enumeration
  LevelZeroInput,
  NoValidEdgeInBlob,
  // isomorphism
  NotTreeChild,
  NotTreeChildAndTooLarge,
  // reconstruction
  ShapeEvidenceMissing,
  PureNodeNotFound,
  NotAnMllsSet,
  NotConsistentTriple,
  // generator
  Unsatisfiable,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), detail_(message) {}

  Errc code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace tcnet
