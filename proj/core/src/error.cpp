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

#include "tcnet/error.hpp"

namespace tcnet {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::MultipleRoots: return "MultipleRoots";
    case Errc::NoRoot: return "NoRoot";
    case Errc::DegreeViolation: return "DegreeViolation";
    case Errc::ParallelEdge: return "ParallelEdge";
    case Errc::UnreachableNode: return "UnreachableNode";
    case Errc::DuplicateTaxon: return "DuplicateTaxon";
    case Errc::InvalidTaxon: return "InvalidTaxon";
    case Errc::NotCleanable: return "NotCleanable";
    case Errc::NotReticulationEdge: return "NotReticulationEdge";
    case Errc::ShapeNotPresent: return "ShapeNotPresent";
    case Errc::NoCherryOnPair: return "NoCherryOnPair";
    case Errc::NoPendantAtSet: return "NoPendantAtSet";
    case Errc::TooLargeForOracle: return "TooLargeForOracle";
    case Errc::UnknownTaxon: return "UnknownTaxon";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::DanglingHybridLabel: return "DanglingHybridLabel";
    case Errc::ValidationError: return "ValidationError";
    case Errc::InconsistentInput: return "InconsistentInput";
    case Errc::NoRuleMatches: return "NoRuleMatches";
    case Errc::LevelZeroInput: return "LevelZeroInput";
    case Errc::NoValidEdgeInBlob: return "NoValidEdgeInBlob";
    case Errc::NotTreeChild: return "NotTreeChild";
    case Errc::NotTreeChildAndTooLarge: return "NotTreeChildAndTooLarge";
    case Errc::ShapeEvidenceMissing: return "ShapeEvidenceMissing";
    case Errc::PureNodeNotFound: return "PureNodeNotFound";
    case Errc::NotAnMllsSet: return "NotAnMllsSet";
    case Errc::NotConsistentTriple: return "NotConsistentTriple";
    case Errc::Unsatisfiable: return "Unsatisfiable";
  }
  return "Unknown";
}

}  // namespace tcnet
