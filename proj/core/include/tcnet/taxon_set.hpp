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

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace tcnet {

/// A set of taxon labels kept as a sorted, duplicate-free vector. Subset tests
/// are merge scans; |X| stays in the hundreds at most.
class TaxonSet {
 public:
  using const_iterator = std::vector<std::string>::const_iterator;

  TaxonSet() = default;
  explicit TaxonSet(std::vector<std::string> taxa);
  TaxonSet(std::initializer_list<std::string> taxa);

  bool contains(std::string_view taxon) const;
  bool is_subset_of(const TaxonSet& other) const;
  bool is_strict_subset_of(const TaxonSet& other) const {
    return size() < other.size() && is_subset_of(other);
  }
  bool intersects(const TaxonSet& other) const;

  TaxonSet united(const TaxonSet& other) const;
  void insert(std::string taxon);

  std::size_t size() const { return taxa_.size(); }
  bool empty() const { return taxa_.empty(); }
  const_iterator begin() const { return taxa_.begin(); }
  const_iterator end() const { return taxa_.end(); }
  const std::vector<std::string>& items() const { return taxa_; }

  /// The label a collapsed pendant with this leaf set receives: "{a,b,c}".
  std::string composite_label() const;

  friend bool operator==(const TaxonSet&, const TaxonSet&) = default;
  friend auto operator<=>(const TaxonSet& a, const TaxonSet& b) { return a.taxa_ <=> b.taxa_; }

 private:
  std::vector<std::string> taxa_;
};

struct TaxonSetHash {
  std::size_t operator()(const TaxonSet& s) const noexcept;
};

}  // namespace tcnet
