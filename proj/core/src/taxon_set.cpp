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

#include "tcnet/taxon_set.hpp"

#include <algorithm>

namespace tcnet {

TaxonSet::TaxonSet(std::vector<std::string> taxa) : taxa_(std::move(taxa)) {
  std::sort(taxa_.begin(), taxa_.end());
  taxa_.erase(std::unique(taxa_.begin(), taxa_.end()), taxa_.end());
}

TaxonSet::TaxonSet(std::initializer_list<std::string> taxa)
    : TaxonSet(std::vector<std::string>(taxa)) {}

bool TaxonSet::contains(std::string_view taxon) const {
  auto it = std::lower_bound(taxa_.begin(), taxa_.end(), taxon,
                             [](const std::string& a, std::string_view b) { return a < b; });
  return it != taxa_.end() && *it == taxon;
}

bool TaxonSet::is_subset_of(const TaxonSet& other) const {
  if (size() > other.size()) return false;
  return std::includes(other.taxa_.begin(), other.taxa_.end(), taxa_.begin(), taxa_.end());
}

bool TaxonSet::intersects(const TaxonSet& other) const {
  auto a = taxa_.begin();
  auto b = other.taxa_.begin();
  while (a != taxa_.end() && b != other.taxa_.end()) {
    if (*a == *b) return true;
    if (*a < *b) ++a; else ++b;
  }
  return false;
}

TaxonSet TaxonSet::united(const TaxonSet& other) const {
  TaxonSet out;
  out.taxa_.reserve(size() + other.size());
  std::set_union(taxa_.begin(), taxa_.end(), other.taxa_.begin(), other.taxa_.end(),
                 std::back_inserter(out.taxa_));
  return out;
}

void TaxonSet::insert(std::string taxon) {
  auto it = std::lower_bound(taxa_.begin(), taxa_.end(), taxon);
  if (it == taxa_.end() || *it != taxon) taxa_.insert(it, std::move(taxon));
}

std::string TaxonSet::composite_label() const {
  std::string out = "{";
  for (std::size_t i = 0; i < taxa_.size(); ++i) {
    if (i) out += ',';
    out += taxa_[i];
  }
  out += '}';
  return out;
}

std::size_t TaxonSetHash::operator()(const TaxonSet& s) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const auto& t : s) h ^= std::hash<std::string>{}(t) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

}  // namespace tcnet
