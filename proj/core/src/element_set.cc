// Copyright 2026 The Authors.
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

#include "submod/element_set.h"

#include <algorithm>
#include <iterator>
#include <sstream>
#include <stdexcept>

namespace submod {

ElementSet::ElementSet(std::initializer_list<ElementId> ids)
    : ElementSet(FromUnsorted(std::vector<ElementId>(ids))) {}

ElementSet ElementSet::FromUnsorted(std::vector<ElementId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  ElementSet s;
  s.members_ = std::move(ids);
  return s;
}

ElementSet ElementSet::Range(ElementId n) {
  ElementSet s;
  s.members_.resize(n < 0 ? 0 : static_cast<std::size_t>(n));
  for (ElementId i = 0; i < n; ++i) s.members_[i] = i;
  return s;
}

bool ElementSet::Contains(ElementId u) const {
  return std::binary_search(members_.begin(), members_.end(), u);
}

int ElementSet::IndexOf(ElementId u) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), u);
  if (it == members_.end() || *it != u) return -1;
  return static_cast<int>(it - members_.begin());
}

ElementSet ElementSet::With(ElementId u) const {
  ElementSet s = *this;
  auto it = std::lower_bound(s.members_.begin(), s.members_.end(), u);
  if (it == s.members_.end() || *it != u) s.members_.insert(it, u);
  return s;
}

ElementSet ElementSet::Without(ElementId u) const {
  ElementSet s = *this;
  auto it = std::lower_bound(s.members_.begin(), s.members_.end(), u);
  if (it != s.members_.end() && *it == u) s.members_.erase(it);
  return s;
}

ElementSet ElementSet::Union(const ElementSet& other) const {
  ElementSet s;
  s.members_.reserve(members_.size() + other.members_.size());
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(s.members_));
  return s;
}

ElementSet ElementSet::Intersection(const ElementSet& other) const {
  ElementSet s;
  std::set_intersection(members_.begin(), members_.end(),
                        other.members_.begin(), other.members_.end(),
                        std::back_inserter(s.members_));
  return s;
}

ElementSet ElementSet::Difference(const ElementSet& other) const {
  ElementSet s;
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                      other.members_.end(), std::back_inserter(s.members_));
  return s;
}

bool ElementSet::IsSubsetOf(const ElementSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

bool ElementSet::IsDisjointFrom(const ElementSet& other) const {
  auto a = members_.begin();
  auto b = other.members_.begin();
  while (a != members_.end() && b != other.members_.end()) {
    if (*a == *b) return false;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return true;
}

std::string ElementSet::ToString() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ElementSet& s) {
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) os << ',';
    os << s[i];
  }
  return os << '}';
}

ElementSet FromMask(std::uint64_t mask) {
  std::vector<ElementId> ids;
  for (ElementId i = 0; i < 64 && mask != 0; ++i, mask >>= 1) {
    if (mask & 1u) ids.push_back(i);
  }
  return ElementSet::FromUnsorted(std::move(ids));
}

std::uint64_t ToMask(const ElementSet& s) {
  std::uint64_t mask = 0;
  for (ElementId u : s) {
    if (u < 0 || u >= 64) throw std::out_of_range("ToMask: element >= 64");
    mask |= std::uint64_t{1} << u;
  }
  return mask;
}

}  // namespace submod
