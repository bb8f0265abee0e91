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

#ifndef SUBMOD_ELEMENT_SET_H_
#define SUBMOD_ELEMENT_SET_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace submod {

// Index of an element in the ground set [0, n).
using ElementId = std::int32_t;

// A finite set of elements kept in canonical ascending order, so that two
// sets are equal exactly when their member vectors are equal.
class ElementSet {
 public:
  using const_iterator = std::vector<ElementId>::const_iterator;

  ElementSet() = default;
  ElementSet(std::initializer_list<ElementId> ids);

  // Sorts and removes duplicates.
  static ElementSet FromUnsorted(std::vector<ElementId> ids);
  // {0, 1, ..., n - 1}.
  static ElementSet Range(ElementId n);

  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  const_iterator begin() const { return members_.begin(); }
  const_iterator end() const { return members_.end(); }
  ElementId operator[](std::size_t i) const { return members_[i]; }
  std::span<const ElementId> members() const { return members_; }

  bool Contains(ElementId u) const;
  // Position of u in the canonical order, or -1.
  int IndexOf(ElementId u) const;

  // S + u and S - u. Adding a member or removing a non-member is a no-op.
  ElementSet With(ElementId u) const;
  ElementSet Without(ElementId u) const;

  ElementSet Union(const ElementSet& other) const;
  ElementSet Intersection(const ElementSet& other) const;
  ElementSet Difference(const ElementSet& other) const;
  bool IsSubsetOf(const ElementSet& other) const;
  bool IsDisjointFrom(const ElementSet& other) const;

  // Largest member + 1, or 0 when empty.
  ElementId Bound() const { return members_.empty() ? 0 : members_.back() + 1; }

  std::string ToString() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend auto operator<=>(const ElementSet& a, const ElementSet& b) {
    return a.members_ <=> b.members_;
  }

 private:
  std::vector<ElementId> members_;
};

std::ostream& operator<<(std::ostream& os, const ElementSet& s);

// Members of `mask` interpreted as a bitset over [0, 64).
ElementSet FromMask(std::uint64_t mask);
std::uint64_t ToMask(const ElementSet& s);

}  // namespace submod

#endif  // SUBMOD_ELEMENT_SET_H_
