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

#ifndef SUBMOD_ERRORS_H_
#define SUBMOD_ERRORS_H_

#include <stdexcept>
#include <string>

namespace submod {

// Invalid caller input (out-of-range element, dependent contraction set, ...)
// is reported with std::invalid_argument. The types below cover the other
// failure classes.

// A property that a proven statement guarantees did not hold. Seeing this
// means a bug in the library or an input that violates its preconditions
// (e.g. a non-monotone function).
class InternalInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An exhaustive oracle would have to exceed its enumeration budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A bipartite graph has no perfect matching.
class InfeasibleMatching : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An instance description is inconsistent or cannot be parsed. `field` is a
// dotted path such as "matroid.capacities".
class InstanceError : public std::runtime_error {
 public:
  InstanceError(std::string field, const std::string& message)
      : std::runtime_error(field.empty() ? message : field + ": " + message),
        field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace submod

#endif  // SUBMOD_ERRORS_H_
