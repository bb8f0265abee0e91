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

#include "submod/oracle.h"

#include <stdexcept>
#include <string>
#include <utility>

namespace submod {
namespace {

void CheckInRange(const ElementSet& s, ElementId n, const char* what) {
  if (!s.empty() && (s[0] < 0 || s.Bound() > n)) {
    throw std::invalid_argument(std::string(what) + ": set " + s.ToString() +
                                " is outside [0, " + std::to_string(n) + ")");
  }
}

class MarginalOracle : public ValueOracle {
 public:
  MarginalOracle(std::shared_ptr<const ValueOracle> parent, ElementSet base)
      : parent_(std::move(parent)), base_(std::move(base)) {}

  ElementId ground_size() const override { return parent_->ground_size(); }

  double Evaluate(const ElementSet& s, OracleCounts& counts) const override {
    if (!base_value_) base_value_ = parent_->Evaluate(base_, counts);
    return parent_->Evaluate(s.Union(base_), counts) - *base_value_;
  }

 private:
  std::shared_ptr<const ValueOracle> parent_;
  ElementSet base_;
  mutable std::optional<double> base_value_;
};

class ContractedOracle : public IndependenceOracle {
 public:
  ContractedOracle(std::shared_ptr<const IndependenceOracle> parent,
                   ElementSet contracted)
      : parent_(std::move(parent)),
        contracted_(std::move(contracted)),
        ground_(parent_->ground().Difference(contracted_)),
        rank_(parent_->rank() - static_cast<int>(contracted_.size())) {}

  ElementId ground_size() const override { return parent_->ground_size(); }
  const ElementSet& ground() const override { return ground_; }
  int rank() const override { return rank_; }

  bool IsIndependent(const ElementSet& s,
                     OracleCounts& counts) const override {
    return parent_->IsIndependent(s.Union(contracted_), counts);
  }

 private:
  std::shared_ptr<const IndependenceOracle> parent_;
  ElementSet contracted_;
  ElementSet ground_;
  int rank_;
};

}  // namespace

SetFunction::SetFunction(std::shared_ptr<const ValueOracle> oracle,
                         std::shared_ptr<OracleCounts> counts)
    : oracle_(std::move(oracle)), counts_(std::move(counts)) {
  if (!oracle_) throw std::invalid_argument("SetFunction: null oracle");
  if (!counts_) counts_ = std::make_shared<OracleCounts>();
}

double SetFunction::Evaluate(const ElementSet& s) const {
  CheckInRange(s, n(), "SetFunction::Evaluate");
  return oracle_->Evaluate(s, *counts_);
}

SetFunction SetFunction::WithCounts(
    std::shared_ptr<OracleCounts> counts) const {
  return SetFunction(oracle_, std::move(counts));
}

SetFunction MarginalFunction(const SetFunction& f, const ElementSet& a) {
  CheckInRange(a, f.n(), "MarginalFunction");
  return SetFunction(std::make_shared<MarginalOracle>(f.oracle(), a),
                     f.shared_counts());
}

Matroid::Matroid(std::shared_ptr<const IndependenceOracle> oracle,
                 std::shared_ptr<OracleCounts> counts)
    : oracle_(std::move(oracle)), counts_(std::move(counts)) {
  if (!oracle_) throw std::invalid_argument("Matroid: null oracle");
  if (!counts_) counts_ = std::make_shared<OracleCounts>();
}

bool Matroid::IsIndependent(const ElementSet& s) const {
  if (!s.IsSubsetOf(ground())) {
    throw std::invalid_argument("Matroid::IsIndependent: " + s.ToString() +
                                " is not a subset of the ground set");
  }
  return oracle_->IsIndependent(s, *counts_);
}

bool Matroid::IsBase(const ElementSet& s) const {
  if (static_cast<int>(s.size()) != rank()) return false;
  if (!s.IsSubsetOf(ground())) {
    throw std::invalid_argument("Matroid::IsBase: " + s.ToString() +
                                " is not a subset of the ground set");
  }
  return oracle_->IsIndependent(s, *counts_);
}

Matroid Matroid::WithCounts(std::shared_ptr<OracleCounts> counts) const {
  return Matroid(oracle_, std::move(counts));
}

Matroid Contract(const Matroid& m, const ElementSet& a) {
  if (a.empty()) return m;
  if (!m.IsIndependent(a)) {
    throw std::invalid_argument("Contract: " + a.ToString() +
                                " is not independent");
  }
  return Matroid(std::make_shared<ContractedOracle>(m.oracle(), a),
                 m.shared_counts());
}

}  // namespace submod
