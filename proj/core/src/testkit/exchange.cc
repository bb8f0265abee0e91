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

#include "submod/testkit/exchange.h"

#include <stdexcept>

#include "submod/algorithms.h"
#include "submod/errors.h"

namespace submod::testkit {
namespace {

double Weight(const ElementSet& s, std::span<const double> w) {
  double total = 0;
  for (ElementId u : s) total += w[u];
  return total;
}

}  // namespace

BijectionWitness ExchangeBijection(const ElementSet& a, const ElementSet& b,
                                   std::span<const double> w,
                                   const Matroid& m) {
  if (!m.IsBase(a) || !m.IsBase(b)) {
    throw std::invalid_argument("ExchangeBijection: A and B must be bases");
  }
  for (ElementId u : m.ground()) {
    if (u >= static_cast<ElementId>(w.size()) || w[u] < 0) {
      throw std::invalid_argument(
          "ExchangeBijection: weights must be given and non-negative");
    }
  }
  if (Weight(a, w) < Weight(MaxWeightBase(m, w), w) - 1e-9) {
    throw std::invalid_argument("ExchangeBijection: " + a.ToString() +
                                " is not a maximum-weight base");
  }

  BijectionWitness witness;
  Matroid current = m;
  ElementSet rest_a = a;
  ElementSet rest_b = b;
  while (!rest_a.empty()) {
    ElementId u_a = rest_a[0];
    for (ElementId u : rest_a) {
      if (w[u] < w[u_a]) u_a = u;
    }
    ElementId u_b = -1;
    if (rest_b.Contains(u_a)) {
      u_b = u_a;
    } else {
      for (ElementId u : rest_b.Difference(rest_a)) {
        if (current.IsBase(rest_a.Without(u_a).With(u)) &&
            current.IsBase(rest_b.Without(u).With(u_a))) {
          u_b = u;
          break;
        }
      }
    }
    if (u_b < 0) {
      throw InternalInvariantError("ExchangeBijection: no exchange partner for " +
                                   std::to_string(u_a));
    }
    witness.mapping.emplace_back(u_a, u_b);
    current = Contract(current, ElementSet{u_b});
    rest_a = rest_a.Without(u_a);
    rest_b = rest_b.Without(u_b);
  }
  return witness;
}

std::vector<std::string> VerifyBijection(const BijectionWitness& witness,
                                         const ElementSet& a,
                                         const ElementSet& b,
                                         std::span<const double> w,
                                         const Matroid& m) {
  std::vector<std::string> problems;
  std::vector<ElementId> domain, image;
  for (const auto& [u, v] : witness.mapping) {
    domain.push_back(u);
    image.push_back(v);
  }
  if (ElementSet::FromUnsorted(domain) != a || domain.size() != a.size()) {
    problems.push_back("domain is not A");
  }
  if (ElementSet::FromUnsorted(image) != b || image.size() != b.size()) {
    problems.push_back("image is not B");
  }
  for (const auto& [u, v] : witness.mapping) {
    const ElementSet swapped = b.Without(v).With(u);
    if (!m.IsBase(swapped)) {
      problems.push_back("(B - " + std::to_string(v) + ") + " +
                         std::to_string(u) + " is not a base");
    }
    if (!(w[u] >= w[v])) {
      problems.push_back("w(" + std::to_string(u) + ") < w(" +
                         std::to_string(v) + ")");
    }
  }
  return problems;
}

}  // namespace submod::testkit
