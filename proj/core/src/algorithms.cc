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

#include "submod/algorithms.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "submod/errors.h"
#include "submod/matching.h"
#include "submod/random.h"

namespace submod {

ElementSet ClassicalGreedy(const SetFunction& f, const Matroid& m) {
  ElementSet a;
  double value = f(a);
  while (static_cast<int>(a.size()) < m.rank()) {
    ElementId best = -1;
    double best_gain = -std::numeric_limits<double>::infinity();
    double best_value = 0;
    for (ElementId u : m.ground()) {
      if (a.Contains(u)) continue;
      const ElementSet extended = a.With(u);
      if (!m.IsIndependent(extended)) continue;
      const double extended_value = f(extended);
      const double gain = extended_value - value;
      if (gain > best_gain) {
        best_gain = gain;
        best = u;
        best_value = extended_value;
      }
    }
    if (best < 0) {
      throw InternalInvariantError("ClassicalGreedy: no element extends " +
                                   a.ToString());
    }
    a = a.With(best);
    value = best_value;
  }
  return a;
}

ElementSet MaxWeightBase(const Matroid& m, std::span<const double> weights) {
  std::vector<ElementId> order(m.ground().begin(), m.ground().end());
  for (ElementId u : order) {
    if (u >= static_cast<ElementId>(weights.size()) ||
        !std::isfinite(weights[u])) {
      throw std::invalid_argument("MaxWeightBase: missing or non-finite weight"
                                  " for element " + std::to_string(u));
    }
  }
  std::stable_sort(order.begin(), order.end(), [&](ElementId x, ElementId y) {
    return weights[x] > weights[y];
  });
  ElementSet base;
  for (ElementId u : order) {
    if (static_cast<int>(base.size()) == m.rank()) break;
    ElementSet extended = base.With(u);
    if (m.IsIndependent(extended)) base = std::move(extended);
  }
  return base;
}

std::vector<double> MarginalWeights(const SetFunction& f,
                                    const ElementSet& base,
                                    const ElementSet& candidates) {
  std::vector<double> weights(f.n(), 0.0);
  const double base_value = f(base);
  for (ElementId u : candidates) weights[u] = f(base.With(u)) - base_value;
  return weights;
}

SplitResult Split(const SetFunction& f, const Matroid& m, double p) {
  if (!(p >= 0 && p <= 1)) {
    throw std::invalid_argument("Split: p must lie in [0, 1]");
  }
  SplitResult out;
  double value_a = f(out.a);
  double value_b = value_a;
  for (int i = 0; i < m.rank(); ++i) {
    const ElementSet used = out.a.Union(out.b);
    ElementId best_a = -1, best_b = -1;
    double gain_a = 0, gain_b = 0, next_a = 0, next_b = 0;
    for (ElementId u : m.ground()) {
      if (used.Contains(u) || !m.IsIndependent(used.With(u))) continue;
      const double with_a = f(out.a.With(u));
      const double with_b = f(out.b.With(u));
      if (best_a < 0 || with_a - value_a > gain_a) {
        best_a = u;
        gain_a = with_a - value_a;
        next_a = with_a;
      }
      if (best_b < 0 || with_b - value_b > gain_b) {
        best_b = u;
        gain_b = with_b - value_b;
        next_b = with_b;
      }
    }
    if (best_a < 0) {
      throw InternalInvariantError("Split: no element extends " +
                                   used.ToString());
    }
    if (p * gain_a >= (1 - p) * gain_b) {
      out.a = out.a.With(best_a);
      value_a = next_a;
    } else {
      out.b = out.b.With(best_b);
      value_b = next_b;
    }
  }
  return out;
}

ElementSet ResidualRandomGreedy(const SetFunction& f, const Matroid& m,
                                std::uint64_t seed) {
  Rng rng(seed);
  ElementSet a;
  for (int i = 0; i < m.rank(); ++i) {
    const Matroid residual = Contract(m, a);
    const std::vector<double> weights =
        MarginalWeights(f, a, residual.ground());
    const ElementSet candidates = MaxWeightBase(residual, weights);
    if (candidates.empty()) {
      throw InternalInvariantError("ResidualRandomGreedy: empty residual base");
    }
    a = a.With(candidates[rng.Below(candidates.size())]);
  }
  return a;
}

ElementSet ResidualParallelGreedy(const SetFunction& f, const Matroid& m,
                                  const ElementSet& b) {
  if (!b.IsSubsetOf(m.ground()) || !m.IsBase(b)) {
    throw std::invalid_argument("ResidualParallelGreedy: " + b.ToString() +
                                " is not a base");
  }
  const int k = m.rank();
  if (k == 0) return {};

  std::vector<ElementSet> solutions(k);
  std::vector<ElementSet> residues(k, b);
  for (int i = 0; i < k; ++i) {
    WeightedBipartiteGraph graph(k);
    for (int j = 0; j < k; ++j) {
      const ElementSet& a = solutions[j];
      const ElementSet& residue = residues[j];
      const Matroid contracted = Contract(m, a);
      const std::vector<double> gain =
          MarginalWeights(f, a, contracted.ground());
      const ElementSet candidates = MaxWeightBase(contracted, gain);
      for (ElementId u : candidates) {
        const ElementSet grown = a.With(u);
        for (ElementId v : residue) {
          if (gain[u] < gain[v]) continue;
          if (!m.IsBase(grown.Union(residue.Without(v)))) continue;
          graph.AddEdge(b.IndexOf(v), j, gain[u], u);
        }
      }
    }
    Matching matching;
    try {
      matching = MaxWeightPerfectMatching(graph);
    } catch (const InfeasibleMatching&) {
      throw InternalInvariantError(
          "ResidualParallelGreedy: step " + std::to_string(i + 1) +
          " has no perfect matching (is f monotone submodular?)");
    }
    for (int j = 0; j < k; ++j) {
      const BipartiteEdge& e = matching.pairs[j];
      solutions[j] = solutions[j].With(e.payload);
      residues[j] = residues[j].Without(b[e.left]);
    }
  }

  int best = 0;
  double best_value = f(solutions[0]);
  for (int j = 1; j < k; ++j) {
    const double value = f(solutions[j]);
    if (value > best_value) {
      best_value = value;
      best = j;
    }
  }
  return solutions[best];
}

}  // namespace submod
