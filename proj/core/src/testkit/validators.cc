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

#include "submod/testkit/validators.h"

#include <bit>
#include <stdexcept>

namespace submod::testkit {
namespace {

using Mask = std::uint32_t;

void RequireSmall(ElementId n) {
  if (n < 0 || n > 10) {
    throw std::invalid_argument("validators require 0 <= n <= 10");
  }
}

std::string Show(Mask mask) {
  return FromMask(mask).ToString();
}

}  // namespace

void ValidationReport::Fail(std::string message) {
  ++violation_count;
  if (violations.size() < kMaxListed) violations.push_back(std::move(message));
}

ValidationReport ValidateMonotoneSubmodular(const SetFunction& f, ElementId n,
                                            double tolerance) {
  RequireSmall(n);
  const Mask full = (Mask{1} << n) - 1;
  std::vector<double> value(full + 1);
  for (Mask s = 0; s <= full; ++s) value[s] = f(FromMask(s));

  ValidationReport report;
  for (Mask s = 0; s <= full; ++s) {
    ++report.checks;
    if (value[s] < -tolerance) {
      report.Fail("f(" + Show(s) + ") = " + std::to_string(value[s]) + " < 0");
    }
    for (ElementId u = 0; u < n; ++u) {
      const Mask bit = Mask{1} << u;
      if (s & bit) continue;
      ++report.checks;
      if (value[s | bit] < value[s] - tolerance) {
        report.Fail("not monotone: f(" + Show(s | bit) + ") < f(" + Show(s) +
                    ")");
      }
    }
  }
  // T ranges over supersets of S, u over elements outside T.
  for (Mask t = 0; t <= full; ++t) {
    for (Mask s = t;; s = (s - 1) & t) {
      if (s != t) {
        for (ElementId u = 0; u < n; ++u) {
          const Mask bit = Mask{1} << u;
          if (t & bit) continue;
          ++report.checks;
          const double gain_s = value[s | bit] - value[s];
          const double gain_t = value[t | bit] - value[t];
          if (gain_s < gain_t - tolerance) {
            report.Fail("not submodular: f(" + std::to_string(u) + " | " +
                        Show(s) + ") < f(" + std::to_string(u) + " | " +
                        Show(t) + ")");
          }
        }
      }
      if (s == 0) break;
    }
  }
  return report;
}

ValidationReport ValidateMatroidAxioms(const Matroid& m, ElementId n) {
  RequireSmall(n);
  const ElementSet& ground = m.ground();
  if (!ground.empty() && ground[ground.size() - 1] >= n) {
    throw std::invalid_argument("ValidateMatroidAxioms: ground exceeds n");
  }
  const Mask ground_mask = static_cast<Mask>(ToMask(ground));
  std::vector<char> independent(std::size_t{1} << n, 0);
  for (Mask s = ground_mask;; s = (s - 1) & ground_mask) {
    independent[s] = m.IsIndependent(FromMask(s));
    if (s == 0) break;
  }

  ValidationReport report;
  ++report.checks;
  if (!independent[0]) report.Fail("the empty set is dependent");
  for (Mask s = ground_mask;; s = (s - 1) & ground_mask) {
    if (independent[s]) {
      bool maximal = true;
      for (ElementId u : ground) {
        const Mask bit = Mask{1} << u;
        if (s & bit) {
          ++report.checks;
          if (!independent[s & ~bit]) {
            report.Fail("not closed under removal: " + Show(s) +
                        " independent, " + Show(s & ~bit) + " dependent");
          }
        } else if (independent[s | bit]) {
          maximal = false;
        }
      }
      if (maximal) {
        ++report.checks;
        if (std::popcount(s) != m.rank()) {
          report.Fail("maximal independent set " + Show(s) + " has size " +
                      std::to_string(std::popcount(s)) + " != rank " +
                      std::to_string(m.rank()));
        }
      }
      for (Mask t = ground_mask;; t = (t - 1) & ground_mask) {
        if (independent[t] && std::popcount(s) < std::popcount(t)) {
          ++report.checks;
          bool extended = false;
          for (ElementId u : ground) {
            const Mask bit = Mask{1} << u;
            if ((t & bit) && !(s & bit) && independent[s | bit]) {
              extended = true;
              break;
            }
          }
          if (!extended) {
            report.Fail("no exchange from " + Show(t) + " into " + Show(s));
          }
        }
        if (t == 0) break;
      }
    }
    if (s == 0) break;
  }
  return report;
}

}  // namespace submod::testkit
