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

#include "submod/testkit/brute_force.h"

#include <string>

#include "submod/errors.h"

namespace submod::testkit {
namespace {

class BaseEnumerator {
 public:
  BaseEnumerator(const Matroid& m, std::int64_t max_bases)
      : m_(m), ground_(m.ground().begin(), m.ground().end()),
        max_bases_(max_bases) {}

  std::vector<ElementSet> Run() {
    Extend(ElementSet(), 0);
    return std::move(bases_);
  }

 private:
  void Extend(const ElementSet& current, std::size_t next) {
    const std::size_t missing = m_.rank() - current.size();
    if (missing == 0) {
      if (static_cast<std::int64_t>(bases_.size()) >= max_bases_) {
        throw BudgetExceeded("EnumerateBases: more than " +
                             std::to_string(max_bases_) + " bases");
      }
      bases_.push_back(current);
      return;
    }
    for (std::size_t i = next; i + missing <= ground_.size(); ++i) {
      ElementSet grown = current.With(ground_[i]);
      if (m_.IsIndependent(grown)) Extend(grown, i + 1);
    }
  }

  const Matroid& m_;
  std::vector<ElementId> ground_;
  std::int64_t max_bases_;
  std::vector<ElementSet> bases_;
};

}  // namespace

std::vector<ElementSet> EnumerateBases(const Matroid& m,
                                       std::int64_t max_bases) {
  return BaseEnumerator(m, max_bases).Run();
}

OptResult BruteForceOpt(const SetFunction& f, const Matroid& m,
                        std::int64_t max_bases) {
  return BruteForceOpt(f, EnumerateBases(m, max_bases));
}

OptResult BruteForceOpt(const SetFunction& f,
                        const std::vector<ElementSet>& bases) {
  if (bases.empty()) {
    throw InternalInvariantError("BruteForceOpt: matroid has no base");
  }
  OptResult best{f(bases[0]), bases[0]};
  for (std::size_t i = 1; i < bases.size(); ++i) {
    const double value = f(bases[i]);
    if (value > best.value) best = {value, bases[i]};
  }
  return best;
}

}  // namespace submod::testkit
