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

#ifndef SUBMOD_ORACLE_H_
#define SUBMOD_ORACLE_H_

#include <cstdint>
#include <memory>
#include <optional>

#include "submod/element_set.h"

namespace submod {

// Number of calls made to the underlying value and independence oracles.
struct OracleCounts {
  std::int64_t value_queries = 0;
  std::int64_t independence_queries = 0;

  friend bool operator==(const OracleCounts&, const OracleCounts&) = default;
};

// Value oracle f: 2^N -> R. Implementations record each leaf evaluation in
// the `counts` argument; wrappers (marginals) forward to their parent and
// therefore never count on their own.
class ValueOracle {
 public:
  virtual ~ValueOracle() = default;

  // Size n of the index space [0, n).
  virtual ElementId ground_size() const = 0;
  virtual double Evaluate(const ElementSet& s, OracleCounts& counts) const = 0;
};

// Base class for concrete functions: one counted query per evaluation.
class LeafValueOracle : public ValueOracle {
 public:
  double Evaluate(const ElementSet& s, OracleCounts& counts) const final {
    ++counts.value_queries;
    return Value(s);
  }

 protected:
  virtual double Value(const ElementSet& s) const = 0;
};

// Independence oracle of a matroid whose ground set is a subset of [0, n).
class IndependenceOracle {
 public:
  virtual ~IndependenceOracle() = default;

  virtual ElementId ground_size() const = 0;
  virtual const ElementSet& ground() const = 0;
  virtual int rank() const = 0;
  // `s` is assumed to be a subset of ground(); the handle checks this.
  virtual bool IsIndependent(const ElementSet& s,
                             OracleCounts& counts) const = 0;
};

class LeafIndependenceOracle : public IndependenceOracle {
 public:
  bool IsIndependent(const ElementSet& s, OracleCounts& counts) const final {
    ++counts.independence_queries;
    return Independent(s);
  }

 protected:
  virtual bool Independent(const ElementSet& s) const = 0;
};

// Handle pairing a shared, immutable value oracle with a query counter.
// Copies share both; WithCounts() rebinds the oracle to a fresh counter so
// the same function can serve several independent runs.
class SetFunction {
 public:
  explicit SetFunction(std::shared_ptr<const ValueOracle> oracle,
                       std::shared_ptr<OracleCounts> counts = nullptr);

  ElementId n() const { return oracle_->ground_size(); }

  // Throws std::invalid_argument when s is not inside [0, n).
  double Evaluate(const ElementSet& s) const;
  double operator()(const ElementSet& s) const { return Evaluate(s); }

  const OracleCounts& counts() const { return *counts_; }
  const std::shared_ptr<OracleCounts>& shared_counts() const {
    return counts_;
  }
  const std::shared_ptr<const ValueOracle>& oracle() const { return oracle_; }

  SetFunction WithCounts(std::shared_ptr<OracleCounts> counts) const;

 private:
  std::shared_ptr<const ValueOracle> oracle_;
  std::shared_ptr<OracleCounts> counts_;
};

// g(S) = f(S u A) - f(A). f(A) is fetched on the first evaluation of g and
// cached, so g's first call costs two queries and every later call one.
// Queries land on f's counter.
//
// The cache is not synchronized; a marginal function belongs to one run.
SetFunction MarginalFunction(const SetFunction& f, const ElementSet& a);

// Matroid handle; same sharing rules as SetFunction.
class Matroid {
 public:
  explicit Matroid(std::shared_ptr<const IndependenceOracle> oracle,
                   std::shared_ptr<OracleCounts> counts = nullptr);

  ElementId n() const { return oracle_->ground_size(); }
  int rank() const { return oracle_->rank(); }
  const ElementSet& ground() const { return oracle_->ground(); }

  // Throws std::invalid_argument when s is not a subset of ground().
  bool IsIndependent(const ElementSet& s) const;
  // Independent and of size rank(). Sets of the wrong size are rejected
  // without an oracle call.
  bool IsBase(const ElementSet& s) const;

  const OracleCounts& counts() const { return *counts_; }
  const std::shared_ptr<OracleCounts>& shared_counts() const {
    return counts_;
  }
  const std::shared_ptr<const IndependenceOracle>& oracle() const {
    return oracle_;
  }

  Matroid WithCounts(std::shared_ptr<OracleCounts> counts) const;

 private:
  std::shared_ptr<const IndependenceOracle> oracle_;
  std::shared_ptr<OracleCounts> counts_;
};

// M/A over ground(M) \ A: S is independent iff S u A is independent in M.
// rank(M/A) = rank(M) - |A|, which may be zero. Costs one independence query
// to validate A; throws std::invalid_argument when A is dependent or leaves
// the ground set.
Matroid Contract(const Matroid& m, const ElementSet& a);

inline bool IsBase(const Matroid& m, const ElementSet& s) {
  return m.IsBase(s);
}

}  // namespace submod

#endif  // SUBMOD_ORACLE_H_
