// Copyright 2026 The Submax Authors.
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

// Value-oracle model: an algorithm sees a set function f : 2^[n] -> R>=0 only
// through evaluations, and its cost is the number of evaluations it issues.

#ifndef SUBMAX_ORACLE_H_
#define SUBMAX_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>

#include "submax/element_set.h"

namespace submax {

// Nonnegative, deterministic set function on the ground set [n].
//
// Implementations must be immutable after construction; a single instance may
// be shared by concurrent algorithm runs.
class SubmodularOracle {
 public:
  virtual ~SubmodularOracle() = default;

  virtual std::size_t ground_size() const = 0;

  // f(set). Members of `set` are < ground_size().
  virtual double value(const ElementSet& set) const = 0;

  // f(set + x), given value_of_set == f(set). The default evaluates the
  // augmented set from scratch; objectives with local structure may override
  // with an algebraically identical incremental formula. Either way it is one
  // oracle evaluation.
  virtual double value_with(const ElementSet& set, Element x,
                            double value_of_set) const;

  // f(set - x), given value_of_set == f(set). Same contract as value_with.
  virtual double value_without(const ElementSet& set, Element x,
                               double value_of_set) const;

  // Identifies the instance, so outcomes computed on different instances are
  // not compared by mistake. 0 means "anonymous".
  virtual std::uint64_t fingerprint() const { return 0; }
};

using OraclePtr = std::shared_ptr<const SubmodularOracle>;

// Wraps a callable as an oracle. Used for ad-hoc objectives in tests and for
// the planted non-submodular counterexample.
class FunctionOracle : public SubmodularOracle {
 public:
  using Function = std::function<double(const ElementSet&)>;

  FunctionOracle(std::size_t n, Function f, std::uint64_t fingerprint = 0)
      : n_(n), f_(std::move(f)), fingerprint_(fingerprint) {}

  std::size_t ground_size() const override { return n_; }
  double value(const ElementSet& set) const override { return f_(set); }
  std::uint64_t fingerprint() const override { return fingerprint_; }

 private:
  std::size_t n_;
  Function f_;
  std::uint64_t fingerprint_;
};

// Per-run query counter. Every evaluation routed through it increments
// count() by one; returned values are those of the wrapped oracle.
//
// Not thread-safe. Each algorithm run owns one.
class CountingOracle {
 public:
  explicit CountingOracle(const SubmodularOracle& inner) : inner_(&inner) {}

  const SubmodularOracle& inner() const { return *inner_; }
  std::size_t ground_size() const { return inner_->ground_size(); }

  std::uint64_t count() const { return count_; }
  void reset() { count_ = 0; }

  // f(set). One query. Throws std::out_of_range if a member is >= n.
  double evaluate(const ElementSet& set);

  // f(set + x) given f(set). One query. If x is already in set returns
  // value_of_set without querying.
  double evaluate_with(const ElementSet& set, Element x, double value_of_set);

  // f(set - x) given f(set). One query. If x is not in set returns
  // value_of_set without querying.
  double evaluate_without(const ElementSet& set, Element x,
                          double value_of_set);

  // f_x(set) = f(set + x) - f(set). Two queries when x is not in set; zero
  // queries (and gain 0) when it is.
  double marginal_gain(Element x, const ElementSet& set);

 private:
  void check_element(Element x) const;
  void check_set(const ElementSet& set) const;

  const SubmodularOracle* inner_;
  std::uint64_t count_ = 0;
};

// g(A) = f(A ∩ [n]) on the ground set [m]. Elements >= n are value-neutral.
class DummyExtendedOracle : public SubmodularOracle {
 public:
  DummyExtendedOracle(OraclePtr inner, std::size_t m);

  std::size_t ground_size() const override { return m_; }
  double value(const ElementSet& set) const override;
  double value_with(const ElementSet& set, Element x,
                    double value_of_set) const override;
  double value_without(const ElementSet& set, Element x,
                       double value_of_set) const override;
  std::uint64_t fingerprint() const override;

  const SubmodularOracle& base() const { return *inner_; }

 private:
  OraclePtr inner_;
  std::size_t m_;
};

// Returns `oracle` itself when n >= 4k, otherwise a DummyExtendedOracle on
// [4k]. Throws std::invalid_argument if k > n.
OraclePtr with_dummy_extension(OraclePtr oracle, std::size_t k);

// S ∩ [n], as a set over the universe [n].
ElementSet map_back(const ElementSet& set, std::size_t n);

// Mixes v into a running 64-bit hash (splitmix64 finalizer).
std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t v);
// 64-bit FNV-1a of a string.
std::uint64_t hash_string(std::string_view s);

}  // namespace submax

#endif  // SUBMAX_ORACLE_H_
