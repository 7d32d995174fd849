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

// Property checks: submodularity of an oracle, approximation ratio against an
// exact optimum, query-count ceilings, and structural facts about interlaced
// runs.

#ifndef SUBMAX_VERIFICATION_H_
#define SUBMAX_VERIFICATION_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "submax/algorithms.h"
#include "submax/element_set.h"
#include "submax/oracle.h"

namespace submax {

inline constexpr double kValueTolerance = 1e-9;
inline constexpr std::size_t kExhaustiveLimit = 12;

// f(S) + f(T) < f(S ∪ T) + f(S ∩ T) for this pair.
struct SubmodularityViolation {
  ElementSet s;
  ElementSet t;
  double f_s = 0.0;
  double f_t = 0.0;
  double f_union = 0.0;
  double f_intersection = 0.0;
};

struct SubmodularityReport {
  bool passed = true;
  std::uint64_t pairs_checked = 0;
  std::optional<SubmodularityViolation> violation;
};

// Every unordered pair (S, T) of subsets of [n]; requires n <= 12.
struct ExhaustiveCheck {};
// `pairs` independent uniformly random pairs.
struct SampledCheck {
  std::uint64_t pairs = 10000;
  std::uint64_t seed = 0;
};
using CheckMode = std::variant<ExhaustiveCheck, SampledCheck>;

// Stops at the first violation, which is re-evaluated with four fresh oracle
// calls before it is reported. Throws std::invalid_argument for an exhaustive
// check with n > kExhaustiveLimit.
SubmodularityReport check_submodular(const SubmodularOracle& oracle,
                                     const CheckMode& mode,
                                     double tolerance = kValueTolerance);

struct RatioCertificate {
  bool passed = false;
  // value(alg) / value(opt); 1 when the optimum is 0.
  double achieved = 1.0;
  // value(alg) - (ratio * value(opt) - tol).
  double margin = 0.0;
};

// Passes iff value(alg) >= ratio * value(opt) - tol. Throws
// std::invalid_argument when the two outcomes come from different instances.
RatioCertificate certify_ratio(const AlgorithmOutcome& alg,
                               const AlgorithmOutcome& opt, double ratio,
                               double tol = kValueTolerance);

struct QueryBound {
  enum class Form {
    kThreshold,  // c * (n / delta) * ln(k / delta)
    kInterlace,  // 4kn + 2n
  };
  Form form = Form::kThreshold;
  double c = 1.0;
  std::size_t n = 0;
  std::size_t k = 0;
  double delta = 0.1;

  double limit() const;
};

QueryBound threshold_query_bound(double c, std::size_t n, std::size_t k,
                                 double delta);
QueryBound interlace_query_bound(std::size_t n, std::size_t k);

struct QueryAudit {
  bool passed = false;
  std::uint64_t queries = 0;
  double limit = 0.0;
};

QueryAudit audit_query_bound(const AlgorithmOutcome& outcome,
                             const QueryBound& bound);

// Checks what every interlaced outcome must satisfy:
//   A ∩ B = {}, D ∩ E = {a_0}, all four sets and the solution hold <= k
//   elements, per-set thresholds in the trace never increase, each selected
//   gain reached its threshold, and `value` matches a fresh evaluation of the
//   solution on `oracle`.
// Returns a description of the first failure.
std::optional<std::string> check_interlace_invariants(
    const AlgorithmOutcome& outcome, const SubmodularOracle& run_oracle,
    const SubmodularOracle& solution_oracle,
    double tolerance = kValueTolerance);

}  // namespace submax

#endif  // SUBMAX_VERIFICATION_H_
