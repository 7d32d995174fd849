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

#include "submax/verification.h"

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace submax {
namespace {

ElementSet from_mask(std::size_t n, std::uint64_t mask) {
  ElementSet out(n);
  for (Element x = 0; x < n; ++x) {
    if (mask >> x & 1) out.insert(x);
  }
  return out;
}

// Re-evaluates a candidate pair from scratch; returns it only if it is a
// genuine violation.
std::optional<SubmodularityViolation> confirm(const SubmodularOracle& oracle,
                                              const ElementSet& s,
                                              const ElementSet& t,
                                              double tolerance) {
  SubmodularityViolation v{s, t, oracle.value(s), oracle.value(t),
                           oracle.value(s.set_union(t)),
                           oracle.value(s.set_intersection(t))};
  if (v.f_s + v.f_t < v.f_union + v.f_intersection - tolerance) return v;
  return std::nullopt;
}

}  // namespace

SubmodularityReport check_submodular(const SubmodularOracle& oracle,
                                     const CheckMode& mode, double tolerance) {
  const std::size_t n = oracle.ground_size();
  SubmodularityReport report;

  if (std::holds_alternative<ExhaustiveCheck>(mode)) {
    if (n > kExhaustiveLimit) {
      throw std::invalid_argument("exhaustive submodularity check needs n <= " +
                                  std::to_string(kExhaustiveLimit) +
                                  ", got n=" + std::to_string(n));
    }
    const std::uint64_t subsets = std::uint64_t{1} << n;
    std::vector<double> table(subsets);
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      table[mask] = oracle.value(from_mask(n, mask));
    }
    for (std::uint64_t s = 0; s < subsets; ++s) {
      for (std::uint64_t t = s; t < subsets; ++t) {
        ++report.pairs_checked;
        if (table[s] + table[t] < table[s | t] + table[s & t] - tolerance) {
          auto v = confirm(oracle, from_mask(n, s), from_mask(n, t), tolerance);
          if (v) {
            report.passed = false;
            report.violation = std::move(v);
            return report;
          }
        }
      }
    }
    return report;
  }

  const auto& sampled = std::get<SampledCheck>(mode);
  std::mt19937_64 rng(sampled.seed);
  std::bernoulli_distribution coin(0.5);
  for (std::uint64_t i = 0; i < sampled.pairs; ++i) {
    ElementSet s(n);
    ElementSet t(n);
    for (Element x = 0; x < n; ++x) {
      if (coin(rng)) s.insert(x);
      if (coin(rng)) t.insert(x);
    }
    ++report.pairs_checked;
    const double lhs = oracle.value(s) + oracle.value(t);
    const double rhs =
        oracle.value(s.set_union(t)) + oracle.value(s.set_intersection(t));
    if (lhs < rhs - tolerance) {
      auto v = confirm(oracle, s, t, tolerance);
      if (v) {
        report.passed = false;
        report.violation = std::move(v);
        return report;
      }
    }
  }
  return report;
}

RatioCertificate certify_ratio(const AlgorithmOutcome& alg,
                               const AlgorithmOutcome& opt, double ratio,
                               double tol) {
  if (alg.fingerprint != opt.fingerprint) {
    throw std::invalid_argument(
        "certify_ratio: outcomes come from different instances");
  }
  RatioCertificate cert;
  cert.achieved = opt.value > 0.0 ? alg.value / opt.value : 1.0;
  cert.margin = alg.value - (ratio * opt.value - tol);
  cert.passed = cert.margin >= 0.0;
  return cert;
}

double QueryBound::limit() const {
  const double nn = static_cast<double>(n);
  switch (form) {
    case Form::kThreshold:
      return c * (nn / delta) * std::log(static_cast<double>(k) / delta);
    case Form::kInterlace:
      return 4.0 * static_cast<double>(k) * nn + 2.0 * nn;
  }
  return 0.0;
}

QueryBound threshold_query_bound(double c, std::size_t n, std::size_t k,
                                 double delta) {
  return {QueryBound::Form::kThreshold, c, n, k, delta};
}

QueryBound interlace_query_bound(std::size_t n, std::size_t k) {
  return {QueryBound::Form::kInterlace, 1.0, n, k, 0.0};
}

QueryAudit audit_query_bound(const AlgorithmOutcome& outcome,
                             const QueryBound& bound) {
  QueryAudit audit;
  audit.queries = outcome.queries;
  audit.limit = bound.limit();
  audit.passed = static_cast<double>(outcome.queries) <= audit.limit;
  return audit;
}

std::optional<std::string> check_interlace_invariants(
    const AlgorithmOutcome& outcome, const SubmodularOracle& run_oracle,
    const SubmodularOracle& solution_oracle, double tolerance) {
  const std::size_t k = outcome.k;
  if (outcome.solution.size() > k) {
    return "solution has " + std::to_string(outcome.solution.size()) +
           " elements, budget is " + std::to_string(k);
  }
  const double fresh = solution_oracle.value(outcome.solution);
  if (std::abs(fresh - outcome.value) > tolerance) {
    return "reported value " + std::to_string(outcome.value) +
           " differs from re-evaluated " + std::to_string(fresh);
  }
  if (!outcome.interlace) return std::nullopt;

  const InterlaceSets& sets = outcome.interlace.value();
  for (const ElementSet* s : {&sets.a, &sets.b, &sets.d, &sets.e}) {
    if (s->size() > k) return "an interlaced set exceeds the budget";
  }
  if (!sets.a.set_intersection(sets.b).empty()) {
    return "A and B intersect: " + sets.a.set_intersection(sets.b).to_string();
  }
  const ElementSet shared = sets.d.set_intersection(sets.e);
  if (sets.first) {
    if (!(shared == ElementSet(run_oracle.ground_size(), {*sets.first}))) {
      return "D ∩ E = " + shared.to_string() + ", expected {" +
             std::to_string(*sets.first) + "}";
    }
  } else if (!shared.empty()) {
    return "D ∩ E nonempty without a seed element";
  }

  std::array<double, 4> last_threshold;
  last_threshold.fill(INFINITY);
  for (const TraceEntry& entry : outcome.trace) {
    double& last = last_threshold[static_cast<int>(entry.set)];
    if (entry.threshold > last + tolerance) {
      return std::string("threshold of set ") + label_char(entry.set) +
             " rose from " + std::to_string(last) + " to " +
             std::to_string(entry.threshold);
    }
    if (entry.gain < entry.threshold - tolerance) {
      return std::string("element ") + std::to_string(entry.element) +
             " entered set " + label_char(entry.set) + " with gain " +
             std::to_string(entry.gain) + " below threshold " +
             std::to_string(entry.threshold);
    }
    last = entry.threshold;
  }
  return std::nullopt;
}

}  // namespace submax
