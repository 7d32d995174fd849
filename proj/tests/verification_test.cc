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

#include <random>

#include "gtest/gtest.h"
#include "submax/algorithms.h"
#include "submax/instances.h"
#include "submax/objectives.h"
#include "submax/oracle.h"
#include "submax/verification.h"
#include "test_util.h"

namespace submax {
namespace {

FunctionOracle square_of_size(std::size_t n) {
  return FunctionOracle(n, [](const ElementSet& s) {
    const double size = static_cast<double>(s.size());
    return size * size;
  });
}

TEST(CheckSubmodularTest, SquareOfSizeViolationAtFirstPair) {
  const SubmodularityReport report =
      check_submodular(square_of_size(4), ExhaustiveCheck{});
  EXPECT_FALSE(report.passed);
  ASSERT_TRUE(report.violation.has_value());
  const SubmodularityViolation& v = *report.violation;
  EXPECT_EQ(v.s, ElementSet(4, {0}));
  EXPECT_EQ(v.t, ElementSet(4, {1}));
  EXPECT_EQ(v.f_s, 1.0);
  EXPECT_EQ(v.f_t, 1.0);
  EXPECT_EQ(v.f_union, 4.0);
  EXPECT_EQ(v.f_intersection, 0.0);
}

TEST(CheckSubmodularTest, SampledFlagsSquareOfSize) {
  const SubmodularityReport report =
      check_submodular(square_of_size(30), SampledCheck{2000, 1});
  EXPECT_FALSE(report.passed);
  const SubmodularityViolation& v = *report.violation;
  EXPECT_LT(v.f_s + v.f_t, v.f_union + v.f_intersection);
}

TEST(CheckSubmodularTest, ExhaustiveRejectsLargeGround) {
  CutOracle f(gen_er(13, 0.5, RngSeed{1}));
  EXPECT_THROW(check_submodular(f, ExhaustiveCheck{}), std::invalid_argument);
}

TEST(CheckSubmodularTest, ExhaustivePassesOnCutAndCountsPairs) {
  CutOracle f(gen_er(6, 0.5, RngSeed{3}));
  const SubmodularityReport report = check_submodular(f, ExhaustiveCheck{});
  EXPECT_TRUE(report.passed);
  // Unordered pairs with repetition of the 64 subsets.
  EXPECT_EQ(report.pairs_checked, 64u * 65 / 2);
}

TEST(CheckSubmodularTest, ModularFunctionPasses) {
  FunctionOracle f(10, [](const ElementSet& s) {
    double total = 0;
    for (Element x : s) total += static_cast<double>(x) - 4.5;
    return total;
  });
  EXPECT_TRUE(check_submodular(f, ExhaustiveCheck{}).passed);
}

// Property: sampling never reports a violation for a submodular function.
TEST(CheckSubmodularTest, SampledNeverFalselyFlags) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    CutOracle f(random_weights(gen_ba(60, 3, RngSeed{seed}), 1, 10,
                               RngSeed{seed + 100}));
    EXPECT_TRUE(check_submodular(f, SampledCheck{500, seed}).passed);
  }
}

TEST(CertifyRatioTest, FingerprintMismatchThrows) {
  CutOracle f(gen_er(12, 0.5, RngSeed{1}));
  CutOracle g(gen_er(12, 0.5, RngSeed{2}));
  const AlgorithmOutcome alg = standard_greedy(f, 2, ElementSet(12));
  const AlgorithmOutcome opt = brute_force_opt(g, 2);
  EXPECT_THROW(certify_ratio(alg, opt, 0.25), std::invalid_argument);
}

TEST(CertifyRatioTest, ZeroOptimumPasses) {
  FunctionOracle zero(8, [](const ElementSet&) { return 0.0; });
  const AlgorithmOutcome alg = standard_greedy(zero, 2, ElementSet(8));
  const AlgorithmOutcome opt = brute_force_opt(zero, 2);
  const RatioCertificate cert = certify_ratio(alg, opt, 0.25);
  EXPECT_TRUE(cert.passed);
  EXPECT_EQ(cert.achieved, 1.0);
}

TEST(CertifyRatioTest, MonotoneInRatioAndTolerance) {
  AlgorithmOutcome alg;
  AlgorithmOutcome opt;
  alg.value = 3.0;
  opt.value = 10.0;
  EXPECT_TRUE(certify_ratio(alg, opt, 0.3).passed);
  EXPECT_FALSE(certify_ratio(alg, opt, 0.31).passed);
  EXPECT_TRUE(certify_ratio(alg, opt, 0.31, 0.2).passed);
  EXPECT_DOUBLE_EQ(certify_ratio(alg, opt, 0.25).achieved, 0.3);
  EXPECT_NEAR(certify_ratio(alg, opt, 0.25, 0).margin, 0.5, 1e-12);
  for (double ratio = 0.0; ratio < 0.5; ratio += 0.01) {
    for (double tol : {0.0, 0.05, 0.5}) {
      if (certify_ratio(alg, opt, ratio + 0.01, tol).passed) {
        EXPECT_TRUE(certify_ratio(alg, opt, ratio, tol).passed);
      }
      if (certify_ratio(alg, opt, ratio, tol).passed) {
        EXPECT_TRUE(certify_ratio(alg, opt, ratio, tol + 0.1).passed);
      }
    }
  }
}

TEST(AuditQueryBoundTest, InterlaceLimit) {
  EXPECT_EQ(interlace_query_bound(64, 8).limit(), 4.0 * 8 * 64 + 2 * 64);
  CutOracle f(gen_er(64, 0.5, RngSeed{2}));
  const AlgorithmOutcome out = interlace_greedy(f, 8);
  const QueryAudit audit = audit_query_bound(out, interlace_query_bound(64, 8));
  EXPECT_TRUE(audit.passed);
  EXPECT_EQ(audit.limit, 2176.0);
  EXPECT_EQ(audit.queries, out.queries);
}

TEST(AuditQueryBoundTest, ThresholdLimitFormula) {
  const QueryBound bound = threshold_query_bound(0.5, 1000, 100, 0.1);
  EXPECT_NEAR(bound.limit(), 0.5 * 1000 / 0.1 * std::log(1000.0), 1e-6);
  AlgorithmOutcome out;
  out.queries = static_cast<std::uint64_t>(bound.limit()) + 1;
  EXPECT_FALSE(audit_query_bound(out, bound).passed);
}

TEST(InterlaceInvariantsTest, DetectsTamperedOutcome) {
  CutOracle f(gen_er(40, 0.4, RngSeed{5}));
  AlgorithmOutcome out = fast_interlace_greedy(f, 5, {0.1, false});
  ASSERT_EQ(check_interlace_invariants(out, f, f), std::nullopt);

  AlgorithmOutcome wrong_value = out;
  wrong_value.value += 1.0;
  EXPECT_TRUE(check_interlace_invariants(wrong_value, f, f).has_value());

  AlgorithmOutcome overlapping = out;
  overlapping.interlace->b.insert(*overlapping.interlace->first);
  EXPECT_TRUE(check_interlace_invariants(overlapping, f, f).has_value());

  AlgorithmOutcome rising = out;
  ASSERT_GE(rising.trace.size(), 3u);
  for (TraceEntry& e : rising.trace) {
    if (e.set == SetLabel::kA) e.threshold = -1.0;
  }
  rising.trace.back().set = SetLabel::kA;
  rising.trace.back().threshold = 1e9;
  EXPECT_TRUE(check_interlace_invariants(rising, f, f).has_value());
}

}  // namespace
}  // namespace submax
