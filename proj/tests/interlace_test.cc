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

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "submax/algorithms.h"
#include "submax/instances.h"
#include "submax/objectives.h"
#include "submax/suite.h"
#include "submax/verification.h"
#include "test_util.h"

namespace submax {
namespace {

using testing::naive_cut;

AlgorithmOutcome run_fig(const OraclePtr& f, std::size_t k, double delta,
                         bool steal = false) {
  return run_with_extension(f, k,
                            [=](const SubmodularOracle& g, std::size_t kk) {
                              return fast_interlace_greedy(g, kk,
                                                           {delta, steal});
                            });
}

// A slice of the shipped suite, brute-forced with bitmask enumeration rather
// than brute_force_opt so the optimum is computed independently.
struct Case {
  SuiteInstance instance;
  double opt;
};

std::vector<Case> small_cases() {
  std::vector<Case> cases;
  for (const SuiteInstance& inst : small_suite(7)) {
    const std::size_t n = inst.oracle->ground_size();
    const double opt = testing::enumerate_max(
        n, inst.k, [&](std::uint64_t mask) {
          return inst.oracle->value(testing::set_of_mask(n, mask));
        });
    cases.push_back({inst, opt});
  }
  return cases;
}

TEST(InterlaceGreedyTest, TightInstanceFollowsAdversarialTrajectory) {
  const OraclePtr f = std::make_shared<TightOracle>(gen_tight(8));
  const AlgorithmOutcome out = run_with_extension(f, 8, interlace_greedy);
  EXPECT_LE(out.value, 0.25 + 1.0 / 8 + 1e-9);
  EXPECT_NEAR(out.value, 0.25 + 1.0 / 8, 1e-9);
  ASSERT_TRUE(out.interlace.has_value());
  EXPECT_EQ(out.interlace->first, std::optional<Element>(0));
  EXPECT_TRUE(out.interlace->b.contains(TightInstance::b()));
}

TEST(InterlaceGreedyTest, QuarterOfOptimumOnSmallSuite) {
  for (const Case& c : small_cases()) {
    const AlgorithmOutcome out =
        run_with_extension(c.instance.oracle, c.instance.k, interlace_greedy);
    EXPECT_GE(out.value, 0.25 * c.opt - 1e-9) << c.instance.name;
    EXPECT_LE(out.solution.size(), c.instance.k);
    EXPECT_NEAR(out.value, c.instance.oracle->value(out.solution), 1e-9);
  }
}

TEST(InterlaceGreedyTest, BudgetOneReturnsBestSingleton) {
  const CutGraph g = gen_er(12, 0.5, RngSeed{5});
  CutOracle f(g);
  double best = 0;
  for (Element x = 0; x < 12; ++x) {
    best = std::max(best, naive_cut(g, std::uint64_t{1} << x));
  }
  const AlgorithmOutcome out = interlace_greedy(f, 1);
  EXPECT_EQ(out.value, best);
  EXPECT_EQ(out.solution.size(), 1u);
}

TEST(InterlaceGreedyTest, RejectsSmallGroundSet) {
  CutOracle f(gen_er(10, 0.5, RngSeed{1}));
  EXPECT_THROW(interlace_greedy(f, 3), std::invalid_argument);
}

TEST(InterlaceGreedyTest, QueryCeiling) {
  CutOracle f(gen_er(64, 0.5, RngSeed{3}));
  const AlgorithmOutcome out = interlace_greedy(f, 8);
  EXPECT_LE(out.queries, 4u * 8 * 64 + 2 * 64);
  EXPECT_TRUE(
      audit_query_bound(out, interlace_query_bound(64, 8)).passed);
}

TEST(AddAboveThresholdTest, FullSetOnlyDecaysThreshold) {
  CutOracle f(testing::star_graph(4));
  CountingOracle oracle(f);
  InterlaceState state(5, 1, 0.1, 4.0, 0.0);
  state[SetLabel::kA].members.insert(3);
  const AddResult r = add_above_threshold(oracle, state, SetLabel::kA,
                                          SetLabel::kB, 2, 4.0);
  EXPECT_EQ(r.resume, 0u);
  EXPECT_FALSE(r.added.has_value());
  EXPECT_DOUBLE_EQ(r.threshold, 0.9 * 4.0);
  EXPECT_EQ(oracle.count(), 0u);
}

TEST(AddAboveThresholdTest, StarCenterClearsMaximumThreshold) {
  // Center 0 has gain 4 = M from the empty set; leaves have gain 1.
  CutOracle f(testing::star_graph(4));
  CountingOracle oracle(f);
  InterlaceState state(5, 2, 0.1, 4.0, 0.0);
  const AddResult r = add_above_threshold(oracle, state, SetLabel::kA,
                                          SetLabel::kB, 0, 4.0);
  ASSERT_TRUE(r.added.has_value());
  EXPECT_EQ(*r.added, 0u);
  EXPECT_EQ(r.resume, 0u);
  EXPECT_EQ(r.threshold, 4.0);
  EXPECT_EQ(state[SetLabel::kA].value, 4.0);
  EXPECT_EQ(oracle.count(), 1u);
}

TEST(AddAboveThresholdTest, BelowStopThresholdDoesNothing) {
  CutOracle f(testing::star_graph(4));
  CountingOracle oracle(f);
  InterlaceState state(5, 2, 0.1, 4.0, 0.0);
  const double tiny = 0.5 * state.stop_threshold();
  const AddResult r = add_above_threshold(oracle, state, SetLabel::kA,
                                          SetLabel::kB, 3, tiny);
  EXPECT_FALSE(r.added.has_value());
  EXPECT_EQ(r.resume, 0u);
  EXPECT_EQ(r.threshold, tiny);
  EXPECT_EQ(oracle.count(), 0u);
  EXPECT_TRUE(state[SetLabel::kA].members.empty());
}

TEST(AddAboveThresholdTest, SkipsTheOtherSetAndWrapsAround) {
  CutOracle f(testing::star_graph(4));
  CountingOracle oracle(f);
  InterlaceState state(5, 2, 0.5, 4.0, 0.0);
  state[SetLabel::kB].members.insert(0);
  // Leaves have gain 1: the threshold halves 4 -> 2 -> 1 before one clears.
  const AddResult r = add_above_threshold(oracle, state, SetLabel::kA,
                                          SetLabel::kB, 3, 4.0);
  ASSERT_TRUE(r.added.has_value());
  EXPECT_EQ(*r.added, 1u);
  EXPECT_EQ(r.threshold, 1.0);
}

TEST(FastInterlaceGreedyTest, RejectsDeltaOutsideRange) {
  CutOracle f(gen_er(20, 0.5, RngSeed{1}));
  EXPECT_THROW(fast_interlace_greedy(f, 2, {0.0, false}),
               std::invalid_argument);
  EXPECT_THROW(fast_interlace_greedy(f, 2, {0.5, false}),
               std::invalid_argument);
  EXPECT_THROW(fast_interlace_greedy(f, 6, {0.1, false}),
               std::invalid_argument);
}

TEST(FastInterlaceGreedyTest, RatioOnSmallSuite) {
  for (const Case& c : small_cases()) {
    for (double delta : {0.05, 0.1}) {
      const AlgorithmOutcome out = run_fig(c.instance.oracle, c.instance.k,
                                           delta);
      EXPECT_GE(out.value, (1 - 6 * delta) / 4 * c.opt - 1e-9)
          << c.instance.name << " delta=" << delta;
      EXPECT_NEAR(out.value, c.instance.oracle->value(out.solution), 1e-9);
    }
  }
}

TEST(FastInterlaceGreedyTest, TightInstanceCeiling) {
  const OraclePtr f = std::make_shared<TightOracle>(gen_tight(8));
  const AlgorithmOutcome out = run_fig(f, 8, 0.1);
  EXPECT_LE(out.value, 0.25 + 1.0 / 8 + 1e-9);
  EXPECT_EQ(out.interlace->first, std::optional<Element>(0));
}

TEST(FastInterlaceGreedyTest, QueryGrowthFollowsCalibratedBound) {
  std::uint64_t previous = 0;
  for (std::size_t n : {256u, 512u, 1024u, 2048u, 4096u}) {
    const std::size_t k = n / 8;
    CutOracle f(gen_er(n, 0.5, RngSeed{kCalibrationSeed}));
    const AlgorithmOutcome out = fast_interlace_greedy(f, k, {0.1, false});
    const double limit =
        kThresholdQueryConstant * (n / 0.1) * std::log(k / 0.1);
    EXPECT_LE(static_cast<double>(out.queries), limit) << "n=" << n;
    if (previous) {
      EXPECT_LE(out.queries, 3 * previous) << "n=" << n;
    }
    previous = out.queries;
  }
}

TEST(FastInterlaceGreedyTest, InvariantsHoldOnTraces) {
  for (const Case& c : small_cases()) {
    const OraclePtr g = with_dummy_extension(c.instance.oracle, c.instance.k);
    const AlgorithmOutcome out =
        fast_interlace_greedy(*g, c.instance.k, {0.1, false});
    EXPECT_EQ(check_interlace_invariants(out, *g, *g), std::nullopt)
        << c.instance.name;
  }
  CutOracle big(random_weights(gen_ba(500, 5, RngSeed{2}), 1, 10,
                               RngSeed{3}));
  const AlgorithmOutcome out = fast_interlace_greedy(big, 60, {0.1, true});
  EXPECT_EQ(check_interlace_invariants(out, big, big), std::nullopt);
}

TEST(FastInterlaceGreedyTest, ZeroFunctionTerminates) {
  FunctionOracle zero(16, [](const ElementSet&) { return 0.0; });
  const AlgorithmOutcome out = fast_interlace_greedy(zero, 4, {0.1, true});
  EXPECT_EQ(out.value, 0.0);
  EXPECT_TRUE(out.solution.empty());
}

TEST(StealTest, NoPositiveGainsLeaveSolutionUnchanged) {
  // On a path, C = {0, 2} already cuts all of 0-1-2; adding 1 only loses.
  CutOracle f(testing::path_graph(3));
  CountingOracle oracle(f);
  const ElementSet c(3, {0, 2});
  const std::vector<ElementSet> pools = {ElementSet(3, {1})};
  const SubsetValue out = steal(oracle, c, f.value(c), pools);
  EXPECT_EQ(out.set, c);
  EXPECT_EQ(out.value, 2.0);
}

TEST(StealTest, EmptyCandidatePoolLeavesSolutionUnchanged) {
  CutOracle f(testing::star_graph(4));
  CountingOracle oracle(f);
  const ElementSet c(5, {1, 2});
  const std::vector<ElementSet> pools = {ElementSet(5, {1}),
                                         ElementSet(5, {2})};
  const StealLedger ledger = build_steal_ledger(oracle, c, f.value(c), pools);
  EXPECT_TRUE(ledger.adds.empty());
  const SubsetValue out = steal(oracle, c, f.value(c), pools);
  EXPECT_EQ(out.set, c);
}

TEST(StealTest, SwapsWeakElementForPooledHub) {
  // Node 1 is a hub over leaves 2..5 and also touches 0. C = {0} has value 1;
  // {1} has value 5, the best singleton by exhaustive evaluation.
  CutGraph g{6, {{0, 1, 1}, {1, 2, 1}, {1, 3, 1}, {1, 4, 1}, {1, 5, 1}}};
  double best = 0;
  Element hub = 0;
  for (Element x = 0; x < 6; ++x) {
    if (naive_cut(g, std::uint64_t{1} << x) > best) {
      best = naive_cut(g, std::uint64_t{1} << x);
      hub = x;
    }
  }
  ASSERT_EQ(hub, 1u);
  CutOracle f(g);
  CountingOracle oracle(f);
  const ElementSet c(6, {0});
  const std::vector<ElementSet> pools = {ElementSet(6, {0}),
                                         ElementSet(6, {1})};
  const SubsetValue out = steal(oracle, c, f.value(c), pools);
  EXPECT_EQ(out.set, ElementSet(6, {1}));
  EXPECT_EQ(out.value, best);
  // One drop, one add, one attempted swap.
  EXPECT_EQ(oracle.count(), 3u);
}

TEST(StealTest, LedgerIsSorted) {
  CutOracle f(gen_er(40, 0.3, RngSeed{4}));
  const AlgorithmOutcome fig = fast_interlace_greedy(f, 8, {0.1, false});
  CountingOracle oracle(f);
  const std::vector<ElementSet> pools = {fig.interlace->a, fig.interlace->b,
                                         fig.interlace->d, fig.interlace->e};
  const StealLedger ledger =
      build_steal_ledger(oracle, fig.solution, fig.value, pools);
  EXPECT_EQ(ledger.drops.size(), fig.solution.size());
  for (std::size_t i = 1; i < ledger.drops.size(); ++i) {
    EXPECT_LE(ledger.drops[i - 1].second, ledger.drops[i].second);
  }
  for (std::size_t i = 1; i < ledger.adds.size(); ++i) {
    EXPECT_GE(ledger.adds[i - 1].second, ledger.adds[i].second);
  }
  for (const auto& [x, gain] : ledger.adds) {
    EXPECT_FALSE(fig.solution.contains(x));
    EXPECT_NEAR(gain, f.value(fig.solution.with(x)) - fig.value, 1e-9);
  }
}

// Property: stealing never lowers the value and keeps |C| <= k.
TEST(StealTest, NeverDecreasesValue) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 40 + rng() % 80;
    const std::size_t k = 1 + rng() % (n / 4);
    const CutGraph g = rng() % 2 ? gen_er(n, 0.2, RngSeed{rng()})
                                 : gen_ba(n, 3, RngSeed{rng()});
    CutOracle f(g);
    const AlgorithmOutcome plain = fast_interlace_greedy(f, k, {0.1, false});
    const AlgorithmOutcome stolen = fast_interlace_greedy(f, k, {0.1, true});
    EXPECT_GE(stolen.value, plain.value - 1e-9);
    EXPECT_LE(stolen.solution.size(), k);
    EXPECT_NEAR(stolen.value, f.value(stolen.solution), 1e-9);
  }
}

}  // namespace
}  // namespace submax
