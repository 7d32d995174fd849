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

// Maximization of a nonnegative submodular function subject to |S| <= k.
//
// The interlaced algorithms grow two disjoint greedy solutions A and B in
// alternation, then repeat with D and E that share only the best singleton
// a_0. Each returns the best set seen. The threshold variant replaces the
// argmax scan with a decaying acceptance threshold per set and needs only
// O((n / delta) log(k / delta)) queries.
//
// Every algorithm counts its own queries; `queries` in the outcome excludes
// any evaluation a caller makes afterwards to double-check the value.

#ifndef SUBMAX_ALGORITHMS_H_
#define SUBMAX_ALGORITHMS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "submax/element_set.h"
#include "submax/oracle.h"

namespace submax {

enum class SetLabel { kA = 0, kB = 1, kD = 2, kE = 3 };

char label_char(SetLabel label);

// One selection made by an interlaced algorithm. For the argmax variant
// `threshold` is the selected gain itself.
struct TraceEntry {
  SetLabel set;
  Element element;
  double threshold;
  double gain;
};

// Final state of the four interlaced sets. `first` is a_0, the first element
// added to A; D and E were both seeded with it.
struct InterlaceSets {
  ElementSet a, b, d, e;
  std::optional<Element> first;
};

struct AlgorithmOutcome {
  ElementSet solution;
  double value = 0.0;
  std::uint64_t queries = 0;
  std::size_t k = 0;
  std::uint64_t fingerprint = 0;
  std::vector<TraceEntry> trace;
  std::optional<InterlaceSets> interlace;
};

// ---------------------------------------------------------------------------
// Interlaced greedy.

// Argmax interlacing. Requires n >= 4k (see run_with_extension); throws
// std::invalid_argument otherwise. At most 4kn + 2n queries.
AlgorithmOutcome interlace_greedy(const SubmodularOracle& oracle,
                                  std::size_t k);

// A set grown by the threshold procedure, with its current value and the
// scan state carried between calls to add_above_threshold.
struct GrowingSet {
  ElementSet members;
  double value = 0.0;
  double threshold = 0.0;
  std::size_t resume = 0;
  // f of each prefix, history[i] = f(first i + 1 members).
  std::vector<double> history;
};

struct InterlaceState {
  InterlaceState(std::size_t n, std::size_t k, double delta,
                 double max_singleton, double empty_value);

  std::size_t n;
  std::size_t k;
  double delta;
  double max_singleton;  // M
  std::array<GrowingSet, 4> sets;
  std::vector<TraceEntry> trace;

  GrowingSet& operator[](SetLabel label) {
    return sets[static_cast<int>(label)];
  }
  const GrowingSet& operator[](SetLabel label) const {
    return sets[static_cast<int>(label)];
  }
  // Thresholds below delta * M / n end the search.
  double stop_threshold() const {
    return delta * max_singleton / static_cast<double>(n);
  }
};

struct AddResult {
  std::size_t resume = 0;
  std::optional<Element> added;
  double threshold = 0.0;
};

// Adds to set `s` the first x >= resume (wrapping to 0 after each full sweep)
// with x outside sets `s` and `t` and f_x(s) >= threshold. After an
// unsuccessful sweep the threshold decays by (1 - delta); the search gives up
// once it drops below stop_threshold(). If `s` already holds k elements,
// returns immediately with the threshold decayed once and no queries.
AddResult add_above_threshold(CountingOracle& oracle, InterlaceState& state,
                              SetLabel s, SetLabel t, std::size_t resume,
                              double threshold);

struct FastInterlaceOptions {
  double delta = 0.1;
  // Run the post-processing exchange step on the returned set.
  bool steal = false;
};

// Threshold interlacing. Requires n >= 4k and 0 < delta < 1/2; throws
// std::invalid_argument otherwise.
AlgorithmOutcome fast_interlace_greedy(const SubmodularOracle& oracle,
                                       std::size_t k,
                                       const FastInterlaceOptions& options);

// Exchange candidates for the stealing step. `drops` holds (c, f(C) - f(C - c))
// for c in C, non-decreasing; `adds` holds (x, f(C + x) - f(C)) for pooled
// x outside C, non-increasing. Ties go to the smaller index.
struct StealLedger {
  std::vector<std::pair<Element, double>> drops;
  std::vector<std::pair<Element, double>> adds;
};

StealLedger build_steal_ledger(CountingOracle& oracle,
                               const ElementSet& solution, double value,
                               std::span<const ElementSet> pools);

struct SubsetValue {
  ElementSet set;
  double value = 0.0;
};

// Walks the ledger pairwise; whenever the i-th smallest drop loss is below
// the i-th largest add gain, swaps the two if that strictly increases f.
// Never decreases the value or the size bound of `solution`.
SubsetValue steal(CountingOracle& oracle, const ElementSet& solution,
                  double value, std::span<const ElementSet> pools);

// ---------------------------------------------------------------------------
// Baselines and the exact solver.

// Greedy over [n] minus `forbidden`, smallest index on ties. Stops early once
// the best gain is negative. Returns the best prefix.
AlgorithmOutcome standard_greedy(CountingOracle& oracle, std::size_t k,
                                 const ElementSet& forbidden);
AlgorithmOutcome standard_greedy(const SubmodularOracle& oracle,
                                 std::size_t k, const ElementSet& forbidden);

// Deterministic double greedy for unconstrained maximization over the
// subsets of `ground`, visiting elements in index order. 1/3-approximate.
SubsetValue double_greedy_usm(CountingOracle& oracle,
                              const ElementSet& ground);
ElementSet double_greedy_usm(const SubmodularOracle& oracle,
                             const ElementSet& ground);

// Greedy, then double greedy on its output, then a second greedy that avoids
// the first greedy's solution. Best of the three.
AlgorithmOutcome gupta_iterated_greedy(const SubmodularOracle& oracle,
                                       std::size_t k);

// Batch size per iteration: ceil(scale * (n / (k eps^2)) * ln(1/eps)).
std::size_t random_greedy_batch_size(std::size_t n, std::size_t k,
                                     double epsilon, double scale = 1.0);

// k rounds; each samples a batch of unselected elements without replacement
// and adds the best one if its gain is positive. Requires 0 < epsilon < 1/e.
AlgorithmOutcome fast_random_greedy(const SubmodularOracle& oracle,
                                    std::size_t k, double epsilon,
                                    std::uint64_t seed,
                                    double batch_scale = 1.0);

// Largest enumeration brute_force_opt accepts.
inline constexpr double kBruteForceLimit = 1e7;

// Exact optimum over all |S| <= k by enumeration, lexicographically smallest
// winner on ties. Throws std::invalid_argument if sum_{i<=k} C(n, i) exceeds
// kBruteForceLimit.
AlgorithmOutcome brute_force_opt(const SubmodularOracle& oracle,
                                 std::size_t k);

using Algorithm =
    std::function<AlgorithmOutcome(const SubmodularOracle&, std::size_t)>;

// Runs `algorithm` on the dummy extension of `oracle` to [max(n, 4k)] and
// maps the solution back to [n]. The outcome carries the fingerprint of the
// original oracle.
AlgorithmOutcome run_with_extension(const OraclePtr& oracle, std::size_t k,
                                    const Algorithm& algorithm);

}  // namespace submax

#endif  // SUBMAX_ALGORITHMS_H_
