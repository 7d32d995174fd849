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

#include <algorithm>
#include <stdexcept>
#include <string>

#include "submax/algorithms.h"
#include "submax/objectives.h"

namespace submax {
namespace {

void require_room(std::size_t n, std::size_t k) {
  if (4 * k > n) {
    throw std::invalid_argument(
        "interlaced algorithms need n >= 4k (got n=" + std::to_string(n) +
        ", k=" + std::to_string(k) + "); apply with_dummy_extension first");
  }
}

// One argmax step of the interlaced greedy: adds to `s` the element outside
// `s` and `t` with the largest f_x(s). Returns false if nothing is left.
bool argmax_step(CountingOracle& oracle, GrowingSet& s, const ElementSet& t,
                 SetLabel label, std::vector<TraceEntry>& trace) {
  const std::size_t n = oracle.ground_size();
  bool found = false;
  Element best = 0;
  double best_value = 0.0;
  for (Element x = 0; x < n; ++x) {
    if (s.members.contains(x) || t.contains(x)) continue;
    const double v = oracle.evaluate_with(s.members, x, s.value);
    if (!found || v > best_value) {
      found = true;
      best = x;
      best_value = v;
    }
  }
  if (!found) return false;
  const double gain = best_value - s.value;
  s.members.insert(best);
  s.value = best_value;
  s.history.push_back(best_value);
  trace.push_back({label, best, gain, gain});
  return true;
}

ElementSet prefix_of(const ElementSet& set, std::size_t length,
                     std::size_t universe) {
  return ElementSet(universe, set.members().first(length));
}

}  // namespace

char label_char(SetLabel label) {
  switch (label) {
    case SetLabel::kA:
      return 'A';
    case SetLabel::kB:
      return 'B';
    case SetLabel::kD:
      return 'D';
    case SetLabel::kE:
      return 'E';
  }
  return '?';
}

AlgorithmOutcome interlace_greedy(const SubmodularOracle& f, std::size_t k) {
  const std::size_t n = f.ground_size();
  require_room(n, k);
  CountingOracle oracle(f);

  AlgorithmOutcome out;
  out.k = k;
  out.fingerprint = f.fingerprint();

  const double empty_value = oracle.evaluate(ElementSet(n));
  GrowingSet a{ElementSet(n), empty_value, 0.0, 0, {}};
  GrowingSet b = a;
  for (std::size_t i = 0; i < k; ++i) {
    argmax_step(oracle, a, b.members, SetLabel::kA, out.trace);
    argmax_step(oracle, b, a.members, SetLabel::kB, out.trace);
  }

  GrowingSet d{ElementSet(n), empty_value, 0.0, 0, {}};
  GrowingSet e = d;
  std::optional<Element> first;
  if (!a.members.empty()) {
    first = a.members.members().front();
    d.members.insert(*first);
    d.value = a.history.front();
    d.history.push_back(d.value);
    e = d;
    for (std::size_t i = 1; i < k; ++i) {
      argmax_step(oracle, d, e.members, SetLabel::kD, out.trace);
      argmax_step(oracle, e, d.members, SetLabel::kE, out.trace);
    }
  }

  // Best prefix of any of the four sets. A_0 = B_0 = {} stands for f({}).
  const GrowingSet* best_set = &a;
  std::size_t best_length = 0;
  double best_value = empty_value;
  for (const GrowingSet* s : {&a, &b, &d, &e}) {
    for (std::size_t i = 0; i < s->history.size(); ++i) {
      if (s->history[i] > best_value) {
        best_value = s->history[i];
        best_set = s;
        best_length = i + 1;
      }
    }
  }

  out.solution = prefix_of(best_set->members, best_length, n);
  out.value = best_value;
  out.queries = oracle.count();
  out.interlace = InterlaceSets{a.members, b.members, d.members, e.members,
                                first};
  return out;
}

InterlaceState::InterlaceState(std::size_t n, std::size_t k, double delta,
                               double max_singleton, double empty_value)
    : n(n), k(k), delta(delta), max_singleton(max_singleton) {
  for (GrowingSet& s : sets) {
    s.members = ElementSet(n);
    s.value = empty_value;
    s.threshold = max_singleton;
    s.resume = 0;
  }
}

AddResult add_above_threshold(CountingOracle& oracle, InterlaceState& state,
                              SetLabel s_label, SetLabel t_label,
                              std::size_t resume, double threshold) {
  GrowingSet& s = state[s_label];
  const ElementSet& t = state[t_label].members;
  if (s.members.size() >= state.k) {
    return {0, std::nullopt, (1.0 - state.delta) * threshold};
  }
  const double stop = state.stop_threshold();
  std::size_t start = resume;
  while (threshold >= stop) {
    for (Element x = start; x < state.n; ++x) {
      // Members of s have gain 0 and are skipped without a query.
      if (t.contains(x) || s.members.contains(x)) continue;
      const double v = oracle.evaluate_with(s.members, x, s.value);
      const double gain = v - s.value;
      if (gain >= threshold) {
        s.members.insert(x);
        s.value = v;
        s.history.push_back(v);
        state.trace.push_back({s_label, x, threshold, gain});
        return {x, x, threshold};
      }
    }
    threshold *= 1.0 - state.delta;
    start = 0;
  }
  return {0, std::nullopt, threshold};
}

namespace {

// Alternates add_above_threshold on (s, t) and (t, s) until both thresholds
// fall below the stop value or both sets are full.
void interlace_thresholds(CountingOracle& oracle, InterlaceState& state,
                          SetLabel s_label, SetLabel t_label) {
  GrowingSet& s = state[s_label];
  GrowingSet& t = state[t_label];
  const double stop = state.stop_threshold();
  while ((s.threshold >= stop || t.threshold >= stop) &&
         !(s.members.size() >= state.k && t.members.size() >= state.k)) {
    AddResult r =
        add_above_threshold(oracle, state, s_label, t_label, s.resume,
                            s.threshold);
    s.resume = r.resume;
    s.threshold = r.threshold;
    r = add_above_threshold(oracle, state, t_label, s_label, t.resume,
                            t.threshold);
    t.resume = r.resume;
    t.threshold = r.threshold;
  }
}

}  // namespace

AlgorithmOutcome fast_interlace_greedy(const SubmodularOracle& f,
                                       std::size_t k,
                                       const FastInterlaceOptions& options) {
  const std::size_t n = f.ground_size();
  if (!(options.delta > 0.0 && options.delta < 0.5)) {
    throw std::invalid_argument("delta must lie in (0, 1/2), got " +
                                std::to_string(options.delta));
  }
  require_room(n, k);
  CountingOracle oracle(f);

  AlgorithmOutcome out;
  out.k = k;
  out.fingerprint = f.fingerprint();

  const double empty_value = oracle.evaluate(ElementSet(n));
  if (k == 0 || n == 0) {
    out.solution = ElementSet(n);
    out.value = empty_value;
    out.queries = oracle.count();
    return out;
  }

  const double max_value = max_singleton(oracle).second;
  InterlaceState state(n, k, options.delta, max_value, empty_value);

  // With M <= 0 every threshold equals the stop value 0 and never decays.
  const bool searchable = max_value > 0.0;
  if (searchable) {
    interlace_thresholds(oracle, state, SetLabel::kA, SetLabel::kB);
  }

  std::optional<Element> first;
  const GrowingSet& a = state[SetLabel::kA];
  if (!a.members.empty()) {
    first = a.members.members().front();
    for (SetLabel label : {SetLabel::kD, SetLabel::kE}) {
      GrowingSet& s = state[label];
      s.members.insert(*first);
      s.value = a.history.front();
      s.history.push_back(s.value);
      s.threshold = max_value;
      s.resume = 0;
    }
    interlace_thresholds(oracle, state, SetLabel::kD, SetLabel::kE);
  }

  const std::array<SetLabel, 4> order = {SetLabel::kA, SetLabel::kB,
                                         SetLabel::kD, SetLabel::kE};
  const GrowingSet* best = &state[SetLabel::kA];
  for (SetLabel label : order) {
    const GrowingSet& s = state[label];
    if (label >= SetLabel::kD && !first) continue;
    if (s.value > best->value) best = &s;
  }
  out.solution = best->members;
  out.value = best->value;

  const std::array<ElementSet, 4> pools = {
      state[SetLabel::kA].members, state[SetLabel::kB].members,
      state[SetLabel::kD].members, state[SetLabel::kE].members};
  if (options.steal) {
    SubsetValue stolen = steal(oracle, out.solution, out.value, pools);
    out.solution = std::move(stolen.set);
    out.value = stolen.value;
  }

  out.queries = oracle.count();
  out.trace = std::move(state.trace);
  out.interlace = InterlaceSets{pools[0], pools[1], pools[2], pools[3], first};
  return out;
}

StealLedger build_steal_ledger(CountingOracle& oracle,
                               const ElementSet& solution, double value,
                               std::span<const ElementSet> pools) {
  StealLedger ledger;
  for (Element c : solution) {
    const double without = oracle.evaluate_without(solution, c, value);
    ledger.drops.emplace_back(c, value - without);
  }
  ElementSet seen(oracle.ground_size());
  for (const ElementSet& pool : pools) {
    for (Element x : pool) {
      if (solution.contains(x) || !seen.insert(x)) continue;
      const double with = oracle.evaluate_with(solution, x, value);
      ledger.adds.emplace_back(x, with - value);
    }
  }
  std::sort(ledger.drops.begin(), ledger.drops.end(),
            [](const auto& l, const auto& r) {
              return l.second < r.second ||
                     (l.second == r.second && l.first < r.first);
            });
  std::sort(ledger.adds.begin(), ledger.adds.end(),
            [](const auto& l, const auto& r) {
              return l.second > r.second ||
                     (l.second == r.second && l.first < r.first);
            });
  return ledger;
}

SubsetValue steal(CountingOracle& oracle, const ElementSet& solution,
                  double value, std::span<const ElementSet> pools) {
  const StealLedger ledger =
      build_steal_ledger(oracle, solution, value, pools);
  SubsetValue current{solution, value};
  const std::size_t pairs = std::min(ledger.drops.size(), ledger.adds.size());
  for (std::size_t i = 0; i < pairs; ++i) {
    const auto& [c, loss] = ledger.drops[i];
    const auto& [x, gain] = ledger.adds[i];
    if (!(loss < gain)) continue;
    ElementSet candidate = current.set.without(c);
    candidate.insert(x);
    const double v = oracle.evaluate(candidate);
    if (v > current.value) {
      current.set = std::move(candidate);
      current.value = v;
    }
  }
  return current;
}

}  // namespace submax
