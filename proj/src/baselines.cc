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
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "submax/algorithms.h"

namespace submax {

AlgorithmOutcome standard_greedy(CountingOracle& oracle, std::size_t k,
                                 const ElementSet& forbidden) {
  const std::size_t n = oracle.ground_size();
  if (k > n) {
    throw std::invalid_argument("budget k=" + std::to_string(k) +
                                " exceeds ground set size " +
                                std::to_string(n));
  }
  const std::uint64_t start = oracle.count();
  AlgorithmOutcome out;
  out.k = k;
  out.fingerprint = oracle.inner().fingerprint();

  ElementSet current(n);
  double value = oracle.evaluate(current);
  std::size_t best_length = 0;
  double best_value = value;
  for (std::size_t i = 0; i < k; ++i) {
    bool found = false;
    Element best = 0;
    double best_next = 0.0;
    for (Element x = 0; x < n; ++x) {
      if (current.contains(x) || forbidden.contains(x)) continue;
      const double v = oracle.evaluate_with(current, x, value);
      if (!found || v > best_next) {
        found = true;
        best = x;
        best_next = v;
      }
    }
    if (!found || best_next < value) break;
    current.insert(best);
    value = best_next;
    if (value > best_value) {
      best_value = value;
      best_length = current.size();
    }
  }

  out.solution = ElementSet(n, current.members().first(best_length));
  out.value = best_value;
  out.queries = oracle.count() - start;
  return out;
}

AlgorithmOutcome standard_greedy(const SubmodularOracle& f, std::size_t k,
                                 const ElementSet& forbidden) {
  CountingOracle oracle(f);
  return standard_greedy(oracle, k, forbidden);
}

SubsetValue double_greedy_usm(CountingOracle& oracle,
                              const ElementSet& ground) {
  const std::size_t n = oracle.ground_size();
  ElementSet x_set(n);
  ElementSet y_set(n);
  for (Element x : ground.sorted()) y_set.insert(x);
  double x_value = oracle.evaluate(x_set);
  double y_value = oracle.evaluate(y_set);
  for (Element x : ground.sorted()) {
    const double x_next = oracle.evaluate_with(x_set, x, x_value);
    const double y_next = oracle.evaluate_without(y_set, x, y_value);
    const double add_gain = x_next - x_value;
    const double drop_gain = y_next - y_value;
    if (add_gain >= drop_gain) {
      x_set.insert(x);
      x_value = x_next;
    } else {
      y_set.erase(x);
      y_value = y_next;
    }
  }
  return {x_set, x_value};
}

ElementSet double_greedy_usm(const SubmodularOracle& f,
                             const ElementSet& ground) {
  CountingOracle oracle(f);
  return double_greedy_usm(oracle, ground).set;
}

AlgorithmOutcome gupta_iterated_greedy(const SubmodularOracle& f,
                                       std::size_t k) {
  CountingOracle oracle(f);
  const std::size_t n = f.ground_size();
  AlgorithmOutcome first = standard_greedy(oracle, k, ElementSet(n));
  SubsetValue refined = double_greedy_usm(oracle, first.solution);
  AlgorithmOutcome second = standard_greedy(oracle, k, first.solution);

  AlgorithmOutcome out;
  out.k = k;
  out.fingerprint = f.fingerprint();
  out.solution = first.solution;
  out.value = first.value;
  if (refined.value > out.value) {
    out.solution = std::move(refined.set);
    out.value = refined.value;
  }
  if (second.value > out.value) {
    out.solution = std::move(second.solution);
    out.value = second.value;
  }
  out.queries = oracle.count();
  return out;
}

std::size_t random_greedy_batch_size(std::size_t n, std::size_t k,
                                     double epsilon, double scale) {
  if (k == 0) return 0;
  const double size = scale * (static_cast<double>(n) /
                               (static_cast<double>(k) * epsilon * epsilon)) *
                      std::log(1.0 / epsilon);
  return static_cast<std::size_t>(std::ceil(size));
}

AlgorithmOutcome fast_random_greedy(const SubmodularOracle& f, std::size_t k,
                                    double epsilon, std::uint64_t seed,
                                    double batch_scale) {
  const std::size_t n = f.ground_size();
  if (!(epsilon > 0.0 && epsilon < 1.0 / std::numbers::e)) {
    throw std::invalid_argument("epsilon must lie in (0, 1/e), got " +
                                std::to_string(epsilon));
  }
  if (k > n) {
    throw std::invalid_argument("budget k=" + std::to_string(k) +
                                " exceeds ground set size " +
                                std::to_string(n));
  }
  CountingOracle oracle(f);
  std::mt19937_64 rng(seed);

  AlgorithmOutcome out;
  out.k = k;
  out.fingerprint = f.fingerprint();

  ElementSet current(n);
  double value = oracle.evaluate(current);
  std::vector<Element> pool(n);
  for (Element x = 0; x < n; ++x) pool[x] = x;
  const std::size_t batch = random_greedy_batch_size(n, k, epsilon, batch_scale);

  for (std::size_t round = 0; round < k && !pool.empty(); ++round) {
    const std::size_t take = std::min(batch, pool.size());
    // Partial Fisher-Yates: pool[0, take) becomes a uniform sample.
    for (std::size_t i = 0; i < take; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
      std::swap(pool[i], pool[pick(rng)]);
    }
    bool found = false;
    std::size_t best_slot = 0;
    double best_value = 0.0;
    for (std::size_t i = 0; i < take; ++i) {
      const double v = oracle.evaluate_with(current, pool[i], value);
      if (!found || v > best_value ||
          (v == best_value && pool[i] < pool[best_slot])) {
        found = true;
        best_slot = i;
        best_value = v;
      }
    }
    if (found && best_value > value) {
      current.insert(pool[best_slot]);
      value = best_value;
      pool[best_slot] = pool.back();
      pool.pop_back();
    }
  }

  out.solution = std::move(current);
  out.value = value;
  out.queries = oracle.count();
  return out;
}

AlgorithmOutcome brute_force_opt(const SubmodularOracle& f, std::size_t k) {
  const std::size_t n = f.ground_size();
  k = std::min(k, n);
  double total = 0.0;
  double term = 1.0;
  for (std::size_t i = 0; i <= k; ++i) {
    total += term;
    term = term * static_cast<double>(n - i) / static_cast<double>(i + 1);
  }
  if (total > kBruteForceLimit) {
    throw std::invalid_argument(
        "brute force over n=" + std::to_string(n) + ", k=" +
        std::to_string(k) + " needs " + std::to_string(total) +
        " evaluations, above the limit of " +
        std::to_string(kBruteForceLimit));
  }

  CountingOracle oracle(f);
  AlgorithmOutcome out;
  out.k = k;
  out.fingerprint = f.fingerprint();

  ElementSet current(n);
  std::vector<Element> stack;
  std::vector<double> values;
  out.value = oracle.evaluate(current);
  out.solution = current;
  // Depth-first in lexicographic order of sorted tuples; strict improvement
  // keeps the lexicographically smallest optimum.
  values.push_back(out.value);
  Element next = 0;
  while (true) {
    if (stack.size() < k && next < n) {
      const double v = oracle.evaluate_with(current, next, values.back());
      current.insert(next);
      stack.push_back(next);
      values.push_back(v);
      if (v > out.value) {
        out.value = v;
        out.solution = current;
      }
      ++next;
      continue;
    }
    if (stack.empty()) break;
    const Element last = stack.back();
    stack.pop_back();
    values.pop_back();
    current.erase(last);
    next = last + 1;
  }

  out.queries = oracle.count();
  return out;
}

AlgorithmOutcome run_with_extension(const OraclePtr& oracle, std::size_t k,
                                    const Algorithm& algorithm) {
  const std::size_t n = oracle->ground_size();
  const OraclePtr extended = with_dummy_extension(oracle, k);
  AlgorithmOutcome out = algorithm(*extended, k);
  out.solution = map_back(out.solution, n);
  out.fingerprint = oracle->fingerprint();
  return out;
}

}  // namespace submax
