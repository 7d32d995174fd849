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

#include "submax/objectives.h"

#include <stdexcept>
#include <string>

namespace submax {

void CutGraph::validate() const {
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + ", " +
                                  std::to_string(e.v) +
                                  ") outside node range " + std::to_string(n));
    }
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at node " + std::to_string(e.u));
    }
    if (!(e.weight >= 0.0)) {
      throw std::invalid_argument("negative edge weight");
    }
  }
}

std::uint64_t CutGraph::fingerprint() const {
  std::uint64_t h = hash_combine(hash_string("cut"), n);
  for (const Edge& e : edges) {
    h = hash_combine(h, e.u);
    h = hash_combine(h, e.v);
    h = hash_combine(h, static_cast<std::uint64_t>(e.weight * 1e6));
  }
  return h;
}

double cut_value(const CutGraph& graph, const ElementSet& set) {
  double total = 0.0;
  for (const Edge& e : graph.edges) {
    if (set.contains(e.u) != set.contains(e.v)) total += e.weight;
  }
  return total;
}

double weighted_cut_value(const CutGraph& graph, const ElementSet& set) {
  return cut_value(graph, set);
}

CutOracle::CutOracle(CutGraph graph)
    : graph_(std::move(graph)), adjacency_(graph_.n) {
  graph_.validate();
  for (const Edge& e : graph_.edges) {
    adjacency_[e.u].emplace_back(e.v, e.weight);
    adjacency_[e.v].emplace_back(e.u, e.weight);
  }
  fingerprint_ = graph_.fingerprint();
}

double CutOracle::value(const ElementSet& set) const {
  double total = 0.0;
  for (Element u : set) {
    for (const auto& [v, w] : adjacency_[u]) {
      if (!set.contains(v)) total += w;
    }
  }
  return total;
}

double CutOracle::swing(const ElementSet& set, Element x) const {
  double delta = 0.0;
  for (const auto& [v, w] : adjacency_[x]) {
    delta += set.contains(v) ? -w : w;
  }
  return delta;
}

double CutOracle::value_with(const ElementSet& set, Element x,
                             double value_of_set) const {
  if (set.contains(x)) return value_of_set;
  return value_of_set + swing(set, x);
}

double CutOracle::value_without(const ElementSet& set, Element x,
                                double value_of_set) const {
  if (!set.contains(x)) return value_of_set;
  // No self-loops, so x's own membership does not enter the swing.
  return value_of_set - swing(set, x);
}

ElementSet TightInstance::optimum() const {
  ElementSet out(ground_size());
  for (Element x = 2; x < k + 2; ++x) out.insert(x);
  return out;
}

double tight_value(const TightInstance& instance, const ElementSet& set) {
  const bool has_a = set.contains(TightInstance::a());
  const bool has_b = set.contains(TightInstance::b());
  if (has_a && has_b) return 0.0;
  std::size_t in_optimum = 0;
  for (Element x : set) {
    if (instance.in_optimum(x)) ++in_optimum;
  }
  const double k = static_cast<double>(instance.k);
  if (has_a || has_b) return in_optimum / (2.0 * k) + 1.0 / k;
  return in_optimum / k;
}

std::uint64_t TightOracle::fingerprint() const {
  return hash_combine(hash_string("tight"), instance_.k);
}

std::pair<Element, double> max_singleton(CountingOracle& oracle) {
  const std::size_t n = oracle.ground_size();
  if (n == 0) throw std::invalid_argument("max_singleton on empty ground set");
  Element best = 0;
  double best_value = 0.0;
  ElementSet singleton(n);
  for (Element x = 0; x < n; ++x) {
    singleton.insert(x);
    const double v = oracle.evaluate(singleton);
    singleton.erase(x);
    if (x == 0 || v > best_value) {
      best = x;
      best_value = v;
    }
  }
  return {best, best_value};
}

}  // namespace submax
