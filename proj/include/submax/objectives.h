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

// Concrete objectives: graph cut (unweighted and weighted) and the tight
// family on which interlaced greedy cannot beat ratio 1/4 + 1/k.

#ifndef SUBMAX_OBJECTIVES_H_
#define SUBMAX_OBJECTIVES_H_

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "submax/element_set.h"
#include "submax/oracle.h"

namespace submax {

struct Edge {
  Element u;
  Element v;
  double weight = 1.0;

  bool operator==(const Edge&) const = default;
};

// Undirected graph on nodes [n]. No self-loops, weights >= 0.
struct CutGraph {
  std::size_t n = 0;
  std::vector<Edge> edges;

  // Throws std::invalid_argument on a self-loop, out-of-range endpoint, or
  // negative weight.
  void validate() const;
  std::uint64_t fingerprint() const;
};

// Total weight of edges with exactly one endpoint in `set`.
double cut_value(const CutGraph& graph, const ElementSet& set);
// f(S) = sum over u in S, v not in S of w(u, v), each undirected edge counted
// once. Identical to cut_value; kept as the network-monitoring entry point.
double weighted_cut_value(const CutGraph& graph, const ElementSet& set);

// Cut objective with adjacency lists, so that f(S + x) given f(S) costs
// O(deg x).
class CutOracle : public SubmodularOracle {
 public:
  explicit CutOracle(CutGraph graph);

  std::size_t ground_size() const override { return graph_.n; }
  double value(const ElementSet& set) const override;
  double value_with(const ElementSet& set, Element x,
                    double value_of_set) const override;
  double value_without(const ElementSet& set, Element x,
                       double value_of_set) const override;
  std::uint64_t fingerprint() const override { return fingerprint_; }

  const CutGraph& graph() const { return graph_; }

 private:
  // Sum over edges (x, v) of +w if v is outside `set`, -w if inside.
  double swing(const ElementSet& set, Element x) const;

  CutGraph graph_;
  std::vector<std::vector<std::pair<Element, double>>> adjacency_;
  std::uint64_t fingerprint_;
};

// Ground set [2k + 2] split as a = 0, b = 1, O = {2, ..., k + 1},
// D = {k + 2, ..., 2k + 1}. Placing a and b first makes smallest-index
// tie-breaking pick a_0 = a and b_0 = b.
struct TightInstance {
  std::size_t k = 0;

  std::size_t ground_size() const { return 2 * k + 2; }
  static constexpr Element a() { return 0; }
  static constexpr Element b() { return 1; }
  bool in_optimum(Element x) const { return x >= 2 && x < k + 2; }
  bool in_padding(Element x) const { return x >= k + 2 && x < 2 * k + 2; }
  ElementSet optimum() const;
};

// 0 if a and b are both in S; |S ∩ O| / 2k + 1/k if exactly one is;
// |S ∩ O| / k otherwise.
double tight_value(const TightInstance& instance, const ElementSet& set);

class TightOracle : public SubmodularOracle {
 public:
  explicit TightOracle(TightInstance instance) : instance_(instance) {}

  std::size_t ground_size() const override { return instance_.ground_size(); }
  double value(const ElementSet& set) const override {
    return tight_value(instance_, set);
  }
  std::uint64_t fingerprint() const override;

  const TightInstance& instance() const { return instance_; }

 private:
  TightInstance instance_;
};

class CountingOracle;

// argmax_x f({x}) and its value, smallest index on ties. Exactly n queries.
std::pair<Element, double> max_singleton(CountingOracle& oracle);

}  // namespace submax

#endif  // SUBMAX_OBJECTIVES_H_
