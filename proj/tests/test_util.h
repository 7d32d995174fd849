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

// Independent reference computations for tests. Nothing here goes through the
// library's incremental oracle paths.

#ifndef SUBMAX_TESTS_TEST_UTIL_H_
#define SUBMAX_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "submax/element_set.h"
#include "submax/objectives.h"
#include "submax/oracle.h"

namespace submax::testing {

inline ElementSet set_of_mask(std::size_t n, std::uint64_t mask) {
  ElementSet s(n);
  for (Element x = 0; x < n; ++x) {
    if (mask >> x & 1) s.insert(x);
  }
  return s;
}

// Edge-by-edge cut on a bitmask; no adjacency, no ElementSet.
inline double naive_cut(const CutGraph& g, std::uint64_t mask) {
  double total = 0.0;
  for (const Edge& e : g.edges) {
    const bool in_u = mask >> e.u & 1;
    const bool in_v = mask >> e.v & 1;
    if (in_u != in_v) total += e.weight;
  }
  return total;
}

// max f(S) over all S ⊆ [n] with |S| <= k, by mask enumeration.
inline double enumerate_max(std::size_t n, std::size_t k,
                            const std::function<double(std::uint64_t)>& f) {
  double best = f(0);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) > k) continue;
    best = std::max(best, f(mask));
  }
  return best;
}

// Oracle that tallies its own evaluations, to cross-check CountingOracle.
class TallyingOracle : public SubmodularOracle {
 public:
  explicit TallyingOracle(CutGraph g) : cut_(std::move(g)) {}
  std::size_t ground_size() const override { return cut_.ground_size(); }
  double value(const ElementSet& s) const override {
    ++calls;
    return cut_.value(s);
  }
  double value_with(const ElementSet& s, Element x, double v) const override {
    ++calls;
    return cut_.value_with(s, x, v);
  }
  double value_without(const ElementSet& s, Element x,
                       double v) const override {
    ++calls;
    return cut_.value_without(s, x, v);
  }
  mutable std::uint64_t calls = 0;

 private:
  CutOracle cut_;
};

inline CutGraph star_graph(std::size_t leaves) {
  CutGraph g;
  g.n = leaves + 1;
  for (Element v = 1; v <= leaves; ++v) g.edges.push_back({0, v, 1.0});
  return g;
}

inline CutGraph path_graph(std::size_t n) {
  CutGraph g;
  g.n = n;
  for (Element v = 0; v + 1 < n; ++v) g.edges.push_back({v, v + 1, 1.0});
  return g;
}

}  // namespace submax::testing

#endif  // SUBMAX_TESTS_TEST_UTIL_H_
