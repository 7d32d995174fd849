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

// Instance generators and edge-list I/O. Every generator is a pure function of
// its parameters and seed.

#ifndef SUBMAX_INSTANCES_H_
#define SUBMAX_INSTANCES_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>

#include "submax/objectives.h"

namespace submax {

struct RngSeed {
  std::uint64_t value = 0;
};

// G(n, p): every unordered pair independently with probability p. Unit
// weights. Throws std::invalid_argument if p is outside [0, 1].
CutGraph gen_er(std::size_t n, double p, RngSeed seed);

// Preferential attachment from m isolated seed nodes. Node m attaches to all
// seeds; every later node attaches m edges to distinct earlier nodes chosen
// with probability proportional to degree. m * (n - m) edges. Throws
// std::invalid_argument unless 1 <= m <= n.
CutGraph gen_ba(std::size_t n, std::size_t m, RngSeed seed);

// Redraws every weight i.i.d. uniform on [lo, hi]. Topology is unchanged.
CutGraph random_weights(const CutGraph& graph, double lo, double hi,
                        RngSeed seed);

// Throws std::invalid_argument unless k >= 2 and k is even: the adversarial
// run splits O evenly, k/2 elements into each of A and B.
TightInstance gen_tight(std::size_t k);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& path, std::size_t line,
             const std::string& what);

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Whitespace-separated "u v [w]" per line; '#' lines and blank lines are
// skipped. Labels are remapped to [0, n): by numeric rank when every label
// is a nonnegative integer, otherwise in order of first appearance.
// Duplicate undirected edges keep the first weight; self-loops are dropped.
// Throws ParseError on a malformed line, std::runtime_error if the file
// cannot be opened.
CutGraph load_edge_list(const std::filesystem::path& path);

// Writes "u v w" lines, w with 17 significant digits. load_edge_list reads
// the result back with the same indices and weights, provided no node is
// isolated (isolated nodes have no line).
void write_edge_list(const CutGraph& graph, const std::filesystem::path& path);

}  // namespace submax

#endif  // SUBMAX_INSTANCES_H_
