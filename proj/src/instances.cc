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

#include "submax/instances.h"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace submax {

CutGraph gen_er(std::size_t n, double p, RngSeed seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed.value);
  std::bernoulli_distribution coin(p);
  CutGraph graph;
  graph.n = n;
  for (Element u = 0; u < n; ++u) {
    for (Element v = u + 1; v < n; ++v) {
      if (coin(rng)) graph.edges.push_back({u, v, 1.0});
    }
  }
  return graph;
}

CutGraph gen_ba(std::size_t n, std::size_t m, RngSeed seed) {
  if (m < 1 || m > n) {
    throw std::invalid_argument("BA attachment count m=" + std::to_string(m) +
                                " must lie in [1, n=" + std::to_string(n) +
                                "]");
  }
  std::mt19937_64 rng(seed.value);
  CutGraph graph;
  graph.n = n;
  graph.edges.reserve(m * (n - m));
  // Each node appears once per incident edge, so a uniform draw from
  // `endpoints` is a degree-proportional draw over nodes.
  std::vector<Element> endpoints;
  endpoints.reserve(2 * m * (n - m));
  std::vector<Element> targets;
  std::vector<std::uint8_t> chosen(n, 0);
  for (Element node = m; node < n; ++node) {
    targets.clear();
    if (node == m) {
      for (Element seed_node = 0; seed_node < m; ++seed_node) {
        targets.push_back(seed_node);
      }
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, endpoints.size() - 1);
      while (targets.size() < m) {
        const Element candidate = endpoints[pick(rng)];
        if (chosen[candidate]) continue;
        chosen[candidate] = 1;
        targets.push_back(candidate);
      }
      for (Element t : targets) chosen[t] = 0;
    }
    for (Element t : targets) {
      graph.edges.push_back({t, node, 1.0});
      endpoints.push_back(t);
      endpoints.push_back(node);
    }
  }
  return graph;
}

CutGraph random_weights(const CutGraph& graph, double lo, double hi,
                        RngSeed seed) {
  if (!(lo <= hi)) throw std::invalid_argument("weight range needs lo <= hi");
  CutGraph out = graph;
  std::mt19937_64 rng(seed.value);
  std::uniform_real_distribution<double> draw(lo, hi);
  for (Edge& e : out.edges) e.weight = lo == hi ? lo : draw(rng);
  return out;
}

TightInstance gen_tight(std::size_t k) {
  if (k < 2 || k % 2 != 0) {
    throw std::invalid_argument(
        "tight instances need an even k >= 2 so that O splits into k/2 "
        "elements for each of A and B (got k=" +
        std::to_string(k) + ")");
  }
  return TightInstance{k};
}

ParseError::ParseError(const std::string& path, std::size_t line,
                       const std::string& what)
    : std::runtime_error(path + ":" + std::to_string(line) + ": " + what),
      line_(line) {}

namespace {

struct RawEdge {
  std::string u;
  std::string v;
  double weight;
};

bool parse_unsigned(const std::string& text, std::uint64_t& out) {
  if (text.empty() || text.size() > 19) return false;
  out = 0;
  for (char c : text) {
    if (c < '0' || c > '9') return false;
    out = out * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return true;
}

}  // namespace

CutGraph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());

  std::vector<RawEdge> raw;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    RawEdge edge{"", "", 1.0};
    std::string w_text, extra;
    fields >> edge.u >> edge.v;
    if (edge.v.empty()) {
      throw ParseError(path.string(), line_number, "expected \"u v [w]\"");
    }
    if (fields >> w_text) {
      std::size_t used = 0;
      try {
        edge.weight = std::stod(w_text, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != w_text.size() || !(edge.weight >= 0.0)) {
        throw ParseError(path.string(), line_number,
                         "bad weight \"" + w_text + "\"");
      }
      if (fields >> extra) {
        throw ParseError(path.string(), line_number, "trailing field");
      }
    }
    raw.push_back(std::move(edge));
  }

  // Integer labels map to their rank, so files written by write_edge_list
  // keep their indices; anything else maps in order of first appearance.
  std::unordered_map<std::string, Element> labels;
  std::vector<std::pair<std::uint64_t, std::string>> numeric;
  bool all_numeric = true;
  for (const RawEdge& e : raw) {
    for (const std::string* label : {&e.u, &e.v}) {
      if (!labels.try_emplace(*label, labels.size()).second) continue;
      std::uint64_t id = 0;
      if (all_numeric && parse_unsigned(*label, id)) {
        numeric.emplace_back(id, *label);
      } else {
        all_numeric = false;
      }
    }
  }
  if (all_numeric) {
    std::sort(numeric.begin(), numeric.end());
    for (std::size_t rank = 0; rank < numeric.size(); ++rank) {
      labels[numeric[rank].second] = rank;
    }
  }

  CutGraph graph;
  graph.n = labels.size();
  std::unordered_set<std::uint64_t> seen;
  for (const RawEdge& e : raw) {
    const Element u = labels.at(e.u);
    const Element v = labels.at(e.v);
    if (u == v) continue;
    const std::uint64_t key =
        (static_cast<std::uint64_t>(std::min(u, v)) << 32) | std::max(u, v);
    if (!seen.insert(key).second) continue;
    graph.edges.push_back({u, v, e.weight});
  }
  return graph;
}

void write_edge_list(const CutGraph& graph, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  // Isolated nodes have no line of their own; a header keeps the count.
  out << "# nodes " << graph.n << " edges " << graph.edges.size() << '\n';
  out << std::setprecision(17);
  for (const Edge& e : graph.edges) {
    out << e.u << ' ' << e.v << ' ' << e.weight << '\n';
  }
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace submax
