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

#include "submax/experiment.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include "submax/algorithms.h"
#include "submax/instances.h"
#include "submax/objectives.h"

namespace submax {
namespace {

const char* const kAlgorithms[] = {"IG", "FIG", "Gupta", "FRG", "Greedy"};

std::string format_real(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.9g", v);
  return buffer;
}

std::string sanitize(std::string text) {
  for (char& c : text) {
    if (c == ',' || c == '"' || c == '\n' || c == ' ') c = '_';
  }
  return text;
}

struct Cell {
  std::size_t k;
  std::string algorithm;
  std::size_t trial;
};

void validate(const ExperimentConfig& config) {
  for (const std::string& name : config.algorithms) {
    if (std::find(std::begin(kAlgorithms), std::end(kAlgorithms), name) ==
        std::end(kAlgorithms)) {
      throw ConfigError("alg", "unknown algorithm \"" + name +
                                   "\" (expected IG, FIG, Gupta, FRG, Greedy)");
    }
  }
  if (!(config.delta > 0.0 && config.delta < 0.5)) {
    throw ConfigError("delta", "must lie in (0, 1/2)");
  }
  if (!(config.epsilon > 0.0 && config.epsilon < 1.0 / std::numbers::e)) {
    throw ConfigError("epsilon", "must lie in (0, 1/e)");
  }
  if (config.trials == 0) throw ConfigError("trials", "must be at least 1");
  if (config.threads == 0) throw ConfigError("threads", "must be at least 1");
  const InstanceSpec& spec = config.instance;
  if (spec.kind == InstanceKind::kEr && !(spec.p >= 0.0 && spec.p <= 1.0)) {
    throw ConfigError("p", "must lie in [0, 1]");
  }
  if (spec.kind == InstanceKind::kBa && (spec.m < 1 || spec.m > spec.n)) {
    throw ConfigError("m", "must lie in [1, n]");
  }
  if (spec.kind == InstanceKind::kEdgeList && spec.path.empty()) {
    throw ConfigError("path", "required for edge-list instances");
  }
  if (spec.kind == InstanceKind::kTight) {
    for (std::size_t k : config.k_grid) {
      if (k < 2 || k % 2 != 0) {
        throw ConfigError("k-grid", "tight instances need even k >= 2");
      }
    }
  }
  if (spec.weights && !(spec.weights->first <= spec.weights->second)) {
    throw ConfigError("weights", "needs lo <= hi");
  }
}

AlgorithmOutcome run_cell(const ExperimentConfig& config, const Cell& cell,
                          const OraclePtr& oracle, std::uint64_t seed) {
  const std::size_t n = oracle->ground_size();
  const std::string& name = cell.algorithm;
  if (name == "IG") {
    return run_with_extension(oracle, cell.k, interlace_greedy);
  }
  if (name == "FIG") {
    const FastInterlaceOptions options{config.delta, config.steal};
    return run_with_extension(
        oracle, cell.k, [&](const SubmodularOracle& f, std::size_t k) {
          return fast_interlace_greedy(f, k, options);
        });
  }
  if (cell.k > n) {
    throw ConfigError("k-grid", "k=" + std::to_string(cell.k) +
                                    " exceeds instance size " +
                                    std::to_string(n));
  }
  if (name == "Gupta") return gupta_iterated_greedy(*oracle, cell.k);
  if (name == "Greedy") return standard_greedy(*oracle, cell.k, ElementSet(n));
  return fast_random_greedy(*oracle, cell.k, config.epsilon, seed);
}

}  // namespace

bool is_randomized(const std::string& algorithm) { return algorithm == "FRG"; }

double round_to_9_digits(double v) {
  return std::strtod(format_real(v).c_str(), nullptr);
}

BuiltInstance build_instance(const InstanceSpec& spec, std::size_t k,
                             std::uint64_t seed) {
  std::ostringstream name;
  CutGraph graph;
  switch (spec.kind) {
    case InstanceKind::kTight: {
      const TightInstance tight = gen_tight(k);
      return {std::make_shared<TightOracle>(tight),
              "tight(k=" + std::to_string(k) + ")"};
    }
    case InstanceKind::kEr:
      graph = gen_er(spec.n, spec.p, RngSeed{seed});
      name << "er(n=" << spec.n << ";p=" << format_real(spec.p)
           << ";seed=" << seed;
      break;
    case InstanceKind::kBa:
      graph = gen_ba(spec.n, spec.m, RngSeed{seed});
      name << "ba(n=" << spec.n << ";m=" << spec.m << ";seed=" << seed;
      break;
    case InstanceKind::kEdgeList:
      graph = load_edge_list(spec.path);
      name << "edgelist(" << sanitize(spec.path.filename().string());
      break;
  }
  if (spec.weights) {
    graph = random_weights(graph, spec.weights->first, spec.weights->second,
                           RngSeed{hash_combine(seed, 0x77656967687473ULL)});
    name << ";w=" << format_real(spec.weights->first) << ".."
         << format_real(spec.weights->second);
  }
  name << ')';
  return {std::make_shared<CutOracle>(std::move(graph)), name.str()};
}

std::uint64_t trial_seed(std::uint64_t master, const std::string& algorithm,
                         const std::string& instance, std::size_t k,
                         std::size_t trial) {
  std::uint64_t h = hash_combine(master, hash_string(algorithm));
  h = hash_combine(h, hash_string(instance));
  h = hash_combine(h, k);
  return hash_combine(h, trial);
}

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config) {
  validate(config);
  std::vector<Cell> cells;
  for (std::size_t k : config.k_grid) {
    for (const std::string& name : config.algorithms) {
      const std::size_t trials = is_randomized(name) ? config.trials : 1;
      for (std::size_t t = 0; t < trials; ++t) cells.push_back({k, name, t});
    }
  }
  if (cells.empty()) return {};

  // Graph instances do not depend on k; build them once.
  std::map<std::size_t, BuiltInstance> instances;
  if (config.instance.kind == InstanceKind::kTight) {
    for (std::size_t k : config.k_grid) {
      instances.emplace(k, build_instance(config.instance, k, config.seed));
    }
  } else {
    BuiltInstance shared = build_instance(config.instance, 0, config.seed);
    for (std::size_t k : config.k_grid) instances.emplace(k, shared);
  }

  std::vector<ExperimentRecord> records(cells.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        const Cell& cell = cells[i];
        const BuiltInstance& instance = instances.at(cell.k);
        const std::uint64_t seed = trial_seed(
            config.seed, cell.algorithm, instance.descriptor, cell.k,
            cell.trial);
        const auto start = std::chrono::steady_clock::now();
        const AlgorithmOutcome outcome =
            run_cell(config, cell, instance.oracle, seed);
        const auto elapsed = std::chrono::steady_clock::now() - start;

        ExperimentRecord& r = records[i];
        r.algorithm = cell.algorithm;
        r.instance = instance.descriptor;
        r.n = instance.oracle->ground_size();
        r.k = cell.k;
        r.param = round_to_9_digits(cell.algorithm == "FIG"   ? config.delta
                                    : cell.algorithm == "FRG" ? config.epsilon
                                                              : 0.0);
        r.trial = cell.trial;
        r.seed = seed;
        r.value = round_to_9_digits(outcome.value);
        r.queries = outcome.queries;
        r.wall_ms =
            config.timing
                ? std::chrono::duration_cast<std::chrono::milliseconds>(elapsed)
                      .count()
                : 0;
        r.steal = cell.algorithm == "FIG" && config.steal;
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = cells.size();
      }
    }
  };

  const std::size_t threads = std::min(config.threads, cells.size());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

void write_csv(const std::vector<ExperimentRecord>& records,
               const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << kCsvHeader << '\n';
  for (const ExperimentRecord& r : records) {
    out << r.algorithm << ',' << r.instance << ',' << r.n << ',' << r.k << ','
        << format_real(r.param) << ',' << r.trial << ',' << r.seed << ','
        << format_real(r.value) << ',' << r.queries << ',' << r.wall_ms << ','
        << (r.steal ? "true" : "false") << '\n';
  }
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

namespace {

template <typename T>
T parse_field(const std::string& text, const std::string& path,
              std::size_t row, const char* field) {
  T v{};
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [end, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc() || end != last) {
    throw ParseError(path, row,
                     std::string("bad ") + field + " \"" + text + "\"");
  }
  return v;
}

}  // namespace

std::vector<ExperimentRecord> read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  const std::string name = path.string();
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw ParseError(name, 1, "missing or unexpected header");
  }
  std::vector<ExperimentRecord> records;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    if (fields.size() != 11) {
      throw ParseError(name, row, "expected 11 fields, found " +
                                      std::to_string(fields.size()));
    }
    ExperimentRecord r;
    r.algorithm = fields[0];
    r.instance = fields[1];
    r.n = parse_field<std::size_t>(fields[2], name, row, "n");
    r.k = parse_field<std::size_t>(fields[3], name, row, "k");
    r.param = parse_field<double>(fields[4], name, row, "param");
    r.trial = parse_field<std::size_t>(fields[5], name, row, "trial");
    r.seed = parse_field<std::uint64_t>(fields[6], name, row, "seed");
    r.value = parse_field<double>(fields[7], name, row, "value");
    r.queries = parse_field<std::uint64_t>(fields[8], name, row, "queries");
    r.wall_ms = parse_field<std::int64_t>(fields[9], name, row, "wall_ms");
    if (fields[10] == "true") {
      r.steal = true;
    } else if (fields[10] == "false") {
      r.steal = false;
    } else {
      throw ParseError(name, row, "bad steal \"" + fields[10] + "\"");
    }
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace submax
