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

// Benchmark harness: expands a configuration into (algorithm, k, trial) cells,
// runs them, and records one row per cell.

#ifndef SUBMAX_EXPERIMENT_H_
#define SUBMAX_EXPERIMENT_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "submax/oracle.h"

namespace submax {

// One benchmark row. `param` is delta for FIG, epsilon for FRG, 0 otherwise.
// `queries` is the algorithm's own tally; `wall_ms` is informational only.
struct ExperimentRecord {
  std::string algorithm;
  std::string instance;
  std::size_t n = 0;
  std::size_t k = 0;
  double param = 0.0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  double value = 0.0;
  std::uint64_t queries = 0;
  std::int64_t wall_ms = 0;
  bool steal = false;

  bool operator==(const ExperimentRecord&) const = default;
};

enum class InstanceKind { kEr, kBa, kEdgeList, kTight };

struct InstanceSpec {
  InstanceKind kind = InstanceKind::kEr;
  std::size_t n = 200;
  double p = 0.5;
  std::size_t m = 5;
  std::filesystem::path path;
  // When set, edge weights are redrawn uniformly from [first, second].
  std::optional<std::pair<double, double>> weights;
};

struct ExperimentConfig {
  // Any of "IG", "FIG", "Gupta", "FRG", "Greedy".
  std::vector<std::string> algorithms = {"FIG", "Gupta", "FRG"};
  InstanceSpec instance;
  std::vector<std::size_t> k_grid;
  double delta = 0.1;
  double epsilon = 0.3;
  std::size_t trials = 10;
  std::uint64_t seed = 1;
  bool steal = true;
  // With timing off every wall_ms is 0 and the CSV is byte-reproducible.
  bool timing = true;
  std::size_t threads = 1;
};

// A configuration problem; `field()` names the offending option.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

bool is_randomized(const std::string& algorithm);

// The oracle for `spec` at budget k (only tight instances depend on k) and a
// descriptor free of commas and quotes.
struct BuiltInstance {
  OraclePtr oracle;
  std::string descriptor;
};
BuiltInstance build_instance(const InstanceSpec& spec, std::size_t k,
                             std::uint64_t seed);

std::uint64_t trial_seed(std::uint64_t master, const std::string& algorithm,
                         const std::string& instance, std::size_t k,
                         std::size_t trial);

// Throws ConfigError on an invalid configuration. Records come back in
// configuration order (k, then algorithm, then trial) regardless of threads.
std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config);

inline constexpr const char* kCsvHeader =
    "algorithm,instance,n,k,param,trial,seed,value,queries,wall_ms,steal";

// Reals are written with 9 significant digits; run_experiment already rounds
// them that way, so write/read round-trips exactly.
void write_csv(const std::vector<ExperimentRecord>& records,
               const std::filesystem::path& path);
// Throws ParseError naming the row on malformed input.
std::vector<ExperimentRecord> read_csv(const std::filesystem::path& path);

double round_to_9_digits(double v);

}  // namespace submax

#endif  // SUBMAX_EXPERIMENT_H_
