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

// Command-line front end:
//   submax_cli run --alg FIG,Gupta --instance er --n 1000 --k-grid 10,20
//       --out results.csv
//   submax_cli verify
//   submax_cli tight --k 32

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "submax/algorithms.h"
#include "submax/experiment.h"
#include "submax/instances.h"
#include "submax/objectives.h"
#include "submax/suite.h"

namespace {

constexpr int kUsageExit = 2;

struct RunFlags {
  std::vector<std::string> algorithms = {"FIG", "Gupta", "FRG"};
  std::string instance = "er";
  std::vector<double> weights;
  std::string steal = "on";
  std::string timing = "on";
  std::string out;
  std::string config;
};

void add_run_options(CLI::App& run, submax::ExperimentConfig& config,
                     RunFlags& flags) {
  run.add_option("--alg", flags.algorithms,
                 "Algorithms: IG, FIG, Gupta, FRG, Greedy")
      ->delimiter(',')
      ->capture_default_str();
  run.add_option("--instance", flags.instance, "Instance family")
      ->check(CLI::IsMember({"er", "ba", "edgelist", "tight"}))
      ->capture_default_str();
  run.add_option("--n", config.instance.n, "Nodes (er, ba)")
      ->capture_default_str();
  run.add_option("--p", config.instance.p, "Edge probability (er)")
      ->capture_default_str();
  run.add_option("--m", config.instance.m, "Attachment count (ba)")
      ->capture_default_str();
  run.add_option("--path", config.instance.path, "Edge list file (edgelist)");
  run.add_option("--weights", flags.weights,
                 "Redraw edge weights uniformly from LO,HI")
      ->delimiter(',')
      ->expected(2);
  run.add_option("--k-grid", config.k_grid, "Budgets, comma separated")
      ->delimiter(',');
  run.add_option("--delta", config.delta, "FIG threshold decay")
      ->capture_default_str();
  run.add_option("--epsilon", config.epsilon, "FRG accuracy")
      ->capture_default_str();
  run.add_option("--trials", config.trials, "Trials per randomized cell")
      ->capture_default_str();
  run.add_option("--seed", config.seed, "Master seed")->capture_default_str();
  run.add_option("--steal", flags.steal, "Stealing step for FIG")
      ->check(CLI::IsMember({"on", "off"}))
      ->capture_default_str();
  run.add_option("--timing", flags.timing,
                 "Record wall time; off makes the CSV byte-reproducible")
      ->check(CLI::IsMember({"on", "off"}))
      ->capture_default_str();
  run.add_option("--threads", config.threads, "Worker threads")
      ->capture_default_str();
  run.add_option("--out", flags.out, "Output CSV")->required();
  run.add_option("--config", flags.config,
                 "Flat key=value file with any of the above; command-line "
                 "flags take precedence");
}

// Expands `run --config FILE` into ordinary flags placed right after `run`,
// skipping keys the command line already sets.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].starts_with("--config=")) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  const auto given = [&](const std::string& flag) {
    for (const std::string& a : args) {
      if (a == flag || a.starts_with(flag + "=")) return true;
    }
    return false;
  };
  std::vector<std::string> injected;
  for (const CLI::ConfigItem& item : CLI::ConfigINI().from_file(path)) {
    const std::string flag = "--" + item.name;
    if (given(flag)) continue;
    injected.push_back(flag);
    injected.insert(injected.end(), item.inputs.begin(), item.inputs.end());
  }
  args.insert(args.begin() + 1, injected.begin(), injected.end());
  return args;
}

submax::InstanceKind kind_of(const std::string& name) {
  if (name == "ba") return submax::InstanceKind::kBa;
  if (name == "edgelist") return submax::InstanceKind::kEdgeList;
  if (name == "tight") return submax::InstanceKind::kTight;
  return submax::InstanceKind::kEr;
}

int run_command(submax::ExperimentConfig config, const RunFlags& flags,
                const CLI::App& run) {
  config.algorithms = flags.algorithms;
  config.instance.kind = kind_of(flags.instance);
  if (!flags.weights.empty()) {
    config.instance.weights = std::pair{flags.weights[0], flags.weights[1]};
  }
  config.steal = flags.steal == "on";
  config.timing = flags.timing == "on";
  std::vector<submax::ExperimentRecord> records;
  try {
    records = submax::run_experiment(config);
  } catch (const submax::ConfigError& e) {
    std::cerr << "error: --" << e.what() << "\n\n" << run.help();
    return kUsageExit;
  }
  submax::write_csv(records, flags.out);
  std::cout << "wrote " << records.size() << " records to " << flags.out
            << '\n';
  return 0;
}

int verify_command() {
  const std::vector<submax::PropertyResult> results =
      submax::run_property_suite();
  const submax::PropertyResult* first_failure = nullptr;
  for (const submax::PropertyResult& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) std::cout << "  (" << r.detail << ')';
    std::cout << '\n';
    if (!r.passed && !first_failure) first_failure = &r;
  }
  if (first_failure) {
    std::cout << "first failure: " << first_failure->name << ": "
              << first_failure->detail << '\n';
    return 1;
  }
  std::cout << "all " << results.size() << " properties passed\n";
  return 0;
}

void print_trajectory(const char* name, const submax::AlgorithmOutcome& out,
                      std::size_t k) {
  std::cout << name << " trajectory:\n";
  for (const submax::TraceEntry& e : out.trace) {
    std::printf("  %c +%zu  gain %.6g  threshold %.6g\n",
                submax::label_char(e.set), e.element, e.gain, e.threshold);
  }
  // f(O) = 1 on the tight family.
  const double ceiling = 0.25 + 1.0 / static_cast<double>(k);
  const bool within = out.value <= ceiling + 1e-9;
  std::cout << name << " solution " << out.solution.to_string() << '\n';
  std::printf("%s ratio %.9g (ceiling %.9g) within ceiling: %s\n", name,
              out.value, ceiling, within ? "yes" : "no");
}

int tight_command(std::size_t k, double delta) {
  const submax::TightInstance instance = submax::gen_tight(k);
  const submax::OraclePtr oracle =
      std::make_shared<submax::TightOracle>(instance);
  std::cout << "tight instance k=" << k << ": a=" << submax::TightInstance::a()
            << " b=" << submax::TightInstance::b()
            << " O=" << instance.optimum().to_string() << " f(O)=1\n";
  const submax::AlgorithmOutcome ig =
      submax::run_with_extension(oracle, k, submax::interlace_greedy);
  print_trajectory("IG", ig, k);
  const submax::AlgorithmOutcome fig = submax::run_with_extension(
      oracle, k, [&](const submax::SubmodularOracle& f, std::size_t kk) {
        return submax::fast_interlace_greedy(f, kk, {delta, false});
      });
  print_trajectory("FIG", fig, k);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cardinality-constrained submodular maximization benchmarks"};
  app.require_subcommand(1);

  submax::ExperimentConfig config;
  RunFlags flags;
  CLI::App* run = app.add_subcommand("run", "Run an experiment grid to CSV");
  add_run_options(*run, config, flags);

  app.add_subcommand("verify", "Run the property suite");

  std::size_t tight_k = 32;
  double tight_delta = 0.1;
  CLI::App* tight =
      app.add_subcommand("tight", "Trace IG and FIG on the tight family");
  tight->add_option("--k", tight_k, "Even budget >= 2")->required();
  tight->add_option("--delta", tight_delta, "FIG threshold decay")
      ->capture_default_str();

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (!args.empty() && args.front() == "run") args = expand_config(args);
    // CLI11 takes the arguments in reverse order.
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::FileError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageExit;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n";
    const CLI::App* where = run->parsed() ? run : &app;
    if (tight->parsed()) where = tight;
    std::cerr << where->help();
    return kUsageExit;
  }

  try {
    if (run->parsed()) return run_command(config, flags, *run);
    if (tight->parsed()) return tight_command(tight_k, tight_delta);
    return verify_command();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
