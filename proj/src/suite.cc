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

#include "submax/suite.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "submax/algorithms.h"
#include "submax/instances.h"
#include "submax/objectives.h"
#include "submax/verification.h"

namespace submax {
namespace {

std::string describe_ratio(double worst, std::size_t checked) {
  std::ostringstream out;
  out << checked << " instances, worst ratio " << worst;
  return out.str();
}

// Runs `algorithm` on every suite instance and certifies `ratio` against the
// exact optimum; also checks interlaced invariants when present.
PropertyResult ratio_property(const std::string& name,
                              const std::vector<SuiteInstance>& suite,
                              const std::vector<AlgorithmOutcome>& optima,
                              double ratio, const Algorithm& algorithm,
                              bool extend) {
  PropertyResult result{name, true, ""};
  double worst = INFINITY;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    const SuiteInstance& inst = suite[i];
    const AlgorithmOutcome out =
        extend ? run_with_extension(inst.oracle, inst.k, algorithm)
               : algorithm(*inst.oracle, inst.k);
    const RatioCertificate cert = certify_ratio(out, optima[i], ratio);
    worst = std::min(worst, cert.achieved);
    if (!cert.passed) {
      result.passed = false;
      result.detail = inst.name + ": value " + std::to_string(out.value) +
                      " < " + std::to_string(ratio) + " * OPT " +
                      std::to_string(optima[i].value);
      return result;
    }
    if (auto failure = check_interlace_invariants(out, *inst.oracle,
                                                  *inst.oracle)) {
      result.passed = false;
      result.detail = inst.name + ": " + *failure;
      return result;
    }
  }
  result.detail = describe_ratio(worst, suite.size());
  return result;
}

}  // namespace

std::vector<SuiteInstance> small_suite(std::uint64_t seed) {
  std::vector<SuiteInstance> suite;
  const double probabilities[] = {0.3, 0.5, 0.8};
  for (std::size_t n = 8; n <= 14; ++n) {
    for (double p : probabilities) {
      for (std::size_t k = 1; k <= 5; ++k) {
        const std::uint64_t instance_seed = hash_combine(
            hash_combine(hash_combine(seed, n), static_cast<std::uint64_t>(
                                                    p * 10)),
            k);
        std::ostringstream name;
        name << "er(n=" << n << ";p=" << p << ";k=" << k << ")";
        suite.push_back(
            {name.str(),
             std::make_shared<CutOracle>(gen_er(n, p, RngSeed{instance_seed})),
             k});
      }
    }
  }
  for (std::size_t k : {2u, 4u}) {
    suite.push_back({"tight(k=" + std::to_string(k) + ")",
                     std::make_shared<TightOracle>(gen_tight(k)), k});
  }
  return suite;
}

std::vector<PropertyResult> run_property_suite() {
  std::vector<PropertyResult> results;
  const std::vector<SuiteInstance> suite = small_suite();
  std::vector<AlgorithmOutcome> optima;
  optima.reserve(suite.size());
  for (const SuiteInstance& inst : suite) {
    optima.push_back(brute_force_opt(*inst.oracle, inst.k));
  }

  results.push_back(ratio_property("interlace greedy >= OPT/4", suite, optima,
                                   0.25, interlace_greedy, true));
  for (double delta : {0.05, 0.1}) {
    const double ratio = delta == 0.05 ? 0.175 : 0.1;
    for (bool steal : {false, true}) {
      std::ostringstream name;
      name << "fast interlace greedy (delta=" << delta
           << (steal ? ", steal" : "") << ") >= " << ratio << " OPT";
      results.push_back(ratio_property(
          name.str(), suite, optima, ratio,
          [=](const SubmodularOracle& f, std::size_t k) {
            return fast_interlace_greedy(f, k, {delta, steal});
          },
          true));
    }
  }
  results.push_back(ratio_property("iterated greedy >= OPT/7", suite, optima,
                                   1.0 / 7.0, gupta_iterated_greedy, false));

  {
    PropertyResult r{"stealing never lowers the value", true, ""};
    for (const SuiteInstance& inst : suite) {
      auto run = [&](bool steal) {
        return run_with_extension(
            inst.oracle, inst.k,
            [=](const SubmodularOracle& f, std::size_t k) {
              return fast_interlace_greedy(f, k, {0.1, steal});
            });
      };
      const AlgorithmOutcome with = run(true);
      const AlgorithmOutcome without = run(false);
      if (with.value < without.value - kValueTolerance ||
          with.solution.size() > inst.k) {
        r.passed = false;
        r.detail = inst.name;
        break;
      }
    }
    if (r.passed) r.detail = std::to_string(suite.size()) + " instances";
    results.push_back(r);
  }

  {
    PropertyResult r{"double greedy >= unconstrained OPT/3", true, ""};
    std::size_t checked = 0;
    for (std::size_t n = 4; n <= 12 && r.passed; ++n) {
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        CutOracle f(gen_er(n, 0.5, RngSeed{hash_combine(n, seed)}));
        ElementSet ground(n);
        for (Element x = 0; x < n; ++x) ground.insert(x);
        const double got = f.value(double_greedy_usm(f, ground));
        const double best = brute_force_opt(f, n).value;
        ++checked;
        if (got < best / 3.0 - kValueTolerance) {
          r.passed = false;
          r.detail = "n=" + std::to_string(n) + ": " + std::to_string(got) +
                     " < OPT/3 with OPT " + std::to_string(best);
          break;
        }
      }
    }
    if (r.passed) r.detail = std::to_string(checked) + " instances";
    results.push_back(r);
  }

  {
    PropertyResult r{"tight family ratio <= 1/4 + 1/k", true, ""};
    for (std::size_t k : {8u, 16u, 32u}) {
      const OraclePtr tight = std::make_shared<TightOracle>(gen_tight(k));
      const double ceiling = 0.25 + 1.0 / k + kValueTolerance;
      const double ig = run_with_extension(tight, k, interlace_greedy).value;
      const double fig =
          run_with_extension(tight, k,
                             [](const SubmodularOracle& f, std::size_t kk) {
                               return fast_interlace_greedy(f, kk, {0.1, false});
                             })
              .value;
      // f(O) = 1 on the tight family.
      if (ig > ceiling || fig > ceiling) {
        r.passed = false;
        r.detail = "k=" + std::to_string(k) + ": IG " + std::to_string(ig) +
                   ", FIG " + std::to_string(fig);
        break;
      }
    }
    if (r.passed) r.detail = "k in {8, 16, 32}";
    results.push_back(r);
  }

  {
    PropertyResult r{"query ceilings", true, ""};
    std::uint64_t previous = 0;
    for (std::size_t n : {256u, 512u, 1024u}) {
      const std::size_t k = n / 8;
      CutOracle f(gen_er(n, 0.5, RngSeed{kCalibrationSeed}));
      const AlgorithmOutcome fig = fast_interlace_greedy(f, k, {0.1, false});
      const QueryAudit audit = audit_query_bound(
          fig, threshold_query_bound(kThresholdQueryConstant, n, k, 0.1));
      if (!audit.passed || (previous && fig.queries > 3 * previous)) {
        r.passed = false;
        r.detail = "FIG at n=" + std::to_string(n) + " used " +
                   std::to_string(fig.queries) + " queries, limit " +
                   std::to_string(audit.limit);
        break;
      }
      previous = fig.queries;
    }
    for (const SuiteInstance& inst : suite) {
      if (!r.passed) break;
      const OraclePtr g = with_dummy_extension(inst.oracle, inst.k);
      const AlgorithmOutcome ig = interlace_greedy(*g, inst.k);
      const QueryAudit audit = audit_query_bound(
          ig, interlace_query_bound(g->ground_size(), inst.k));
      if (!audit.passed) {
        r.passed = false;
        r.detail = inst.name + ": IG used " + std::to_string(ig.queries) +
                   " queries, limit " + std::to_string(audit.limit);
      }
    }
    if (r.passed) r.detail = "FIG n in {256, 512, 1024}; IG on suite";
    results.push_back(r);
  }

  {
    PropertyResult r{"submodularity of bundled objectives", true, ""};
    std::vector<std::pair<std::string, OraclePtr>> oracles = {
        {"cut", std::make_shared<CutOracle>(gen_er(10, 0.5, RngSeed{1}))},
        {"weighted cut",
         std::make_shared<CutOracle>(random_weights(
             gen_er(10, 0.5, RngSeed{2}), 1.0, 10.0, RngSeed{3}))},
        {"tight", std::make_shared<TightOracle>(gen_tight(4))},
        {"extended cut",
         with_dummy_extension(
             std::make_shared<CutOracle>(gen_er(6, 0.6, RngSeed{4})), 2)},
    };
    for (const auto& [name, oracle] : oracles) {
      if (!check_submodular(*oracle, ExhaustiveCheck{}).passed) {
        r.passed = false;
        r.detail = name + " failed the exhaustive check";
        break;
      }
    }
    FunctionOracle squared(3, [](const ElementSet& s) {
      return static_cast<double>(s.size() * s.size());
    });
    if (r.passed && check_submodular(squared, ExhaustiveCheck{}).passed) {
      r.passed = false;
      r.detail = "planted |S|^2 counterexample was not flagged";
    }
    if (r.passed) r.detail = "cut, weighted cut, tight, extended; |S|^2 flagged";
    results.push_back(r);
  }

  return results;
}

}  // namespace submax
