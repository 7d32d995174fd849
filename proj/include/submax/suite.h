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

// The shipped property suite: small brute-forceable instances and the checks
// run by `submax_cli verify`.

#ifndef SUBMAX_SUITE_H_
#define SUBMAX_SUITE_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "submax/oracle.h"

namespace submax {

struct SuiteInstance {
  std::string name;
  OraclePtr oracle;  // on its natural ground set, before any extension
  std::size_t k;
};

// ER graphs with n in [8, 14], p in {0.3, 0.5, 0.8}, k in [1, 5], plus the
// tight family at k = 2 and 4. 107 instances, all small enough for
// brute_force_opt.
std::vector<SuiteInstance> small_suite(std::uint64_t seed = 2026);

// Query-bound constant c for FIG at delta = 0.1, measured once on
// ER(n = 256, p = 0.5, seed = kCalibrationSeed) with k = 32.
inline constexpr std::uint64_t kCalibrationSeed = 2026;
inline constexpr double kThresholdQueryConstant = 0.2539;

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Runs every property on the small suite plus the tight family and a short
// query-growth check. Takes a few seconds.
std::vector<PropertyResult> run_property_suite();

}  // namespace submax

#endif  // SUBMAX_SUITE_H_
