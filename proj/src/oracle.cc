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

#include "submax/oracle.h"

#include <stdexcept>
#include <string>

namespace submax {

double SubmodularOracle::value_with(const ElementSet& set, Element x,
                                    double /*value_of_set*/) const {
  return value(set.with(x));
}

double SubmodularOracle::value_without(const ElementSet& set, Element x,
                                       double /*value_of_set*/) const {
  return value(set.without(x));
}

void CountingOracle::check_element(Element x) const {
  if (x >= inner_->ground_size()) {
    throw std::out_of_range("element " + std::to_string(x) +
                            " outside ground set of size " +
                            std::to_string(inner_->ground_size()));
  }
}

void CountingOracle::check_set(const ElementSet& set) const {
  if (set.universe_size() <= inner_->ground_size()) return;
  for (Element x : set) check_element(x);
}

double CountingOracle::evaluate(const ElementSet& set) {
  check_set(set);
  ++count_;
  return inner_->value(set);
}

double CountingOracle::evaluate_with(const ElementSet& set, Element x,
                                     double value_of_set) {
  check_element(x);
  if (set.contains(x)) return value_of_set;
  check_set(set);
  ++count_;
  return inner_->value_with(set, x, value_of_set);
}

double CountingOracle::evaluate_without(const ElementSet& set, Element x,
                                        double value_of_set) {
  check_element(x);
  if (!set.contains(x)) return value_of_set;
  check_set(set);
  ++count_;
  return inner_->value_without(set, x, value_of_set);
}

double CountingOracle::marginal_gain(Element x, const ElementSet& set) {
  check_element(x);
  if (set.contains(x)) return 0.0;
  const double base = evaluate(set);
  return evaluate_with(set, x, base) - base;
}

DummyExtendedOracle::DummyExtendedOracle(OraclePtr inner, std::size_t m)
    : inner_(std::move(inner)), m_(m) {
  if (!inner_) throw std::invalid_argument("null oracle");
  if (m_ < inner_->ground_size()) {
    throw std::invalid_argument("extension must not shrink the ground set");
  }
}

double DummyExtendedOracle::value(const ElementSet& set) const {
  return inner_->value(map_back(set, inner_->ground_size()));
}

double DummyExtendedOracle::value_with(const ElementSet& set, Element x,
                                       double value_of_set) const {
  const std::size_t n = inner_->ground_size();
  if (x >= n) return value_of_set;
  return inner_->value_with(map_back(set, n), x, value_of_set);
}

double DummyExtendedOracle::value_without(const ElementSet& set, Element x,
                                          double value_of_set) const {
  const std::size_t n = inner_->ground_size();
  if (x >= n) return value_of_set;
  return inner_->value_without(map_back(set, n), x, value_of_set);
}

std::uint64_t DummyExtendedOracle::fingerprint() const {
  return hash_combine(inner_->fingerprint(), m_);
}

OraclePtr with_dummy_extension(OraclePtr oracle, std::size_t k) {
  const std::size_t n = oracle->ground_size();
  if (k > n) {
    throw std::invalid_argument("budget k=" + std::to_string(k) +
                                " exceeds ground set size " +
                                std::to_string(n));
  }
  if (n >= 4 * k) return oracle;
  return std::make_shared<DummyExtendedOracle>(std::move(oracle), 4 * k);
}

ElementSet map_back(const ElementSet& set, std::size_t n) {
  ElementSet out(n);
  for (Element x : set) {
    if (x < n) out.insert(x);
  }
  return out;
}

std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t v) {
  std::uint64_t z =
      seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t hash_string(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace submax
