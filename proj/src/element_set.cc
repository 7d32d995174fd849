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

#include "submax/element_set.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace submax {

ElementSet::ElementSet(std::size_t universe_size) : in_set_(universe_size, 0) {}

ElementSet::ElementSet(std::size_t universe_size,
                       std::initializer_list<Element> members)
    : ElementSet(universe_size,
                 std::span<const Element>(members.begin(), members.size())) {}

ElementSet::ElementSet(std::size_t universe_size,
                       std::span<const Element> members)
    : in_set_(universe_size, 0) {
  members_.reserve(members.size());
  for (Element x : members) insert(x);
}

bool ElementSet::insert(Element x) {
  if (x >= in_set_.size()) {
    throw std::out_of_range("element " + std::to_string(x) +
                            " outside universe of size " +
                            std::to_string(in_set_.size()));
  }
  if (in_set_[x]) return false;
  in_set_[x] = 1;
  members_.push_back(x);
  return true;
}

bool ElementSet::erase(Element x) {
  if (!contains(x)) return false;
  in_set_[x] = 0;
  members_.erase(std::find(members_.begin(), members_.end(), x));
  return true;
}

void ElementSet::clear() {
  for (Element x : members_) in_set_[x] = 0;
  members_.clear();
}

std::vector<Element> ElementSet::sorted() const {
  std::vector<Element> out = members_;
  std::sort(out.begin(), out.end());
  return out;
}

ElementSet ElementSet::with(Element x) const {
  ElementSet out = *this;
  out.insert(x);
  return out;
}

ElementSet ElementSet::without(Element x) const {
  ElementSet out = *this;
  out.erase(x);
  return out;
}

ElementSet ElementSet::set_union(const ElementSet& other) const {
  ElementSet out(std::max(universe_size(), other.universe_size()));
  for (Element x : members_) out.insert(x);
  for (Element x : other.members_) out.insert(x);
  return out;
}

ElementSet ElementSet::set_intersection(const ElementSet& other) const {
  ElementSet out(std::max(universe_size(), other.universe_size()));
  for (Element x : members_) {
    if (other.contains(x)) out.insert(x);
  }
  return out;
}

ElementSet ElementSet::set_difference(const ElementSet& other) const {
  ElementSet out(std::max(universe_size(), other.universe_size()));
  for (Element x : members_) {
    if (!other.contains(x)) out.insert(x);
  }
  return out;
}

bool ElementSet::within(std::size_t n) const {
  return std::all_of(members_.begin(), members_.end(),
                     [n](Element x) { return x < n; });
}

bool ElementSet::operator==(const ElementSet& other) const {
  if (size() != other.size()) return false;
  return std::all_of(members_.begin(), members_.end(),
                     [&other](Element x) { return other.contains(x); });
}

std::string ElementSet::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (Element x : sorted()) {
    if (!first) out << ", ";
    out << x;
    first = false;
  }
  out << '}';
  return out.str();
}

}  // namespace submax
