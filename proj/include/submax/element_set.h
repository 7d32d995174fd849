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

#ifndef SUBMAX_ELEMENT_SET_H_
#define SUBMAX_ELEMENT_SET_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace submax {

// Index of an element of the ground set [n] = {0, ..., n - 1}.
using Element = std::size_t;

// A subset of a fixed universe [universe_size). Members are kept in insertion
// order; membership test and insertion are O(1). Removal preserves the order
// of the remaining members and is O(|set|).
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe_size);
  // Throws std::out_of_range if any member is >= universe_size.
  ElementSet(std::size_t universe_size, std::initializer_list<Element> members);
  ElementSet(std::size_t universe_size, std::span<const Element> members);

  std::size_t universe_size() const { return in_set_.size(); }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  // Elements outside the universe are never members.
  bool contains(Element x) const {
    return x < in_set_.size() && in_set_[x] != 0;
  }

  // Returns false if x was already present. Throws std::out_of_range if x is
  // outside the universe.
  bool insert(Element x);
  // Returns false if x was absent.
  bool erase(Element x);
  void clear();

  // Members in insertion order.
  std::span<const Element> members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  // Members in increasing index order.
  std::vector<Element> sorted() const;

  // Copy of this set with x added.
  ElementSet with(Element x) const;
  // Copy of this set with x removed.
  ElementSet without(Element x) const;

  // Set algebra. The result's universe is the larger of the two universes.
  ElementSet set_union(const ElementSet& other) const;
  ElementSet set_intersection(const ElementSet& other) const;
  ElementSet set_difference(const ElementSet& other) const;

  // True iff every member is < n.
  bool within(std::size_t n) const;
  // Same membership; universe size and insertion order are ignored.
  bool operator==(const ElementSet& other) const;

  // "{0, 3, 7}" in sorted order.
  std::string to_string() const;

 private:
  std::vector<Element> members_;
  std::vector<std::uint8_t> in_set_;
};

}  // namespace submax

#endif  // SUBMAX_ELEMENT_SET_H_
