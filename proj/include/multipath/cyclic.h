// Copyright 2026 The Authors.
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

#ifndef MULTIPATH_CYCLIC_H_
#define MULTIPATH_CYCLIC_H_

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace multipath {

// Elements are the integers 1..n of a canonically labelled ground set.
using Element = int;

// A set of elements, kept sorted ascending without repeats.
using ElementSet = std::vector<Element>;

// The cycle sigma = (1, 2, ..., n), or the cycle it induces on a subset of
// {1..n} by skipping the missing elements.
class CyclicOrder {
 public:
  // The full cycle on 1..n. Throws DomainError unless n >= 1.
  explicit CyclicOrder(int n);

  int parent_size() const { return parent_size_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool is_full() const { return size() == parent_size_; }

  bool contains(Element x) const;
  // Members in cyclic order starting from the smallest label.
  std::span<const Element> elements() const { return members_; }

  // Throw InvalidElementError when x is not a member.
  Element successor(Element x) const;
  Element predecessor(Element x) const;

  // Number of successor steps from `from` to `to`, in [0, size()).
  int distance(Element from, Element to) const;

  // Index of x in elements().
  int position(Element x) const;

  // Throws InvalidElementError unless x is a member.
  void require_member(Element x) const;

 private:
  CyclicOrder(int parent_size, std::vector<Element> members);
  friend CyclicOrder induced_order(const CyclicOrder&, std::span<const Element>);

  int parent_size_;
  std::vector<Element> members_;
  std::vector<int> position_;  // indexed by label, -1 when absent
};

// The cycle induced on `subset` (any order, no repeats). Throws DomainError
// for an empty subset, InvalidElementError for a non-member.
CyclicOrder induced_order(const CyclicOrder& order,
                          std::span<const Element> subset);

// [first, last]: first, sigma(first), ..., last.
struct SigmaInterval {
  Element first = 1;
  Element last = 1;

  friend bool operator==(const SigmaInterval&, const SigmaInterval&) = default;
  friend auto operator<=>(const SigmaInterval&, const SigmaInterval&) = default;
};

int interval_size(const CyclicOrder& order, const SigmaInterval& iv);
bool interval_contains(const CyclicOrder& order, const SigmaInterval& iv,
                       Element x);
bool interval_is_whole(const CyclicOrder& order, const SigmaInterval& iv);

// True iff inner is a subset of outer (as sets).
bool interval_subset(const CyclicOrder& order, const SigmaInterval& inner,
                     const SigmaInterval& outer);

// f, sigma(f), ..., l in cyclic order.
std::vector<Element> interval_members(const CyclicOrder& order,
                                      const SigmaInterval& iv);

struct IntervalParts {
  std::optional<SigmaInterval> first_part;
  std::optional<SigmaInterval> last_part;
};

// The first and last parts of iv - x. Throws DomainError if x is not in iv.
IntervalParts split_at(const CyclicOrder& order, const SigmaInterval& iv,
                       Element x);

}  // namespace multipath

#endif  // MULTIPATH_CYCLIC_H_
