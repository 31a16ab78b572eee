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

#include "multipath/cyclic.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "multipath/errors.h"

namespace multipath {

CyclicOrder::CyclicOrder(int n) : parent_size_(n) {
  if (n < 1) throw DomainError("cyclic order needs at least one element");
  members_.resize(n);
  std::iota(members_.begin(), members_.end(), 1);
  position_.resize(n + 1);
  position_[0] = -1;
  for (int i = 0; i < n; ++i) position_[i + 1] = i;
}

CyclicOrder::CyclicOrder(int parent_size, std::vector<Element> members)
    : parent_size_(parent_size),
      members_(std::move(members)),
      position_(parent_size + 1, -1) {
  for (int i = 0; i < size(); ++i) position_[members_[i]] = i;
}

bool CyclicOrder::contains(Element x) const {
  return x >= 1 && x <= parent_size_ && position_[x] >= 0;
}

void CyclicOrder::require_member(Element x) const {
  if (!contains(x)) {
    throw InvalidElementError("element " + std::to_string(x) +
                              " is not in the ground set");
  }
}

int CyclicOrder::position(Element x) const {
  require_member(x);
  return position_[x];
}

Element CyclicOrder::successor(Element x) const {
  int p = position(x) + 1;
  return members_[p == size() ? 0 : p];
}

Element CyclicOrder::predecessor(Element x) const {
  int p = position(x);
  return members_[p == 0 ? size() - 1 : p - 1];
}

int CyclicOrder::distance(Element from, Element to) const {
  int d = position(to) - position(from);
  return d < 0 ? d + size() : d;
}

CyclicOrder induced_order(const CyclicOrder& order,
                          std::span<const Element> subset) {
  if (subset.empty()) throw DomainError("induced order of an empty subset");
  std::vector<Element> members(subset.begin(), subset.end());
  for (Element x : members) order.require_member(x);
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
    throw DomainError("subset lists an element twice");
  }
  return CyclicOrder(order.parent_size(), std::move(members));
}

int interval_size(const CyclicOrder& order, const SigmaInterval& iv) {
  return order.distance(iv.first, iv.last) + 1;
}

bool interval_is_whole(const CyclicOrder& order, const SigmaInterval& iv) {
  return interval_size(order, iv) == order.size();
}

bool interval_contains(const CyclicOrder& order, const SigmaInterval& iv,
                       Element x) {
  order.require_member(x);
  return order.distance(iv.first, x) <= order.distance(iv.first, iv.last);
}

bool interval_subset(const CyclicOrder& order, const SigmaInterval& inner,
                     const SigmaInterval& outer) {
  const int outer_size = interval_size(order, outer);
  if (outer_size == order.size()) return true;
  const int offset = order.distance(outer.first, inner.first);
  return offset + interval_size(order, inner) <= outer_size;
}

std::vector<Element> interval_members(const CyclicOrder& order,
                                      const SigmaInterval& iv) {
  order.require_member(iv.first);
  order.require_member(iv.last);
  std::vector<Element> out;
  out.reserve(interval_size(order, iv));
  Element x = iv.first;
  out.push_back(x);
  while (x != iv.last) {
    x = order.successor(x);
    out.push_back(x);
  }
  return out;
}

IntervalParts split_at(const CyclicOrder& order, const SigmaInterval& iv,
                       Element x) {
  if (!interval_contains(order, iv, x)) {
    throw DomainError("element " + std::to_string(x) +
                      " is not in the interval");
  }
  IntervalParts parts;
  if (x != iv.first) {
    parts.first_part = SigmaInterval{iv.first, order.predecessor(x)};
  }
  if (x != iv.last) {
    parts.last_part = SigmaInterval{order.successor(x), iv.last};
  }
  return parts;
}

}  // namespace multipath
