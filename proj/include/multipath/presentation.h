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

#ifndef MULTIPATH_PRESENTATION_H_
#define MULTIPATH_PRESENTATION_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "multipath/cyclic.h"

namespace multipath {

// A multiset of sigma-intervals over the cycle (1, ..., n). Intervals are
// identified by their position, so repeated intervals are representable.
// When the intervals form an antichain the system presents a multi-path
// matroid of rank intervals().size().
class SigmaIntervalSystem {
 public:
  // Throws InvalidElementError if an endpoint lies outside 1..n and
  // DomainError if n < 1.
  SigmaIntervalSystem(int n, std::vector<SigmaInterval> intervals);

  const CyclicOrder& order() const { return order_; }
  int size() const { return order_.size(); }
  int interval_count() const { return static_cast<int>(intervals_.size()); }
  std::span<const SigmaInterval> intervals() const { return intervals_; }
  const SigmaInterval& interval(std::size_t i) const { return intervals_[i]; }

  // Member lists of every interval, sorted ascending.
  std::vector<ElementSet> interval_sets() const;

  friend bool operator==(const SigmaIntervalSystem& a,
                         const SigmaIntervalSystem& b) {
    return a.size() == b.size() && a.intervals_ == b.intervals_;
  }

 private:
  CyclicOrder order_;
  std::vector<SigmaInterval> intervals_;
};

struct ValidationReport {
  bool is_antichain = false;
  bool satisfies_c = false;
  ElementSet loops;
  // Empty when condition (C) fails. For a non-antichain satisfying (C) this
  // describes the antichain produced by normalize_to_antichain.
  std::optional<bool> is_lattice_path;
};

bool is_antichain(const SigmaIntervalSystem& sys);
// If I is contained in J then f_J or l_J lies in I.
bool satisfies_condition_c(const SigmaIntervalSystem& sys);
ElementSet loops(const SigmaIntervalSystem& sys);

ValidationReport validate(const SigmaIntervalSystem& sys);

// The cycle Sigma on interval indices, listed from interval 0: entry i+1 is
// the image of entry i. Throws PreconditionError unless sys is an antichain.
std::vector<std::size_t> induced_interval_cycle(const SigmaIntervalSystem& sys);

// The same cycle read off first elements; equals induced_interval_cycle for
// antichains.
std::vector<std::size_t> induced_interval_cycle_by_first(
    const SigmaIntervalSystem& sys);

// For an antichain: true iff the system has a loop, has rank <= 1 or n, or
// some f_I lies outside Sigma^{-1}(I). These systems present lattice path
// matroids.
bool has_lattice_path_certificate(const SigmaIntervalSystem& sys);

// Trims containing intervals until the system is an antichain. Throws
// NormalizationError if condition (C) fails.
SigmaIntervalSystem normalize_to_antichain(const SigmaIntervalSystem& sys);

// Single-element minors. The result lives on the ground set relabelled
// 1..n-1 in cyclic order (labels above x move down by one) and is already
// normalized. Throws InvalidElementError for a bad x and DomainError when
// x is the only element.
SigmaIntervalSystem delete_element(const SigmaIntervalSystem& sys, Element x);
SigmaIntervalSystem contract_element(const SigmaIntervalSystem& sys, Element x);

}  // namespace multipath

#endif  // MULTIPATH_PRESENTATION_H_
