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

#include "multipath/presentation.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "multipath/errors.h"

namespace multipath {
namespace {

// Element labels after removing x from 1..n.
Element relabel_without(Element y, Element x) { return y > x ? y - 1 : y; }

SigmaInterval relabel_without(const SigmaInterval& iv, Element x) {
  return {relabel_without(iv.first, x), relabel_without(iv.last, x)};
}

std::vector<std::size_t> cycle_by(const SigmaIntervalSystem& sys,
                                  bool use_last) {
  if (!is_antichain(sys)) {
    throw PreconditionError("Sigma is defined only for antichains");
  }
  std::vector<std::size_t> idx(sys.interval_count());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  auto key = [&](std::size_t i) {
    return use_last ? sys.interval(i).last : sys.interval(i).first;
  };
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  auto zero = std::find(idx.begin(), idx.end(), std::size_t{0});
  std::rotate(idx.begin(), zero, idx.end());
  return idx;
}

}  // namespace

SigmaIntervalSystem::SigmaIntervalSystem(int n,
                                         std::vector<SigmaInterval> intervals)
    : order_(n), intervals_(std::move(intervals)) {
  for (const auto& iv : intervals_) {
    order_.require_member(iv.first);
    order_.require_member(iv.last);
  }
}

std::vector<ElementSet> SigmaIntervalSystem::interval_sets() const {
  std::vector<ElementSet> out;
  out.reserve(intervals_.size());
  for (const auto& iv : intervals_) {
    ElementSet s = interval_members(order_, iv);
    std::sort(s.begin(), s.end());
    out.push_back(std::move(s));
  }
  return out;
}

bool is_antichain(const SigmaIntervalSystem& sys) {
  const auto ivs = sys.intervals();
  for (std::size_t i = 0; i < ivs.size(); ++i) {
    for (std::size_t j = 0; j < ivs.size(); ++j) {
      if (i != j && interval_subset(sys.order(), ivs[i], ivs[j])) return false;
    }
  }
  return true;
}

bool satisfies_condition_c(const SigmaIntervalSystem& sys) {
  const auto& order = sys.order();
  const auto ivs = sys.intervals();
  for (std::size_t i = 0; i < ivs.size(); ++i) {
    for (std::size_t j = 0; j < ivs.size(); ++j) {
      if (i == j || !interval_subset(order, ivs[i], ivs[j])) continue;
      if (!interval_contains(order, ivs[i], ivs[j].first) &&
          !interval_contains(order, ivs[i], ivs[j].last)) {
        return false;
      }
    }
  }
  return true;
}

ElementSet loops(const SigmaIntervalSystem& sys) {
  std::vector<bool> covered(sys.size() + 1, false);
  for (const auto& iv : sys.intervals()) {
    for (Element x : interval_members(sys.order(), iv)) covered[x] = true;
  }
  ElementSet out;
  for (Element x = 1; x <= sys.size(); ++x) {
    if (!covered[x]) out.push_back(x);
  }
  return out;
}

std::vector<std::size_t> induced_interval_cycle(const SigmaIntervalSystem& sys) {
  return cycle_by(sys, /*use_last=*/true);
}

std::vector<std::size_t> induced_interval_cycle_by_first(
    const SigmaIntervalSystem& sys) {
  return cycle_by(sys, /*use_last=*/false);
}

bool has_lattice_path_certificate(const SigmaIntervalSystem& sys) {
  if (sys.interval_count() <= 1) return true;
  // Rank n: the free matroid.
  if (sys.interval_count() == sys.size()) return true;
  if (!loops(sys).empty()) return true;
  const auto cycle = induced_interval_cycle(sys);
  const std::size_t r = cycle.size();
  for (std::size_t pos = 0; pos < r; ++pos) {
    const auto& current = sys.interval(cycle[pos]);
    const auto& previous = sys.interval(cycle[(pos + r - 1) % r]);
    if (!interval_contains(sys.order(), previous, current.first)) return true;
  }
  return false;
}

ValidationReport validate(const SigmaIntervalSystem& sys) {
  ValidationReport report;
  report.is_antichain = is_antichain(sys);
  report.satisfies_c = report.is_antichain || satisfies_condition_c(sys);
  report.loops = loops(sys);
  if (report.is_antichain) {
    report.is_lattice_path = has_lattice_path_certificate(sys);
  } else if (report.satisfies_c) {
    report.is_lattice_path =
        has_lattice_path_certificate(normalize_to_antichain(sys));
  }
  return report;
}

SigmaIntervalSystem normalize_to_antichain(const SigmaIntervalSystem& sys) {
  if (!satisfies_condition_c(sys)) {
    throw NormalizationError(
        "condition (C) fails: a contained interval misses both endpoints of "
        "its container");
  }
  const CyclicOrder& order = sys.order();
  std::vector<SigmaInterval> ivs(sys.intervals().begin(),
                                 sys.intervals().end());
  for (;;) {
    // Containing interval with the smallest first element, then the
    // shortest, then the lowest index.
    std::optional<std::tuple<Element, int, std::size_t>> best;
    bool use_first = false;
    for (std::size_t j = 0; j < ivs.size(); ++j) {
      for (std::size_t i = 0; i < ivs.size(); ++i) {
        if (i == j || !interval_subset(order, ivs[i], ivs[j])) continue;
        auto key = std::make_tuple(ivs[j].first,
                                   interval_size(order, ivs[j]), j);
        if (!best || key < *best) {
          best = key;
          use_first = interval_contains(order, ivs[i], ivs[j].first);
        } else if (key == *best && !use_first) {
          use_first = interval_contains(order, ivs[i], ivs[j].first);
        }
      }
    }
    if (!best) break;
    const SigmaInterval& chosen = ivs[std::get<2>(*best)];

    // Replace the largest interval sharing the relevant endpoint.
    std::size_t target = ivs.size();
    for (std::size_t j = 0; j < ivs.size(); ++j) {
      bool shares = use_first ? ivs[j].first == chosen.first
                              : ivs[j].last == chosen.last;
      if (!shares) continue;
      if (target == ivs.size() ||
          interval_size(order, ivs[j]) > interval_size(order, ivs[target])) {
        target = j;
      }
    }
    SigmaInterval& t = ivs[target];
    if (t.first == t.last) {
      ivs.erase(ivs.begin() + static_cast<std::ptrdiff_t>(target));
    } else if (use_first) {
      t.first = order.successor(t.first);
    } else {
      t.last = order.predecessor(t.last);
    }
  }
  return SigmaIntervalSystem(sys.size(), std::move(ivs));
}

SigmaIntervalSystem delete_element(const SigmaIntervalSystem& sys, Element x) {
  const CyclicOrder& order = sys.order();
  order.require_member(x);
  if (sys.size() == 1) {
    throw DomainError("cannot remove the only element of the ground set");
  }
  std::vector<SigmaInterval> out;
  for (const auto& iv : sys.intervals()) {
    if (!interval_contains(order, iv, x)) {
      out.push_back(relabel_without(iv, x));
      continue;
    }
    if (iv.first == iv.last) continue;  // {x} becomes empty
    SigmaInterval trimmed = iv;
    if (iv.first == x) trimmed.first = order.successor(x);
    if (iv.last == x) trimmed.last = order.predecessor(x);
    out.push_back(relabel_without(trimmed, x));
  }
  return normalize_to_antichain(SigmaIntervalSystem(sys.size() - 1, out));
}

SigmaIntervalSystem contract_element(const SigmaIntervalSystem& sys,
                                     Element x) {
  const CyclicOrder& order = sys.order();
  order.require_member(x);
  if (sys.size() == 1) {
    throw DomainError("cannot remove the only element of the ground set");
  }
  if (!is_antichain(sys)) {
    throw PreconditionError("contraction needs an antichain presentation");
  }
  const int n = sys.size();
  const int r = sys.interval_count();

  // Intervals through x, ordered so their first parts shrink; for an
  // antichain this is their order along Sigma.
  std::vector<std::size_t> through;
  for (std::size_t i = 0; i < static_cast<std::size_t>(r); ++i) {
    if (interval_contains(order, sys.interval(i), x)) through.push_back(i);
  }
  std::sort(through.begin(), through.end(), [&](std::size_t a, std::size_t b) {
    return order.distance(sys.interval(a).first, x) >
           order.distance(sys.interval(b).first, x);
  });
  const int t = static_cast<int>(through.size());

  if (t > 1 && t < r) {
    const auto cycle = induced_interval_cycle(sys);
    auto at = std::find(cycle.begin(), cycle.end(), through.front());
    std::size_t pos = static_cast<std::size_t>(at - cycle.begin());
    for (int s = 0; s < t; ++s) {
      if (cycle[(pos + s) % r] != through[s]) {
        throw PreconditionError(
            "intervals through the contracted element are not consecutive "
            "in Sigma");
      }
    }
  }

  std::vector<SigmaInterval> out;
  for (int s = 0; s + 1 < t; ++s) {
    const SigmaInterval& a = sys.interval(through[s]);
    const SigmaInterval& b = sys.interval(through[s + 1]);
    const int span = order.distance(a.first, x) + order.distance(x, b.last) + 1;
    SigmaInterval merged;
    if (span >= n) {
      // (a u b) - x is everything but x; anchor it at f_a.
      Element before = order.predecessor(a.first);
      if (before == x) before = order.predecessor(x);
      merged = {a.first, before};
    } else {
      merged = {a.first, b.last};
    }
    out.push_back(relabel_without(merged, x));
  }
  for (std::size_t i = 0; i < static_cast<std::size_t>(r); ++i) {
    if (std::find(through.begin(), through.end(), i) != through.end()) continue;
    out.push_back(relabel_without(sys.interval(i), x));
  }
  return normalize_to_antichain(SigmaIntervalSystem(n - 1, std::move(out)));
}

}  // namespace multipath
