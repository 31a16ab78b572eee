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


#include "multipath/activities.h"

#include <algorithm>
#include <string>

#include "multipath/errors.h"
#include "multipath/tutte_dp.h"

namespace multipath {
namespace {

using Slice = GammaTable::Slice;

bool contains_label(const ElementSet& set, int u) {
  return std::binary_search(set.begin(), set.end(), u);
}

std::size_t cell_index(int b_dim, int a, int b, bool tp, bool tq) {
  return ((static_cast<std::size_t>(a) * (b_dim + 1) + b) * 2 + (tp ? 1 : 0)) *
             2 +
         (tq ? 1 : 0);
}

// Sizes the blocks of time t for end point j.
Slice empty_slice(const Diagram& d, int j, int t) {
  Slice s;
  s.t = t;
  s.low = d.low(t);
  const int end = d.end_height(j);
  const int width = d.high(t) - d.low(t) + 1;
  s.a_dim.assign(width, -1);
  s.b_dim.assign(width, -1);
  s.cells.resize(width);
  for (int h = d.low(t); h <= d.high(t); ++h) {
    const int north = end - h;
    const int east = d.size() - t - north;
    if (north < 0 || east < 0) continue;
    s.a_dim[h - s.low] = north;
    s.b_dim[h - s.low] = east;
    s.cells[h - s.low].assign(
        static_cast<std::size_t>(north + 1) * (east + 1) * 4, BigInt(0));
  }
  return s;
}

Slice terminal_slice(const Diagram& d, int j) {
  const int n = d.size();
  Slice s = empty_slice(d, j, n);
  const int h = d.end_height(j);
  if (h >= d.low(n) && h <= d.high(n)) {
    s.cells[h - s.low][cell_index(0, 0, 0, d.on_bottom(n, h), d.on_top(n, h))] =
        1;
  }
  return s;
}

// Slice t from slice t+1.
Slice step_back(const Diagram& d, int j, const Slice& next) {
  const int t = next.t - 1;
  Slice s = empty_slice(d, j, t);
  for (int h = d.low(t); h <= d.high(t); ++h) {
    auto& block = s.cells[h - s.low];
    if (block.empty()) continue;
    const int b_dim = s.b_dim[h - s.low];
    const bool on_p = d.on_bottom(t, h);
    const bool on_q = d.on_top(t, h);
    for (int north = 0; north <= 1; ++north) {
      const int h2 = h + north;
      if (!d.contains(t + 1, h2)) continue;
      const auto& from = next.cells[h2 - next.low];
      if (from.empty()) continue;
      const int a2_dim = next.a_dim[h2 - next.low];
      const int b2_dim = next.b_dim[h2 - next.low];
      // N along Q is pseudo-internal if the rest touches P; E along P is
      // pseudo-external if the rest touches Q.
      const bool n_in_q = north && on_q && h2 == d.high(t + 1);
      const bool e_in_p = !north && on_p && h2 == d.low(t + 1);
      for (int a2 = 0; a2 <= a2_dim; ++a2) {
        for (int b2 = 0; b2 <= b2_dim; ++b2) {
          for (int tp2 = 0; tp2 <= 1; ++tp2) {
            for (int tq2 = 0; tq2 <= 1; ++tq2) {
              const BigInt& v = from[cell_index(b2_dim, a2, b2, tp2, tq2)];
              if (v.is_zero()) continue;
              const int a = a2 + (n_in_q && tp2 ? 1 : 0);
              const int b = b2 + (e_in_p && tq2 ? 1 : 0);
              block[cell_index(b_dim, a, b, on_p || tp2, on_q || tq2)] += v;
            }
          }
        }
      }
    }
  }
  return s;
}

std::int64_t slice_cells(const Slice& s) {
  std::int64_t total = 0;
  for (const auto& block : s.cells) total += static_cast<std::int64_t>(block.size());
  return total;
}

// Contribution of the bases through end point j that contain label 1 and
// whose prefix [t] lies in B with t+1 outside, read from slice t+1.
void add_prefix_classes(const Diagram& d, int j, int t, const Slice& slice,
                        BivariatePolynomial& out) {
  const int h = d.start_height(j) + t;
  for (int s = 0; s <= t; ++s) {
    if (!d.contains(s, d.start_height(j) + s)) return;
  }
  if (!d.contains(t + 1, h)) return;
  bool prefix_touches_q = false;
  for (int s = 0; s <= t; ++s) {
    prefix_touches_q |= d.on_top(s, d.start_height(j) + s);
  }
  prefix_touches_q |= d.on_top(t + 1, h);
  const bool east_in_p = d.on_bottom(t, h) && d.on_bottom(t + 1, h);
  const auto& block = slice.cells[h - slice.low];
  if (block.empty()) return;
  const int a_dim = slice.a_dim[h - slice.low];
  const int b_dim = slice.b_dim[h - slice.low];
  for (int a = 0; a <= a_dim; ++a) {
    for (int b = 0; b <= b_dim; ++b) {
      for (int tp = 0; tp <= 1; ++tp) {
        for (int tq = 0; tq <= 1; ++tq) {
          // The counted representation is the one touching Q.
          if (!prefix_touches_q && !tq) continue;
          const BigInt& v = block[cell_index(b_dim, a, b, tp, tq)];
          if (v.is_zero()) continue;
          out.coefficient(t + a, b + (east_in_p && tq ? 1 : 0)) += v;
        }
      }
    }
  }
}

// Activity classes of the bases containing label 1, from end point j.
BivariatePolynomial classes_with_first(const Diagram& d, int j,
                                       std::int64_t& cells) {
  BivariatePolynomial out(d.r(), d.m());
  if (d.r() == 0) return out;
  if (d.m() == 0) {
    if (j == 1) out.coefficient(d.r(), 0) = 1;
    return out;
  }
  const int n = d.size();
  Slice slice = terminal_slice(d, j);
  cells += slice_cells(slice);
  for (int time = n; time >= 2; --time) {
    if (time < n) {
      slice = step_back(d, j, slice);
      cells += slice_cells(slice);
    }
    if (time - 1 <= d.r()) add_prefix_classes(d, j, time - 1, slice, out);
  }
  return out;
}

}  // namespace

PathRepresentation::PathRepresentation(const Diagram& d, ElementSet subject,
                                       int start)
    : diagram_(d), subject_(std::move(subject)), start_(start) {
  const int n = d.size();
  if (start < 1 || start > d.k()) {
    throw DomainError("start index " + std::to_string(start) +
                      " is outside 1.." + std::to_string(d.k()));
  }
  std::sort(subject_.begin(), subject_.end());
  std::string w(static_cast<std::size_t>(n), 'E');
  for (Element u : subject_) {
    if (u < 1 || u > n) {
      throw DomainError("label " + std::to_string(u) + " is outside 1.." +
                        std::to_string(n));
    }
    w[u - 1] = 'N';
  }
  word_ = LatticePath(std::move(w));
  heights_.resize(n + 1);
  heights_[0] = d.start_height(start);
  for (int t = 0; t < n; ++t) {
    heights_[t + 1] = heights_[t] + (word_.is_north(t) ? 1 : 0);
  }
  for (int t = 0; t <= n && valid_; ++t) valid_ = d.contains(t, heights_[t]);
  valid_ = valid_ && heights_[n] == d.end_height(start);
}

TimeRange PathRepresentation::points(int v, int u, Ends ends) {
  const int first_step =
      v + (ends == Ends::kOpenLeft || ends == Ends::kOpen ? 1 : 0);
  const int last_step =
      u - (ends == Ends::kOpenRight || ends == Ends::kOpen ? 1 : 0);
  return {first_step - 1, last_step};
}

bool PathRepresentation::touches_top(TimeRange range) const {
  for (int t = std::max(range.first, 0);
       t <= std::min(range.last, diagram_.size()); ++t) {
    if (diagram_.on_top(t, heights_[t])) return true;
  }
  return false;
}

bool PathRepresentation::touches_bottom(TimeRange range) const {
  for (int t = std::max(range.first, 0);
       t <= std::min(range.last, diagram_.size()); ++t) {
    if (diagram_.on_bottom(t, heights_[t])) return true;
  }
  return false;
}

bool PathRepresentation::step_in_top(int u) const {
  return diagram_.on_top(u - 1, heights_[u - 1]) &&
         diagram_.on_top(u, heights_[u]);
}

bool PathRepresentation::step_in_bottom(int u) const {
  return diagram_.on_bottom(u - 1, heights_[u - 1]) &&
         diagram_.on_bottom(u, heights_[u]);
}

PathRepresentation represent(const Diagram& d, const ElementSet& x, int i) {
  return PathRepresentation(d, x, i);
}

std::vector<int> valid_starts(const Diagram& d, const ElementSet& b) {
  std::vector<int> out;
  for (int i = 1; i <= d.k(); ++i) {
    if (PathRepresentation(d, b, i).valid()) out.push_back(i);
  }
  return out;
}

bool exchange_feasible(const Diagram& d, const ElementSet& b, int i, int u,
                       int v) {
  const PathRepresentation path(d, b, i);
  if (!path.valid()) throw DomainError("the representation is not valid");
  if (!contains_label(path.subject(), u)) throw DomainError("u must lie in B");
  if (contains_label(path.subject(), v)) throw DomainError("v must avoid B");
  const int n = d.size();
  using P = PathRepresentation;
  if (v < u) {
    return !path.touches_top(P::points(v, u, Ends::kOpen)) ||
           (!path.touches_bottom(P::points(1, v, Ends::kOpenRight)) &&
            !path.touches_bottom(P::points(u, n, Ends::kOpenLeft)));
  }
  return !path.touches_bottom(P::points(u, v, Ends::kOpen)) ||
         (!path.touches_top(P::points(1, u, Ends::kOpenRight)) &&
          !path.touches_top(P::points(v, n, Ends::kOpenLeft)));
}

ActivityCounts basis_activities(const Diagram& d, const ElementSet& b, int i) {
  const PathRepresentation path(d, b, i);
  if (!path.valid()) throw DomainError("the representation is not valid");
  const int n = d.size();
  const ElementSet& set = path.subject();
  ActivityCounts out;
  int prefix_in = 0;  // length of the run 1, 2, ... inside B
  while (prefix_in < n && contains_label(set, prefix_in + 1)) ++prefix_in;
  for (int u = 1; u <= n; ++u) {
    const TimeRange rest = PathRepresentation::points(u, n, Ends::kOpenLeft);
    if (contains_label(set, u)) {
      if (u <= prefix_in ||
          (path.step_in_top(u) && path.touches_bottom(rest))) {
        ++out.internal;
      }
    } else {
      const bool none_before = set.empty() || set.front() > u;
      if (none_before ||
          (path.step_in_bottom(u) && path.touches_top(rest))) {
        ++out.external;
      }
    }
  }
  return out;
}

ActivityCounts basis_activities(const Diagram& d, const ElementSet& b) {
  const auto starts = valid_starts(d, b);
  if (starts.empty()) throw DomainError("set is not a basis of the diagram");
  return basis_activities(d, b, starts.front());
}

BigInt GammaTable::value(int t, int h, int j, int a, int b, bool touch_bottom,
                         bool touch_top) const {
  if (j < 1 || j > static_cast<int>(slices_.size()) || t < 0 || t > size_) {
    return 0;
  }
  const Slice& s = slices_[j - 1][t];
  const int idx = h - s.low;
  if (idx < 0 || idx >= static_cast<int>(s.cells.size())) return 0;
  if (s.cells[idx].empty() || a < 0 || b < 0 || a > s.a_dim[idx] ||
      b > s.b_dim[idx]) {
    return 0;
  }
  return s.cells[idx][cell_index(s.b_dim[idx], a, b, touch_bottom, touch_top)];
}

GammaTable compute_gamma(const Diagram& d, Execution exec) {
  GammaTable table;
  table.size_ = d.size();
  table.slices_.resize(d.k());
  auto fill = [&](int j) {
    auto& column = table.slices_[j - 1];
    column.resize(d.size() + 1);
    column[d.size()] = terminal_slice(d, j);
    for (int t = d.size() - 1; t >= 0; --t) {
      column[t] = step_back(d, j, column[t + 1]);
    }
  };
  if (exec == Execution::kParallel) {
#pragma omp parallel for schedule(dynamic)
    for (int j = 1; j <= d.k(); ++j) fill(j);
  } else {
    for (int j = 1; j <= d.k(); ++j) fill(j);
  }
  for (const auto& column : table.slices_) {
    for (const auto& s : column) table.cells_ += slice_cells(s);
  }
  return table;
}

BivariatePolynomial activity_polynomial(const Diagram& d, Execution exec,
                                        std::int64_t* gamma_cells) {
  if (d.size() == 0) {
    if (gamma_cells) *gamma_cells = 0;
    return BivariatePolynomial::constant(1);
  }
  // Bases avoiding label 1 are complements of bases of the dual containing
  // it, with internal and external activity exchanged.
  const Diagram dual = reflect_dual(d);
  const int k = d.k();
  const int tasks = 2 * k;
  std::vector<BivariatePolynomial> parts(tasks);
  std::vector<std::int64_t> cells(tasks, 0);
  auto run = [&](int task) {
    const Diagram& side = task < k ? d : dual;
    parts[task] = classes_with_first(side, task % k + 1, cells[task]);
  };
  if (exec == Execution::kParallel) {
#pragma omp parallel for schedule(dynamic)
    for (int task = 0; task < tasks; ++task) run(task);
  } else {
    for (int task = 0; task < tasks; ++task) run(task);
  }
  BivariatePolynomial out(d.r(), d.m());
  for (int task = 0; task < tasks; ++task) {
    out += task < k ? parts[task] : parts[task].swapped();
  }
  if (gamma_cells) {
    *gamma_cells = 0;
    for (auto c : cells) *gamma_cells += c;
  }
  return out;
}

std::map<std::pair<int, int>, BigInt> count_activity_classes(
    const Diagram& d, Execution exec) {
  const BivariatePolynomial p = activity_polynomial(d, exec);
  std::map<std::pair<int, int>, BigInt> out;
  for (int i = 0; i <= p.max_x(); ++i) {
    for (int e = 0; e <= p.max_y(); ++e) {
      if (!p.coefficient(i, e).is_zero()) out[{i, e}] = p.coefficient(i, e);
    }
  }
  return out;
}

BivariatePolynomial tutte_via_activities(const SigmaIntervalSystem& sys,
                                         Execution exec) {
  const LoopFreeCore core = split_loops(sys);
  const BivariatePolynomial t = core.diagram
                                    ? activity_polynomial(*core.diagram, exec)
                                    : BivariatePolynomial::constant(1);
  return reinstate_loops(t, core);
}

}  // namespace multipath
