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

#include "multipath/diagram.h"

#include <algorithm>
#include <sstream>

#include "multipath/errors.h"

namespace multipath {
namespace {

// Number of monotone paths from height `from` at time 0 to height `to` at
// time size(), staying in low(t) <= h <= high(t) - shrink.
BigInt count_band_paths(const Diagram& d, int from, int to, int shrink) {
  const int n = d.size();
  auto in_band = [&](int t, int h) {
    return h >= d.low(t) && h <= d.high(t) - shrink;
  };
  if (!in_band(0, from)) return 0;
  const int top = d.high(n) + 1;
  std::vector<BigInt> ways(top + 1, 0), next(top + 1, 0);
  ways[from] = 1;
  for (int t = 0; t < n; ++t) {
    for (int h = d.low(t + 1); h <= d.high(t + 1) - shrink; ++h) {
      next[h] = 0;
      if (in_band(t, h)) next[h] += ways[h];                    // East
      if (h > 0 && in_band(t, h - 1)) next[h] += ways[h - 1];   // North
    }
    for (int h = d.low(t); h <= d.high(t) - shrink; ++h) {
      if (h < d.low(t + 1) || h > d.high(t + 1) - shrink) ways[h] = 0;
    }
    for (int h = d.low(t + 1); h <= d.high(t + 1) - shrink; ++h) {
      ways[h].swap(next[h]);
    }
  }
  return in_band(n, to) ? ways[to] : BigInt(0);
}

// Endpoints of a cyclically contiguous proper subset of 1..n.
SigmaInterval interval_from_set(int n, const ElementSet& set) {
  std::vector<char> in(n + 2, 0);
  for (Element e : set) in[e] = 1;
  auto prev = [n](Element e) { return e == 1 ? n : e - 1; };
  auto next = [n](Element e) { return e == n ? 1 : e + 1; };
  for (Element e : set) {
    if (in[prev(e)]) continue;
    Element last = e;
    int count = 1;
    while (in[next(last)] && count < n) {
      last = next(last);
      ++count;
    }
    if (count != static_cast<int>(set.size())) break;
    return {e, last};
  }
  throw DomainError("row labels do not form a proper sigma-interval");
}

}  // namespace

LatticePath::LatticePath(std::string word) : word_(std::move(word)) {
  for (char c : word_) {
    if (c != 'E' && c != 'N') {
      throw DomainError(std::string("lattice path step must be E or N, got '") +
                        c + "'");
    }
  }
}

int LatticePath::north_count() const {
  return static_cast<int>(std::count(word_.begin(), word_.end(), 'N'));
}

LatticePath LatticePath::swapped() const {
  std::string w = word_;
  for (char& c : w) c = c == 'E' ? 'N' : 'E';
  return LatticePath(std::move(w));
}

LatticePath LatticePath::reversed() const {
  return LatticePath(std::string(word_.rbegin(), word_.rend()));
}

LatticePath LatticePath::operator+(const LatticePath& tail) const {
  return LatticePath(word_ + tail.word_);
}

LatticePath repeat(char step, int count) {
  return LatticePath(std::string(static_cast<std::size_t>(count), step));
}

Diagram::Diagram(int k, int m, int r, LatticePath bottom, LatticePath top)
    : k_(k), m_(m), r_(r), bottom_(std::move(bottom)), top_(std::move(top)) {
  if (k < 1 || m < 0 || r < 0) {
    throw DomainError("diagram needs k >= 1 and m, r >= 0");
  }
  for (const LatticePath* path : {&bottom_, &top_}) {
    const char* name = path == &bottom_ ? "P" : "Q";
    if (path->size() != m + r) {
      throw DomainError(std::string(name) + " must have m+r = " +
                        std::to_string(m + r) + " steps");
    }
    if (path->north_count() != r) {
      throw DomainError(std::string(name) + " must have r = " +
                        std::to_string(r) + " North steps");
    }
  }
  low_.resize(m + r + 1);
  high_.resize(m + r + 1);
  low_[0] = 0;
  high_[0] = k - 1;
  for (int t = 0; t < m + r; ++t) {
    low_[t + 1] = low_[t] + (bottom_.is_north(t) ? 1 : 0);
    high_[t + 1] = high_[t] + (top_.is_north(t) ? 1 : 0);
  }
  for (int t = 0; t <= m + r; ++t) {
    if (high_[t] < low_[t]) {
      auto [x, y] = point(t, high_[t]);
      throw DomainError("Q goes below P at (" + std::to_string(x) + "," +
                        std::to_string(y) + ")");
    }
  }
}

std::string Diagram::encoding() const {
  return std::to_string(k_) + "," + std::to_string(m_) + "," +
         std::to_string(r_) + "," + bottom_.word() + "," + top_.word();
}

Element anchored_element(int n, Element anchor, int label) {
  return (anchor - 1 + label - 1) % n + 1;
}

Diagram build_diagram(const SigmaIntervalSystem& sys, Element x) {
  const CyclicOrder& order = sys.order();
  order.require_member(x);
  if (sys.interval_count() == 0) {
    throw DomainError("a diagram needs at least one interval");
  }
  if (!is_antichain(sys)) {
    throw PreconditionError("diagrams are built from antichains");
  }
  const int n = sys.size();
  const int r = sys.interval_count();
  std::vector<char> is_first(n + 1, 0), is_last(n + 1, 0);
  int k = 1;
  for (const auto& iv : sys.intervals()) {
    is_first[iv.first] = 1;
    is_last[iv.last] = 1;
    if (iv.first != x && interval_contains(order, iv, x)) ++k;
  }
  std::string bottom, top;
  for (int label = 1; label <= n; ++label) {
    const Element e = anchored_element(n, x, label);
    bottom += is_last[e] ? 'N' : 'E';
    top += is_first[e] ? 'N' : 'E';
  }
  return Diagram(k, n - r, r, LatticePath(bottom), LatticePath(top));
}

std::vector<ElementSet> label_sets(const Diagram& d) {
  if (count_bases(d) > kMaxListedBases) {
    throw ResourceError("too many label-sets to list");
  }
  const int n = d.size();
  std::vector<ElementSet> out;
  ElementSet current;
  // Depth-first over (t, h); records at time n.
  auto walk = [&](auto&& self, int t, int h, int end) -> void {
    if (t == n) {
      if (h == end) out.push_back(current);
      return;
    }
    if (d.contains(t + 1, h)) self(self, t + 1, h, end);
    if (d.contains(t + 1, h + 1)) {
      current.push_back(t + 1);
      self(self, t + 1, h + 1, end);
      current.pop_back();
    }
  };
  for (int i = 1; i <= d.k(); ++i) {
    walk(walk, 0, d.start_height(i), d.end_height(i));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BigInt count_bases(const Diagram& d) {
  // A word is valid from a contiguous run of start points, so it is
  // counted once by (#valid starts) - (#adjacent valid pairs). Both p_i
  // and p_{i+1} are valid exactly when the p_i path avoids Q.
  BigInt total = 0;
  for (int i = 1; i <= d.k(); ++i) {
    total += count_band_paths(d, d.start_height(i), d.end_height(i), 0);
  }
  for (int i = 1; i < d.k(); ++i) {
    total -= count_band_paths(d, d.start_height(i), d.end_height(i), 1);
  }
  return total;
}

Diagram reflect_dual(const Diagram& d) {
  return Diagram(d.k(), d.r(), d.m(), d.top().swapped(), d.bottom().swapped());
}

Diagram rotate_half_turn(const Diagram& d) {
  return Diagram(d.k(), d.m(), d.r(), d.top().reversed(),
                 d.bottom().reversed());
}

Extension extend(const Diagram& d) {
  const int k = d.k();
  const int tail = k + 1;
  Diagram ext(k, d.m(), d.r() + tail, d.bottom() + repeat('N', tail),
              d.top() + repeat('N', tail));
  const int n = ext.size();
  const int rows = ext.r() + k - 1;  // R_1 .. R_{r+2k} of the extension

  std::vector<ElementSet> row_labels(rows + 1);
  for (int j = 1; j <= rows; ++j) {
    for (int t = 0; t < n; ++t) {
      if (ext.contains(t, j - 1) && ext.contains(t + 1, j)) {
        row_labels[j].push_back(t + 1);
      }
    }
  }
  std::vector<SigmaInterval> intervals;
  const int r = d.r();
  for (int j = 1; j < k; ++j) {
    ElementSet merged = row_labels[j];
    const auto& upper = row_labels[r + k + j + 1];
    merged.insert(merged.end(), upper.begin(), upper.end());
    std::sort(merged.begin(), merged.end());
    intervals.push_back(interval_from_set(n, merged));
  }
  for (int j = k; j <= k + r + 1; ++j) {
    intervals.push_back(interval_from_set(n, row_labels[j]));
  }
  ElementSet z;
  for (int e = d.size() + 1; e <= n; ++e) z.push_back(e);
  return Extension{std::move(ext), std::move(z),
                   SigmaIntervalSystem(n, std::move(intervals))};
}

std::optional<Diagram> initial_minor_diagram(const Diagram& d,
                                             const ElementSet& deleted,
                                             const ElementSet& contracted) {
  const int n = d.size();
  const int q = static_cast<int>(deleted.size() + contracted.size());
  if (q > n) throw PreconditionError("more elements removed than exist");
  // Forced suffix: label u is N iff u is contracted.
  std::vector<int> forced(n + 1, -1);
  for (Element e : deleted) {
    if (e <= n - q || e > n || forced[e] != -1) {
      throw PreconditionError("deleted and contracted sets must partition "
                              "the last labels");
    }
    forced[e] = 0;
  }
  for (Element e : contracted) {
    if (e <= n - q || e > n || forced[e] != -1) {
      throw PreconditionError("deleted and contracted sets must partition "
                              "the last labels");
    }
    forced[e] = 1;
  }
  const int ycount = static_cast<int>(contracted.size());
  const int xcount = static_cast<int>(deleted.size());

  // a - 1 = max over suffix lengths of N(forced) - N(P); k - b is the same
  // maximum taken over East steps against Q.
  int lower_slack = 0;
  int upper_slack = 0;
  int n_forced = 0, n_bottom = 0, n_top = 0;
  for (int len = 1; len <= q; ++len) {
    const int step = n - len;  // 0-based index of label n-len+1
    n_forced += forced[step + 1];
    n_bottom += d.bottom().is_north(step) ? 1 : 0;
    n_top += d.top().is_north(step) ? 1 : 0;
    lower_slack = std::max(lower_slack, n_forced - n_bottom);
    upper_slack = std::max(upper_slack, n_top - n_forced);
  }
  const int a = lower_slack + 1;
  const int b = d.k() - upper_slack;
  if (a > b) return std::nullopt;

  const int horizon = n - q;
  const int m2 = d.m() - xcount;
  const int r2 = d.r() - ycount;
  if (m2 < 0 || r2 < 0) return std::nullopt;
  if (horizon == 0) return Diagram(1, 0, 0, LatticePath(), LatticePath());

  // Lowest path p_a -> p''_a and highest path p_b -> p''_b in the band.
  const int target_a = a - 1 + r2;
  const int target_b = b - 1 + r2;
  std::vector<int> lo(horizon + 1), hi(horizon + 1);
  for (int t = 0; t <= horizon; ++t) {
    lo[t] = std::max({d.low(t), target_a - (horizon - t), a - 1});
    hi[t] = std::min({d.high(t), target_b, b - 1 + t});
  }
  for (int t = 0; t <= horizon; ++t) {
    if (lo[t] > hi[t]) return std::nullopt;
  }
  std::string bottom, top;
  for (int t = 0; t < horizon; ++t) {
    bottom += lo[t + 1] > lo[t] ? 'N' : 'E';
    top += hi[t + 1] > hi[t] ? 'N' : 'E';
  }
  return Diagram(b - a + 1, m2, r2, LatticePath(bottom), LatticePath(top));
}

ElementKind classify_greatest_element(const Diagram& d) {
  if (d.size() == 0) throw DomainError("empty diagram has no elements");
  const ElementSet last{d.size()};
  const bool can_contract = initial_minor_diagram(d, {}, last).has_value();
  const bool can_delete = initial_minor_diagram(d, last, {}).has_value();
  if (!can_contract && !can_delete) {
    throw DomainError("diagram has no b-path through its last step");
  }
  if (!can_contract) return ElementKind::kLoop;
  if (!can_delete) return ElementKind::kIsthmus;
  return ElementKind::kOrdinary;
}

std::string format_diagram(const Diagram& d) {
  std::ostringstream out;
  out << "diagram\n"
      << "k " << d.k() << "\n"
      << "m " << d.m() << "\n"
      << "r " << d.r() << "\n"
      << "P" << (d.bottom().size() ? " " + d.bottom().word() : "") << "\n"
      << "Q" << (d.top().size() ? " " + d.top().word() : "") << "\n";
  return out.str();
}

}  // namespace multipath
