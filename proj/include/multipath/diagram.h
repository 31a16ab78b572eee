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

#ifndef MULTIPATH_DIAGRAM_H_
#define MULTIPATH_DIAGRAM_H_

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "multipath/cyclic.h"
#include "multipath/polynomial.h"
#include "multipath/presentation.h"

namespace multipath {

// A word over {E, N}; E = (1, 0), N = (0, 1).
class LatticePath {
 public:
  LatticePath() = default;
  // Throws DomainError on characters other than 'E' and 'N'.
  explicit LatticePath(std::string word);

  const std::string& word() const { return word_; }
  int size() const { return static_cast<int>(word_.size()); }
  bool is_north(int step) const { return word_[step] == 'N'; }
  int north_count() const;
  int east_count() const { return size() - north_count(); }

  // E <-> N.
  LatticePath swapped() const;
  LatticePath reversed() const;
  LatticePath operator+(const LatticePath& tail) const;

  friend auto operator<=>(const LatticePath&, const LatticePath&) = default;

 private:
  std::string word_;
};

// "E^5 N E N^2" style expansion helper: repeat(step, count).
LatticePath repeat(char step, int count);

// The 5-tuple (k, m, r, P, Q). P runs from (k-1, 0) to (k-1+m, r) and Q
// from (0, k-1) to (m, k-1+r), with Q never below P. Start points are
// p_i = (k-i, i-1) and end points p'_i = p_i + (m, r) for 1 <= i <= k.
//
// Every lattice point of the region lies on an antidiagonal x + y = k-1+t
// with 0 <= t <= m+r, so a point is addressed as (t, h) with h its height.
// The region cut on antidiagonal t is the segment low(t) <= h <= high(t)
// where low follows P and high follows Q. Steps leaving time t carry label
// t+1, so a path of m+r steps from p_i to p'_i reads its label-set off the
// times of its North steps.
class Diagram {
 public:
  // Throws DomainError if a border has the wrong length or North count, or
  // if Q dips below P (the message names the first offending point).
  Diagram(int k, int m, int r, LatticePath bottom, LatticePath top);

  int k() const { return k_; }
  int m() const { return m_; }
  int r() const { return r_; }
  int size() const { return m_ + r_; }
  const LatticePath& bottom() const { return bottom_; }
  const LatticePath& top() const { return top_; }

  int low(int t) const { return low_[t]; }
  int high(int t) const { return high_[t]; }
  bool contains(int t, int h) const {
    return t >= 0 && t <= size() && h >= low_[t] && h <= high_[t];
  }
  bool on_bottom(int t, int h) const { return h == low_[t]; }
  bool on_top(int t, int h) const { return h == high_[t]; }

  // Heights of p_i and p'_i (1 <= i <= k).
  int start_height(int i) const { return i - 1; }
  int end_height(int i) const { return i - 1 + r_; }

  // Plane coordinates of (t, h).
  std::pair<int, int> point(int t, int h) const {
    return {k_ - 1 + t - h, h};
  }

  // "k,m,r,P,Q"; the canonical identity used for deduplication.
  std::string encoding() const;

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.key() == b.key();
  }
  friend std::strong_ordering operator<=>(const Diagram& a,
                                         const Diagram& b) {
    return a.key() <=> b.key();
  }

 private:
  std::tuple<const int&, const int&, const int&, const LatticePath&,
             const LatticePath&>
  key() const {
    return std::tie(k_, m_, r_, bottom_, top_);
  }

  int k_;
  int m_;
  int r_;
  LatticePath bottom_;
  LatticePath top_;
  std::vector<int> low_;
  std::vector<int> high_;
};

// D(I, x) for an antichain with at least one interval. Diagram label j
// stands for the element sigma^{j-1}(x); see anchored_element. Throws
// DomainError for an empty interval list and PreconditionError for a
// non-antichain.
Diagram build_diagram(const SigmaIntervalSystem& sys, Element x);

// The element carried by diagram label `label` when the diagram was built
// at `anchor` over n elements.
Element anchored_element(int n, Element anchor, int label);

// Label-sets of all b-paths, sorted lexicographically. ResourceError when
// there are more than kMaxListedBases of them.
inline constexpr long long kMaxListedBases = 2'000'000;
std::vector<ElementSet> label_sets(const Diagram& d);

// Number of distinct label-sets, without enumeration.
BigInt count_bases(const Diagram& d);

// Reflection in y = x: (k, r, m, Q with E<->N, P with E<->N). Its label-sets
// are the complements of those of d.
Diagram reflect_dual(const Diagram& d);

// 180 degree rotation: (k, m, r, reverse(Q), reverse(P)).
Diagram rotate_half_turn(const Diagram& d);

struct Extension {
  Diagram diagram;
  ElementSet contracted;  // Z, the last k+1 elements
  SigmaIntervalSystem presentation;
};

// D' = (k, m, r+k+1, P N^{k+1}, Q N^{k+1}) with the antichain read off its
// rows; M[d] is the contraction of M[presentation] by Z.
Extension extend(const Diagram& d);

// The diagram of the initial minor M[d] \ X / Y, where X and Y partition
// the last q labels. Absent when no b-path realizes the forced suffix
// (X dependent in the dual or Y dependent). Throws PreconditionError if X
// and Y do not partition a suffix. An empty result always has k = 1.
std::optional<Diagram> initial_minor_diagram(const Diagram& d,
                                             const ElementSet& deleted,
                                             const ElementSet& contracted);

enum class ElementKind { kLoop, kIsthmus, kOrdinary };

// Kind of the greatest label m+r. Throws DomainError on an empty diagram.
ElementKind classify_greatest_element(const Diagram& d);

// Diagram text block: "diagram", "k <int>", "m <int>", "r <int>",
// "P <word>", "Q <word>" (an empty word leaves the line as just "P").
std::string format_diagram(const Diagram& d);

}  // namespace multipath

#endif  // MULTIPATH_DIAGRAM_H_
