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


#ifndef MULTIPATH_ACTIVITIES_H_
#define MULTIPATH_ACTIVITIES_H_

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "multipath/diagram.h"
#include "multipath/execution.h"
#include "multipath/polynomial.h"
#include "multipath/presentation.h"

namespace multipath {

// Which ends of a step range [v, u] are excluded.
enum class Ends { kClosed, kOpenLeft, kOpenRight, kOpen };

// Inclusive range of times (lattice points) visited by a run of steps.
// Empty when first > last.
struct TimeRange {
  int first = 0;
  int last = -1;
};

// Pi(X, p_i): the (m+r)-step word whose u-th step is N iff u is in X,
// started at p_i.
class PathRepresentation {
 public:
  // Throws DomainError if i is outside 1..k or X has labels outside
  // 1..m+r.
  PathRepresentation(const Diagram& d, ElementSet subject, int start);

  const ElementSet& subject() const { return subject_; }
  int start() const { return start_; }
  const LatticePath& word() const { return word_; }
  // Inside the region throughout and ending at p'_start.
  bool valid() const { return valid_; }
  int height(int t) const { return heights_[t]; }

  // Points of the sub-path made of steps v..u, with ends dropped as asked;
  // (v, u) is steps v+1..u-1. A sub-path with no steps still has its start
  // point, so (v, v+1) is the single point reached after step v.
  static TimeRange points(int v, int u, Ends ends);

  bool touches_top(TimeRange range) const;
  bool touches_bottom(TimeRange range) const;
  // The u-th step is an edge of Q (resp. P).
  bool step_in_top(int u) const;
  bool step_in_bottom(int u) const;

 private:
  Diagram diagram_;
  ElementSet subject_;
  int start_;
  LatticePath word_;
  std::vector<int> heights_;
  bool valid_ = true;
};

PathRepresentation represent(const Diagram& d, const ElementSet& x, int i);

// Start indices i with Pi(B, p_i) valid, ascending.
std::vector<int> valid_starts(const Diagram& d, const ElementSet& b);

// Whether (B - u) + v is a basis, read off the valid path Pi(B, p_i).
// Throws DomainError if u is not in B, v is in B, or the path is invalid.
bool exchange_feasible(const Diagram& d, const ElementSet& b, int i, int u,
                       int v);

struct ActivityCounts {
  int internal = 0;
  int external = 0;
  friend bool operator==(const ActivityCounts&, const ActivityCounts&) =
      default;
};

// i(B) and e(B) under 1 < ... < m+r from the valid path started at p_i.
ActivityCounts basis_activities(const Diagram& d, const ElementSet& b, int i);
// Same, from the lowest valid start. DomainError if B is not a basis.
ActivityCounts basis_activities(const Diagram& d, const ElementSet& b);

// Gamma(p, p'_j, a, b, tP, tQ): valid paths from p to p'_j with a
// pseudo-internally active N steps (on Q, rest touches P), b
// pseudo-externally active E steps (on P, rest touches Q), tP / tQ telling
// whether the path touches P / Q. Points are (t, h) as in Diagram.
class GammaTable {
 public:
  GammaTable() = default;

  BigInt value(int t, int h, int j, int a, int b, bool touch_bottom,
               bool touch_top) const;

  // Stored cells, counting every (a, b, tP, tQ) slot.
  std::int64_t cell_count() const { return cells_; }

  // One time slice for one end point: per height, a dense block indexed by
  // (a, b, tP, tQ). Blocks are empty where p'_j is out of reach.
  struct Slice {
    int t = 0;
    int low = 0;
    std::vector<int> a_dim;
    std::vector<int> b_dim;
    std::vector<std::vector<BigInt>> cells;
  };

 private:
  friend GammaTable compute_gamma(const Diagram& d, Execution exec);
  int size_ = 0;
  std::int64_t cells_ = 0;
  std::vector<std::vector<Slice>> slices_;  // [j - 1][t]
};

// Every Gamma value of d, filled backwards from each end point.
GammaTable compute_gamma(const Diagram& d,
                         Execution exec = Execution::kParallel);

// sum over bases B of x^i(B) y^e(B), grouped by (i, e).
std::map<std::pair<int, int>, BigInt> count_activity_classes(
    const Diagram& d, Execution exec = Execution::kParallel);

// The same sum as a polynomial boxed (r, m). `gamma_cells`, when given,
// receives the number of Gamma cells evaluated.
BivariatePolynomial activity_polynomial(const Diagram& d,
                                        Execution exec = Execution::kParallel,
                                        std::int64_t* gamma_cells = nullptr);

BivariatePolynomial tutte_via_activities(
    const SigmaIntervalSystem& sys, Execution exec = Execution::kParallel);

}  // namespace multipath

#endif  // MULTIPATH_ACTIVITIES_H_
