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

#ifndef MULTIPATH_ORACLE_H_
#define MULTIPATH_ORACLE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "multipath/cyclic.h"
#include "multipath/execution.h"
#include "multipath/polynomial.h"
#include "multipath/presentation.h"

// Brute-force ground truth for small transversal matroids. Nothing here is
// clever: rank is a bipartite matching and everything else enumerates
// subsets. Use it to check the diagram engines, never as one.
namespace multipath::oracle {

inline constexpr int kMaxEnumerationSize = 20;
inline constexpr int kMaxConnectivitySize = 16;

// A set system (A_1, ..., A_r) over 1..n; sets need not be intervals.
struct SetSystem {
  int n = 0;
  std::vector<ElementSet> sets;
};

SetSystem to_set_system(const SigmaIntervalSystem& sys);

// Size of a maximum matching of `subset` into the sets (augmenting paths).
int rank(const SetSystem& sys, std::span<const Element> subset);

// Same, with subsets as bitmasks over 1..n (bit e-1 for element e).
using Mask = std::uint32_t;
int rank_mask(const SetSystem& sys, Mask subset);

Mask to_mask(std::span<const Element> set);
ElementSet from_mask(Mask mask);

// Every basis, lexicographically sorted. ResourceError above 20 elements.
std::vector<ElementSet> bases_bruteforce(const SetSystem& sys);

// Sum over A of (x-1)^{r(S)-r(A)} (y-1)^{|A|-r(A)}. ResourceError above 20
// elements. The subset loop is the parallel kernel.
BivariatePolynomial tutte_subset_expansion(
    const SetSystem& sys, Execution exec = Execution::kParallel);

// The same expansion for the matroid whose bases are given explicitly on
// ground set 1..n (rank of A is the largest |A n B|).
BivariatePolynomial tutte_from_bases(int n, std::span<const ElementSet> bases);

struct Activities {
  int internal = 0;
  int external = 0;
  friend bool operator==(const Activities&, const Activities&) = default;
};

// i(B) and e(B) under 1 < 2 < ... < n by direct exchange tests. Throws
// DomainError if B is not a basis.
Activities activities_by_definition(const SetSystem& sys, const ElementSet& b);

// Explicit-basis variant used when the basis list is already at hand.
Activities activities_by_definition(int n, std::span<const ElementSet> bases,
                                    const ElementSet& b);

// No proper nonempty X with r(X) + r(S - X) = r(S). ResourceError above 16
// elements.
bool is_connected_bruteforce(const SetSystem& sys);

}  // namespace multipath::oracle

#endif  // MULTIPATH_ORACLE_H_
