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

#include "multipath/oracle.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "multipath/errors.h"

namespace multipath {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace oracle {
namespace {

void guard(int n, int limit, const char* what) {
  if (n > limit) {
    throw ResourceError(std::string(what) + " is limited to " +
                        std::to_string(limit) + " elements, got " +
                        std::to_string(n));
  }
}

// Kuhn's augmenting-path matching of elements into sets.
class Matcher {
 public:
  explicit Matcher(const SetSystem& sys)
      : n_(sys.n), member_(sys.sets.size(), std::vector<char>(sys.n + 1, 0)) {
    for (std::size_t s = 0; s < sys.sets.size(); ++s) {
      for (Element e : sys.sets[s]) {
        if (e < 1 || e > n_) {
          throw InvalidElementError("set system element out of range");
        }
        member_[s][e] = 1;
      }
    }
  }

  int match(std::span<const Element> subset) {
    owner_.assign(member_.size(), 0);
    int size = 0;
    for (Element e : subset) {
      if (e < 1 || e > n_) {
        throw InvalidElementError("element " + std::to_string(e) +
                                  " is not in the ground set");
      }
      seen_.assign(member_.size(), 0);
      if (augment(e)) ++size;
    }
    return size;
  }

 private:
  bool augment(Element e) {
    for (std::size_t s = 0; s < member_.size(); ++s) {
      if (!member_[s][e] || seen_[s]) continue;
      seen_[s] = 1;
      if (owner_[s] == 0 || augment(owner_[s])) {
        owner_[s] = e;
        return true;
      }
    }
    return false;
  }

  int n_;
  std::vector<std::vector<char>> member_;
  std::vector<Element> owner_;
  std::vector<char> seen_;
};

// counts[a][b] = #{A : r(S) - r(A) = a, |A| - r(A) = b} expanded in x, y.
BivariatePolynomial expand_corank_nullity(
    const std::vector<std::vector<std::int64_t>>& counts, int full_rank,
    int nullity) {
  const int dim = std::max(full_rank, nullity) + 1;
  std::vector<std::vector<BigInt>> binom(dim, std::vector<BigInt>(dim, 0));
  for (int a = 0; a < dim; ++a) {
    binom[a][0] = 1;
    for (int i = 1; i <= a; ++i) binom[a][i] = binom[a - 1][i - 1] + binom[a - 1][i];
  }
  BivariatePolynomial t(full_rank, nullity);
  for (int a = 0; a <= full_rank; ++a) {
    for (int b = 0; b <= nullity; ++b) {
      if (counts[a][b] == 0) continue;
      for (int i = 0; i <= a; ++i) {
        for (int j = 0; j <= b; ++j) {
          BigInt term = binom[a][i] * binom[b][j] * counts[a][b];
          if ((a - i + b - j) % 2 != 0) term = -term;
          t.coefficient(i, j) += term;
        }
      }
    }
  }
  return t;
}

// `make_rank` builds one rank functor per thread.
template <typename MakeRank>
BivariatePolynomial expand_over_subsets(int n, MakeRank&& make_rank,
                                        Execution exec) {
  const Mask full = (Mask{1} << n) - 1;
  const int full_rank = make_rank()(full);
  const int nullity = n - full_rank;
  using Table = std::vector<std::vector<std::int64_t>>;
  Table counts(full_rank + 1, std::vector<std::int64_t>(nullity + 1, 0));
  const std::int64_t total = std::int64_t{1} << n;

  if (exec == Execution::kSerial) {
    auto rank_of = make_rank();
    for (std::int64_t a = 0; a < total; ++a) {
      const Mask m = static_cast<Mask>(a);
      const int ra = rank_of(m);
      ++counts[full_rank - ra][std::popcount(m) - ra];
    }
  } else {
#pragma omp parallel
    {
      Table local(full_rank + 1, std::vector<std::int64_t>(nullity + 1, 0));
      auto rank_of = make_rank();
#pragma omp for schedule(static)
      for (std::int64_t a = 0; a < total; ++a) {
        const Mask m = static_cast<Mask>(a);
        const int ra = rank_of(m);
        ++local[full_rank - ra][std::popcount(m) - ra];
      }
#pragma omp critical
      for (int i = 0; i <= full_rank; ++i) {
        for (int j = 0; j <= nullity; ++j) counts[i][j] += local[i][j];
      }
    }
  }
  return expand_corank_nullity(counts, full_rank, nullity);
}

std::vector<Mask> basis_masks(const SetSystem& sys) {
  std::vector<Mask> out;
  for (const auto& b : bases_bruteforce(sys)) out.push_back(to_mask(b));
  return out;
}

Activities activities_from_masks(int n, const std::unordered_set<Mask>& bases,
                                 Mask b) {
  if (!bases.contains(b)) throw DomainError("set is not a basis");
  Activities act;
  for (int u = 1; u <= n; ++u) {
    const Mask ubit = Mask{1} << (u - 1);
    bool active = true;
    for (int v = 1; v < u && active; ++v) {
      const Mask vbit = Mask{1} << (v - 1);
      if (b & ubit) {
        if (!(b & vbit) && bases.contains((b & ~ubit) | vbit)) active = false;
      } else {
        if ((b & vbit) && bases.contains((b & ~vbit) | ubit)) active = false;
      }
    }
    if (!active) continue;
    if (b & ubit) ++act.internal;
    else ++act.external;
  }
  return act;
}

}  // namespace

SetSystem to_set_system(const SigmaIntervalSystem& sys) {
  return SetSystem{sys.size(), sys.interval_sets()};
}

int rank(const SetSystem& sys, std::span<const Element> subset) {
  Matcher matcher(sys);
  return matcher.match(subset);
}

Mask to_mask(std::span<const Element> set) {
  Mask m = 0;
  for (Element e : set) {
    if (e < 1 || e > 32) throw ResourceError("bitmask holds elements 1..32");
    m |= Mask{1} << (e - 1);
  }
  return m;
}

ElementSet from_mask(Mask mask) {
  ElementSet out;
  for (int e = 1; mask != 0; ++e, mask >>= 1) {
    if (mask & 1u) out.push_back(e);
  }
  return out;
}

int rank_mask(const SetSystem& sys, Mask subset) {
  const ElementSet s = from_mask(subset);
  return rank(sys, s);
}

std::vector<ElementSet> bases_bruteforce(const SetSystem& sys) {
  guard(sys.n, kMaxEnumerationSize, "basis enumeration");
  Matcher matcher(sys);
  const Mask full = (Mask{1} << sys.n) - 1;
  const int r = matcher.match(from_mask(full));
  std::vector<ElementSet> out;
  for (Mask m = 0;; ++m) {
    if (std::popcount(m) == r) {
      ElementSet s = from_mask(m);
      if (matcher.match(s) == r) out.push_back(std::move(s));
    }
    if (m == full) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

BivariatePolynomial tutte_subset_expansion(const SetSystem& sys,
                                           Execution exec) {
  guard(sys.n, kMaxEnumerationSize, "subset expansion");
  auto make_rank = [&sys] {
    return [matcher = Matcher(sys), buf = std::vector<Element>(),
            n = sys.n](Mask m) mutable {
      buf.clear();
      for (int e = 1; e <= n; ++e) {
        if (m & (Mask{1} << (e - 1))) buf.push_back(e);
      }
      return matcher.match(buf);
    };
  };
  return expand_over_subsets(sys.n, make_rank, exec);
}

BivariatePolynomial tutte_from_bases(int n, std::span<const ElementSet> bases) {
  guard(n, kMaxEnumerationSize, "subset expansion");
  if (bases.empty()) throw DomainError("a matroid has at least one basis");
  std::vector<Mask> masks;
  for (const auto& b : bases) masks.push_back(to_mask(b));
  auto make_rank = [&masks] {
    return [&masks](Mask a) {
      int best = 0;
      for (Mask b : masks) best = std::max(best, std::popcount(a & b));
      return best;
    };
  };
  return expand_over_subsets(n, make_rank, Execution::kSerial);
}

Activities activities_by_definition(const SetSystem& sys, const ElementSet& b) {
  const auto masks = basis_masks(sys);
  std::unordered_set<Mask> bases(masks.begin(), masks.end());
  return activities_from_masks(sys.n, bases, to_mask(b));
}

Activities activities_by_definition(int n, std::span<const ElementSet> bases,
                                    const ElementSet& b) {
  guard(n, kMaxEnumerationSize, "activity enumeration");
  std::unordered_set<Mask> set;
  for (const auto& x : bases) set.insert(to_mask(x));
  return activities_from_masks(n, set, to_mask(b));
}

bool is_connected_bruteforce(const SetSystem& sys) {
  guard(sys.n, kMaxConnectivitySize, "connectivity check");
  const Mask full = (Mask{1} << sys.n) - 1;
  std::vector<int> ranks(std::size_t{1} << sys.n);
  Matcher matcher(sys);
  for (Mask m = 0; m <= full; ++m) ranks[m] = matcher.match(from_mask(m));
  for (Mask m = 1; m < full; ++m) {
    if (ranks[m] + ranks[full & ~m] == ranks[full]) return false;
  }
  return true;
}

}  // namespace oracle
}  // namespace multipath
