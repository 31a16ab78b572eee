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


#include <doctest.h>

#include <algorithm>
#include <set>

#include "multipath/activities.h"
#include "multipath/errors.h"
#include "multipath/oracle.h"
#include "multipath/tutte_dp.h"
#include "support/corpus.h"
#include "support/gamma_bruteforce.h"

namespace mp = multipath;
using mp::Diagram;
using mp::ElementSet;
using mp::LatticePath;

namespace {

Diagram make(int k, int m, int r, const char* p, const char* q) {
  return Diagram(k, m, r, LatticePath(p), LatticePath(q));
}

Diagram w3() { return mp::build_diagram(mp::testing::whirl(3), 1); }

}  // namespace

TEST_CASE("path representations") {
  auto d = w3();
  auto p1 = mp::represent(d, {1, 3, 5}, 1);
  CHECK(p1.word().word() == "NENENE");
  CHECK(p1.valid());
  CHECK(mp::represent(d, {1, 3, 5}, 2).valid());
  CHECK(mp::valid_starts(d, {1, 3, 5}) == std::vector<int>{1, 2});
  auto sq = make(1, 1, 1, "EN", "NE");
  auto bad = mp::represent(sq, {1, 2}, 1);
  CHECK(bad.word().word() == "NN");
  CHECK_FALSE(bad.valid());
  CHECK_THROWS_AS(mp::represent(d, {1}, 3), mp::DomainError);
  CHECK_THROWS_AS(mp::represent(d, {7}, 1), mp::DomainError);
}

TEST_CASE("sub-path point ranges") {
  using P = mp::PathRepresentation;
  auto closed = P::points(2, 4, mp::Ends::kClosed);
  CHECK(closed.first == 1);
  CHECK(closed.last == 4);
  auto open = P::points(2, 4, mp::Ends::kOpen);
  CHECK(open.first == 2);
  CHECK(open.last == 3);
  auto left = P::points(2, 4, mp::Ends::kOpenLeft);
  CHECK(left.first == 2);
  CHECK(left.last == 4);
  auto right = P::points(2, 4, mp::Ends::kOpenRight);
  CHECK(right.first == 1);
  CHECK(right.last == 3);
  auto single = P::points(3, 4, mp::Ends::kOpen);
  CHECK(single.first == 3);
  CHECK(single.last == 3);
}

TEST_CASE("exchange examples") {
  auto d = w3();
  CHECK(mp::exchange_feasible(d, {1, 3, 5}, 1, 3, 2));
  const auto bases = mp::label_sets(d);
  const bool expect = std::binary_search(bases.begin(), bases.end(),
                                         ElementSet{2, 3, 4});
  CHECK(mp::exchange_feasible(d, {1, 2, 3}, 1, 1, 4) == expect);
  CHECK_THROWS_AS(mp::exchange_feasible(d, {1, 3, 5}, 1, 2, 4),
                  mp::DomainError);
  CHECK_THROWS_AS(mp::exchange_feasible(d, {1, 3, 5}, 1, 1, 3),
                  mp::DomainError);
}

TEST_CASE("activity examples") {
  auto d = w3();
  CHECK(mp::basis_activities(d, {1, 2, 3}) == mp::ActivityCounts{3, 0});
  auto sq = make(1, 1, 1, "EN", "NE");
  CHECK(mp::basis_activities(sq, {2}) == mp::ActivityCounts{0, 1});
  CHECK(mp::basis_activities(sq, {1}) == mp::ActivityCounts{1, 0});
  CHECK_THROWS_AS(mp::basis_activities(sq, {1, 2}), mp::DomainError);
}

TEST_CASE("activities and exchanges agree with the oracle for n <= 6") {
  for (const auto& sys : mp::testing::exhaustive_corpus(6)) {
    auto d = mp::build_diagram(sys, 1);
    const auto bases = mp::label_sets(d);
    const std::set<ElementSet> lookup(bases.begin(), bases.end());
    const int n = d.size();
    for (const auto& b : bases) {
      const auto want = mp::oracle::activities_by_definition(n, bases, b);
      const auto starts = mp::valid_starts(d, b);
      REQUIRE_FALSE(starts.empty());
      int touching = 0;
      for (int i : starts) {
        auto got = mp::basis_activities(d, b, i);
        CHECK(got.internal == want.internal);
        CHECK(got.external == want.external);
        if (mp::represent(d, b, i).touches_top({0, n})) ++touching;
        for (int u : b) {
          for (int v = 1; v <= n; ++v) {
            if (std::binary_search(b.begin(), b.end(), v)) continue;
            ElementSet swapped;
            for (int e : b) {
              if (e != u) swapped.push_back(e);
            }
            swapped.insert(
                std::upper_bound(swapped.begin(), swapped.end(), v), v);
            CHECK(mp::exchange_feasible(d, b, i, u, v) ==
                  lookup.contains(swapped));
          }
        }
      }
      CHECK(touching == 1);
    }
  }
}

TEST_CASE("gamma on the unit square") {
  auto sq = make(1, 1, 1, "EN", "NE");
  auto g = mp::compute_gamma(sq);
  CHECK(g.value(0, 0, 1, 0, 1, true, true) == 1);
  CHECK(g.value(0, 0, 1, 1, 0, true, true) == 1);
  CHECK(g.value(0, 0, 1, 0, 0, true, true) == 0);
  CHECK(g.value(2, 1, 1, 0, 0, true, true) == 1);
  CHECK(g.value(2, 1, 1, 0, 0, false, true) == 0);
  CHECK(g.value(0, 0, 2, 0, 0, true, true) == 0);
  CHECK(g.cell_count() > 0);
}

TEST_CASE("gamma equals path enumeration") {
  int diagrams = 0;
  for (const auto& sys : mp::testing::exhaustive_corpus(6)) {
    auto d = mp::build_diagram(sys, 1);
    for (const Diagram& side : {d, mp::reflect_dual(d)}) {
      auto table = mp::compute_gamma(side, mp::Execution::kSerial);
      for (int j = 1; j <= side.k(); ++j) {
        for (int t = 0; t <= side.size(); ++t) {
          for (int h = side.low(t); h <= side.high(t); ++h) {
            auto counts = mp::testing::gamma_by_enumeration(side, t, h, j);
            for (int a = 0; a <= side.r(); ++a) {
              for (int b = 0; b <= side.m(); ++b) {
                for (bool tp : {false, true}) {
                  for (bool tq : {false, true}) {
                    auto it = counts.find({a, b, tp, tq});
                    const long long want = it == counts.end() ? 0 : it->second;
                    REQUIRE(table.value(t, h, j, a, b, tp, tq) == want);
                  }
                }
              }
            }
          }
        }
      }
      ++diagrams;
    }
  }
  CHECK(diagrams > 100);
}

TEST_CASE("activity classes") {
  auto sq = make(1, 1, 1, "EN", "NE");
  auto classes = mp::count_activity_classes(sq);
  CHECK(classes.size() == 2);
  CHECK(classes.at({1, 0}) == 1);
  CHECK(classes.at({0, 1}) == 1);

  auto coloop = mp::count_activity_classes(make(1, 0, 1, "N", "N"));
  CHECK(coloop.size() == 1);
  CHECK(coloop.at({1, 0}) == 1);

  auto d = w3();
  mp::BigInt total = 0;
  for (const auto& [key, count] : mp::count_activity_classes(d)) total += count;
  CHECK(total == 17);
  CHECK(mp::activity_polynomial(d) == mp::tutte_of_diagram(d));
}

TEST_CASE("tutte via activities") {
  CHECK(mp::tutte_via_activities(mp::testing::whirl(3)) ==
        mp::tutte(mp::testing::whirl(3)));
  mp::SigmaIntervalSystem u36(6, {{1, 4}, {2, 5}, {3, 6}});
  CHECK(mp::tutte_via_activities(u36) == mp::tutte(u36));
  CHECK(mp::tutte_via_activities(mp::SigmaIntervalSystem(1, {})) ==
        mp::BivariatePolynomial::monomial(0, 1));
  for (const auto& sys : mp::testing::exhaustive_corpus(6)) {
    CHECK(mp::tutte_via_activities(sys, mp::Execution::kSerial) ==
          mp::tutte(sys));
  }
}

TEST_CASE("parallel and serial activity engines agree") {
  auto d = mp::build_diagram(mp::testing::whirl(12), 1);
  std::int64_t serial_cells = 0, parallel_cells = 0;
  auto s = mp::activity_polynomial(d, mp::Execution::kSerial, &serial_cells);
  auto p = mp::activity_polynomial(d, mp::Execution::kParallel,
                                   &parallel_cells);
  CHECK(s == p);
  CHECK(serial_cells == parallel_cells);
}
