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

#include <vector>

#include "multipath/errors.h"
#include "multipath/oracle.h"
#include "support/corpus.h"

namespace mp = multipath;
namespace oracle = multipath::oracle;
using mp::ElementSet;

TEST_CASE("matching rank") {
  auto w3 = oracle::to_set_system(mp::testing::whirl(3));
  CHECK(oracle::rank(w3, ElementSet{1, 3, 5}) == 3);
  CHECK(oracle::rank(w3, ElementSet{}) == 0);
  CHECK(oracle::rank(w3, ElementSet{1, 2, 3, 4, 5, 6}) == 3);
  CHECK(oracle::rank(w3, ElementSet{2}) == 1);
  CHECK(oracle::rank_mask(w3, 0b111111) == 3);
  CHECK_THROWS_AS(oracle::rank(w3, ElementSet{7}), mp::InvalidElementError);
}

TEST_CASE("masks round trip") {
  CHECK(oracle::to_mask(ElementSet{1, 3}) == 0b101u);
  CHECK(oracle::from_mask(0b10110) == ElementSet{2, 3, 5});
}

TEST_CASE("basis enumeration") {
  auto w3 = oracle::to_set_system(mp::testing::whirl(3));
  auto b = oracle::bases_bruteforce(w3);
  CHECK(b.size() == 17);
  CHECK(std::is_sorted(b.begin(), b.end()));

  mp::SigmaIntervalSystem u36(6, {{1, 4}, {2, 5}, {3, 6}});
  CHECK(oracle::bases_bruteforce(oracle::to_set_system(u36)).size() == 20);

  oracle::SetSystem single{1, {{1}}};
  CHECK(oracle::bases_bruteforce(single) == std::vector<ElementSet>{{1}});

  oracle::SetSystem big{21, {{1}}};
  CHECK_THROWS_AS(oracle::bases_bruteforce(big), mp::ResourceError);
}

TEST_CASE("subset expansion") {
  oracle::SetSystem coloop{1, {{1}}};
  CHECK(oracle::tutte_subset_expansion(coloop) ==
        mp::BivariatePolynomial::monomial(1, 0));
  oracle::SetSystem loop{1, {}};
  CHECK(oracle::tutte_subset_expansion(loop) ==
        mp::BivariatePolynomial::monomial(0, 1));

  auto w3 = oracle::to_set_system(mp::testing::whirl(3));
  auto t = oracle::tutte_subset_expansion(w3);
  CHECK(t.evaluate(1, 1) == 17);
  CHECK(t.evaluate(2, 2) == 64);
  CHECK(t == oracle::tutte_subset_expansion(w3, mp::Execution::kSerial));
  CHECK(t == oracle::tutte_from_bases(6, oracle::bases_bruteforce(w3)));
}

TEST_CASE("parallel and serial subset expansion agree") {
  for (const auto& sys : mp::testing::random_corpus(20, 8, 12, 11)) {
    auto s = oracle::to_set_system(sys);
    CHECK(oracle::tutte_subset_expansion(s, mp::Execution::kParallel) ==
          oracle::tutte_subset_expansion(s, mp::Execution::kSerial));
  }
}

TEST_CASE("activities by definition") {
  auto w3 = oracle::to_set_system(mp::testing::whirl(3));
  CHECK(oracle::activities_by_definition(w3, {1, 2, 3}) ==
        oracle::Activities{3, 0});
  oracle::SetSystem u12{2, {{1, 2}}};
  CHECK(oracle::activities_by_definition(u12, {2}) == oracle::Activities{0, 1});
  CHECK(oracle::activities_by_definition(u12, {1}) == oracle::Activities{1, 0});
  CHECK_THROWS_AS(oracle::activities_by_definition(u12, {1, 2}),
                  mp::DomainError);
  // Summing x^i y^e over bases gives the Tutte polynomial.
  mp::BivariatePolynomial sum(3, 3);
  for (const auto& b : oracle::bases_bruteforce(w3)) {
    auto a = oracle::activities_by_definition(w3, b);
    sum.coefficient(a.internal, a.external) += 1;
  }
  CHECK(sum == oracle::tutte_subset_expansion(w3));
}

TEST_CASE("connectivity") {
  CHECK(oracle::is_connected_bruteforce(
      oracle::to_set_system(mp::testing::whirl(3))));
  oracle::SetSystem two_coloops{2, {{1}, {2}}};
  CHECK_FALSE(oracle::is_connected_bruteforce(two_coloops));
  mp::SigmaIntervalSystem u36(6, {{1, 4}, {2, 5}, {3, 6}});
  CHECK(oracle::is_connected_bruteforce(oracle::to_set_system(u36)));
}
