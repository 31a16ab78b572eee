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

#include "multipath/errors.h"
#include "multipath/polynomial.h"

namespace mp = multipath;
using mp::BivariatePolynomial;
using mp::PolyStep;

TEST_CASE("times x and times y shift the indices") {
  auto one = BivariatePolynomial::constant(1);
  auto x = mp::poly_step(one, PolyStep::kTimesX, 1, 0);
  CHECK(x == BivariatePolynomial::monomial(1, 0));
  auto y = mp::poly_step(one, PolyStep::kTimesY, 0, 1);
  CHECK(y == BivariatePolynomial::monomial(0, 1));
  auto sum = mp::poly_step(x, PolyStep::kAdd, 1, 1, &y);
  CHECK(sum.to_string() == "x + y");
  CHECK(sum.evaluate(3, 4) == 7);
}

TEST_CASE("box overflow is a dimension error") {
  auto x = BivariatePolynomial::monomial(1, 0);
  CHECK_THROWS_AS(x.shift_x(), mp::DimensionError);
  CHECK_THROWS_AS(x.coefficient(2, 0), mp::DimensionError);
  CHECK(x.coefficient_or_zero(5, 5) == 0);
  CHECK_THROWS_AS(x.resized(0, 3), mp::DimensionError);
  BivariatePolynomial small(0, 0);
  CHECK_THROWS_AS(small += x, mp::DimensionError);
  CHECK_THROWS_AS(mp::poly_step(x, PolyStep::kAdd, 1, 0), mp::DimensionError);
}

TEST_CASE("equality ignores the box and swap exchanges variables") {
  auto p = BivariatePolynomial::monomial(2, 1, 5).resized(4, 4);
  CHECK(p == BivariatePolynomial::monomial(2, 1, 5));
  auto q = p.swapped();
  CHECK(q.max_x() == 4);
  CHECK(q.coefficient(1, 2) == 5);
  CHECK(q.swapped() == p);
  CHECK_FALSE(p.is_zero());
  CHECK(BivariatePolynomial(3, 3).is_zero());
}

TEST_CASE("coefficients are exact big integers") {
  BivariatePolynomial p(1, 1);
  p.coefficient(1, 1) = mp::BigInt(1) << 200;
  p.coefficient(0, 0) = -3;
  CHECK(p.evaluate(1, 1) == (mp::BigInt(1) << 200) - 3);
  CHECK(p.to_string().rfind(" - 3") != std::string::npos);
  CHECK(p.to_string().find("xy") != std::string::npos);
}

TEST_CASE("tutte format lists nonzero terms in (i, j) order") {
  BivariatePolynomial p(1, 1);
  p.coefficient(1, 0) = 1;
  p.coefficient(0, 1) = 2;
  CHECK(mp::format_tutte(p, 1, 1) == "tutte r=1 m=1\n0 1 2\n1 0 1\n");
}
