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

#ifndef MULTIPATH_POLYNOMIAL_H_
#define MULTIPATH_POLYNOMIAL_H_

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace multipath {

using BigInt = boost::multiprecision::cpp_int;

// Polynomial in x and y with exact integer coefficients c[i][j] of x^i y^j,
// stored densely in the box 0 <= i <= max_x, 0 <= j <= max_y. For a Tutte
// polynomial the box is (rank, nullity).
class BivariatePolynomial {
 public:
  BivariatePolynomial() : BivariatePolynomial(0, 0) {}
  BivariatePolynomial(int max_x, int max_y);

  static BivariatePolynomial constant(const BigInt& c, int max_x = 0,
                                      int max_y = 0);
  static BivariatePolynomial monomial(int i, int j, const BigInt& c = 1);

  int max_x() const { return max_x_; }
  int max_y() const { return max_y_; }

  const BigInt& coefficient(int i, int j) const;
  BigInt& coefficient(int i, int j);
  // Zero outside the box.
  BigInt coefficient_or_zero(int i, int j) const;

  bool is_zero() const;

  // Multiply by x (resp. y) inside the box; throws DimensionError if the
  // top column (row) is nonzero.
  void shift_x();
  void shift_y();

  // Adds `other`, which must fit in this box (nonzero terms only).
  BivariatePolynomial& operator+=(const BivariatePolynomial& other);

  // Same polynomial in another box. Throws DimensionError when a nonzero
  // coefficient would fall outside it.
  BivariatePolynomial resized(int max_x, int max_y) const;

  // t(x, y) -> t(y, x).
  BivariatePolynomial swapped() const;

  BigInt evaluate(const BigInt& x, const BigInt& y) const;

  // Equal as polynomials (boxes may differ).
  friend bool operator==(const BivariatePolynomial& a,
                         const BivariatePolynomial& b);

  // Compact human-readable form, e.g. "x^2 + x + y".
  std::string to_string() const;

 private:
  int max_x_;
  int max_y_;
  std::vector<BigInt> coeffs_;  // row-major in i
};

// Recurrence step kinds used when combining minors.
enum class PolyStep { kTimesX, kTimesY, kAdd };

// `p * x`, `p * y` or `p + q`, computed in the box (max_x, max_y).
BivariatePolynomial poly_step(const BivariatePolynomial& p, PolyStep kind,
                              int max_x, int max_y,
                              const BivariatePolynomial* q = nullptr);

// Line format: "tutte r=<r> m=<m>" followed by "i j coeff" for every
// nonzero coefficient, ascending in (i, j).
std::string format_tutte(const BivariatePolynomial& p, int rank, int nullity);

}  // namespace multipath

#endif  // MULTIPATH_POLYNOMIAL_H_
