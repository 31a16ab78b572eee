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

#include "multipath/polynomial.h"

#include <algorithm>
#include <sstream>

#include "multipath/errors.h"

namespace multipath {

BivariatePolynomial::BivariatePolynomial(int max_x, int max_y)
    : max_x_(max_x), max_y_(max_y) {
  if (max_x < 0 || max_y < 0) {
    throw DimensionError("polynomial box must be non-negative");
  }
  coeffs_.resize(static_cast<std::size_t>(max_x + 1) * (max_y + 1));
}

BivariatePolynomial BivariatePolynomial::constant(const BigInt& c, int max_x,
                                                  int max_y) {
  BivariatePolynomial p(max_x, max_y);
  p.coefficient(0, 0) = c;
  return p;
}

BivariatePolynomial BivariatePolynomial::monomial(int i, int j,
                                                  const BigInt& c) {
  BivariatePolynomial p(i, j);
  p.coefficient(i, j) = c;
  return p;
}

const BigInt& BivariatePolynomial::coefficient(int i, int j) const {
  if (i < 0 || j < 0 || i > max_x_ || j > max_y_) {
    throw DimensionError("coefficient index outside the polynomial box");
  }
  return coeffs_[static_cast<std::size_t>(i) * (max_y_ + 1) + j];
}

BigInt& BivariatePolynomial::coefficient(int i, int j) {
  if (i < 0 || j < 0 || i > max_x_ || j > max_y_) {
    throw DimensionError("coefficient index outside the polynomial box");
  }
  return coeffs_[static_cast<std::size_t>(i) * (max_y_ + 1) + j];
}

BigInt BivariatePolynomial::coefficient_or_zero(int i, int j) const {
  if (i < 0 || j < 0 || i > max_x_ || j > max_y_) return 0;
  return coefficient(i, j);
}

bool BivariatePolynomial::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const BigInt& c) { return c.is_zero(); });
}

void BivariatePolynomial::shift_x() {
  for (int j = 0; j <= max_y_; ++j) {
    if (!coefficient(max_x_, j).is_zero()) {
      throw DimensionError("x-degree exceeds the rank bound");
    }
  }
  for (int i = max_x_; i > 0; --i) {
    for (int j = 0; j <= max_y_; ++j) {
      coefficient(i, j).swap(coefficient(i - 1, j));
    }
  }
}

void BivariatePolynomial::shift_y() {
  for (int i = 0; i <= max_x_; ++i) {
    if (!coefficient(i, max_y_).is_zero()) {
      throw DimensionError("y-degree exceeds the nullity bound");
    }
  }
  for (int i = 0; i <= max_x_; ++i) {
    for (int j = max_y_; j > 0; --j) {
      coefficient(i, j).swap(coefficient(i, j - 1));
    }
  }
}

BivariatePolynomial& BivariatePolynomial::operator+=(
    const BivariatePolynomial& other) {
  for (int i = 0; i <= other.max_x_; ++i) {
    for (int j = 0; j <= other.max_y_; ++j) {
      const BigInt& c = other.coefficient(i, j);
      if (c.is_zero()) continue;
      if (i > max_x_ || j > max_y_) {
        throw DimensionError("summand does not fit in the polynomial box");
      }
      coefficient(i, j) += c;
    }
  }
  return *this;
}

BivariatePolynomial BivariatePolynomial::resized(int max_x, int max_y) const {
  BivariatePolynomial out(max_x, max_y);
  out += *this;
  return out;
}

BivariatePolynomial BivariatePolynomial::swapped() const {
  BivariatePolynomial out(max_y_, max_x_);
  for (int i = 0; i <= max_x_; ++i) {
    for (int j = 0; j <= max_y_; ++j) out.coefficient(j, i) = coefficient(i, j);
  }
  return out;
}

BigInt BivariatePolynomial::evaluate(const BigInt& x, const BigInt& y) const {
  BigInt total = 0;
  BigInt xpow = 1;
  for (int i = 0; i <= max_x_; ++i) {
    BigInt row = 0;
    for (int j = max_y_; j >= 0; --j) row = row * y + coefficient(i, j);
    total += row * xpow;
    xpow *= x;
  }
  return total;
}

bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  const int mx = std::max(a.max_x_, b.max_x_);
  const int my = std::max(a.max_y_, b.max_y_);
  for (int i = 0; i <= mx; ++i) {
    for (int j = 0; j <= my; ++j) {
      if (a.coefficient_or_zero(i, j) != b.coefficient_or_zero(i, j)) {
        return false;
      }
    }
  }
  return true;
}

std::string BivariatePolynomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int i = max_x_; i >= 0; --i) {
    for (int j = max_y_; j >= 0; --j) {
      const BigInt& c = coefficient(i, j);
      if (c.is_zero()) continue;
      if (!first) out << (c < 0 ? " - " : " + ");
      else if (c < 0) out << "-";
      first = false;
      BigInt mag = c < 0 ? BigInt(-c) : c;
      bool bare = i == 0 && j == 0;
      if (mag != 1 || bare) out << mag;
      if (i > 0) out << "x" << (i > 1 ? "^" + std::to_string(i) : "");
      if (j > 0) out << "y" << (j > 1 ? "^" + std::to_string(j) : "");
    }
  }
  return first ? "0" : out.str();
}

BivariatePolynomial poly_step(const BivariatePolynomial& p, PolyStep kind,
                              int max_x, int max_y,
                              const BivariatePolynomial* q) {
  BivariatePolynomial out = p.resized(max_x, max_y);
  switch (kind) {
    case PolyStep::kTimesX:
      out.shift_x();
      break;
    case PolyStep::kTimesY:
      out.shift_y();
      break;
    case PolyStep::kAdd:
      if (q == nullptr) throw DimensionError("add needs a second operand");
      out += *q;
      break;
  }
  return out;
}

std::string format_tutte(const BivariatePolynomial& p, int rank, int nullity) {
  std::ostringstream out;
  out << "tutte r=" << rank << " m=" << nullity << "\n";
  for (int i = 0; i <= p.max_x(); ++i) {
    for (int j = 0; j <= p.max_y(); ++j) {
      const BigInt& c = p.coefficient(i, j);
      if (!c.is_zero()) out << i << " " << j << " " << c << "\n";
    }
  }
  return out.str();
}

}  // namespace multipath
