// Copyright 2026 The Arndt Compositions Authors
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

#ifndef ARNDT_POWER_SERIES_H_
#define ARNDT_POWER_SERIES_H_

#include <vector>

#include "arndt/bivariate_polynomial.h"
#include "arndt/count_triangle.h"

namespace arndt {

inline constexpr int kDefaultSeriesOrder = 64;

// Coefficients [x^n y^m] of a bivariate series for n <= order_x and
// m <= order_y. Stored densely; unset coefficients are zero.
class TruncatedSeries {
 public:
  TruncatedSeries(int order_x, int order_y);

  int order() const { return order_x_; }
  int order_y() const { return order_y_; }

  // Zero for m > order_y. Throws std::out_of_range for n outside 0..order().
  const Rational& coefficient(int n, int m) const;
  void set(int n, int m, Rational value);
  const std::vector<Rational>& row(int n) const;

  // Highest m with a nonzero coefficient in row n, or -1.
  int row_degree(int n) const;

  // Throws std::domain_error if some coefficient of row n is not an integer.
  std::vector<BigInt> integer_row(int n) const;
  bool all_nonnegative_integers() const;
  // True when every nonzero coefficient has m <= n.
  bool statistic_bounded_by_weight() const;
  // Rows 0..order(); throws std::domain_error unless every coefficient is a
  // nonnegative integer.
  CountTriangle to_count_triangle() const;
  // Coefficients of y^0 in rows 0..order().
  std::vector<Rational> univariate() const;

  BivariatePolynomial to_polynomial() const;

  friend TruncatedSeries operator+(const TruncatedSeries& a,
                                   const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries&,
                         const TruncatedSeries&) = default;

 private:
  int order_x_;
  int order_y_;
  std::vector<std::vector<Rational>> rows_;
};

// A formal power series numerator/denominator. The denominator must have a
// nonzero constant term so the quotient is a power series; construction
// throws std::domain_error otherwise. No gcd normalization is performed, so
// use equivalent() rather than == to compare values.
class RationalGF {
 public:
  RationalGF(BivariatePolynomial numerator,
             BivariatePolynomial denominator = 1);

  const BivariatePolynomial& numerator() const { return numerator_; }
  const BivariatePolynomial& denominator() const { return denominator_; }
  bool is_univariate() const {
    return !numerator_.depends_on_y() && !denominator_.depends_on_y();
  }

  // Structural equality of the stored pair.
  friend bool operator==(const RationalGF&, const RationalGF&) = default;

 private:
  BivariatePolynomial numerator_;
  BivariatePolynomial denominator_;
};

// a/b == c/d decided as a*d == c*b.
bool equivalent(const RationalGF& f, const RationalGF& g);

RationalGF rational_add(const RationalGF& f, const RationalGF& g);
RationalGF rational_sub(const RationalGF& f, const RationalGF& g);
RationalGF rational_mul(const RationalGF& f, const RationalGF& g);
// Throws std::domain_error when the quotient is not a power series, i.e.
// when f.den * g.num has a zero constant term.
RationalGF rational_div(const RationalGF& f, const RationalGF& g);

inline RationalGF operator+(const RationalGF& f, const RationalGF& g) {
  return rational_add(f, g);
}
inline RationalGF operator-(const RationalGF& f, const RationalGF& g) {
  return rational_sub(f, g);
}
inline RationalGF operator*(const RationalGF& f, const RationalGF& g) {
  return rational_mul(f, g);
}
inline RationalGF operator/(const RationalGF& f, const RationalGF& g) {
  return rational_div(f, g);
}

// Expands f to x-order `order`, keeping y-degrees up to `order_y` (defaults
// to `order`). Row n solves den_0 * S_n = num_n - sum_{i>=1} den_i * S_{n-i},
// where den_i is the y-polynomial multiplying x^i in the denominator.
TruncatedSeries expand(const RationalGF& f, int order = kDefaultSeriesOrder,
                       int order_y = -1);

// f(x, 1).
RationalGF eval_y1(const RationalGF& f);
// d/dy f(x, y) at y = 1, by the quotient rule.
RationalGF diff_y_at_1(const RationalGF& f);

}  // namespace arndt

#endif  // ARNDT_POWER_SERIES_H_
