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

#ifndef ARNDT_BIVARIATE_POLYNOMIAL_H_
#define ARNDT_BIVARIATE_POLYNOMIAL_H_

#include <compare>
#include <map>
#include <string>

#include "arndt/count_triangle.h"

namespace arndt {

// Exponent pair: x marks weight, y marks the statistic.
struct Monomial {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Polynomial in x and y with exact rational coefficients. Zero coefficients
// are never stored, so structural equality is polynomial equality.
class BivariatePolynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  BivariatePolynomial() = default;
  BivariatePolynomial(const Rational& constant);  // NOLINT: implicit by design of the DSL
  BivariatePolynomial(long constant);             // NOLINT
  BivariatePolynomial(int constant) : BivariatePolynomial(long{constant}) {}  // NOLINT

  static BivariatePolynomial monomial(const Rational& coefficient, int dx,
                                      int dy);
  static BivariatePolynomial x() { return monomial(1, 1, 0); }
  static BivariatePolynomial y() { return monomial(1, 0, 1); }

  const Terms& terms() const { return terms_; }
  Rational coefficient(int dx, int dy) const;
  Rational constant_term() const { return coefficient(0, 0); }
  bool is_zero() const { return terms_.empty(); }
  // -1 for the zero polynomial.
  int degree_x() const;
  int degree_y() const;
  bool depends_on_y() const { return degree_y() > 0; }
  bool has_integer_coefficients() const;

  BivariatePolynomial& operator+=(const BivariatePolynomial& other);
  BivariatePolynomial& operator-=(const BivariatePolynomial& other);
  BivariatePolynomial& operator*=(const BivariatePolynomial& other);

  friend BivariatePolynomial operator+(BivariatePolynomial a,
                                       const BivariatePolynomial& b) {
    return a += b;
  }
  friend BivariatePolynomial operator-(BivariatePolynomial a,
                                       const BivariatePolynomial& b) {
    return a -= b;
  }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a,
                                       const BivariatePolynomial& b);
  BivariatePolynomial operator-() const;
  friend bool operator==(const BivariatePolynomial&,
                         const BivariatePolynomial&) = default;

  BivariatePolynomial scaled(const Rational& factor) const;
  BivariatePolynomial derivative_x() const;
  BivariatePolynomial derivative_y() const;
  // Substitutes y = value; the result is univariate in x.
  BivariatePolynomial substitute_y(const Rational& value) const;
  // Drops every term with x-degree > max_x or y-degree > max_y.
  BivariatePolynomial truncated(int max_x, int max_y) const;

  double evaluate(double x, double y = 1.0) const;

  // Human-readable, e.g. "1 - x - x^2 + x^3 - x^3*y^2".
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

BivariatePolynomial pow(const BivariatePolynomial& base, unsigned exponent);

// Free-function spellings of the ring operations.
inline BivariatePolynomial poly_add(const BivariatePolynomial& p,
                                    const BivariatePolynomial& q) {
  return p + q;
}
inline BivariatePolynomial poly_mul(const BivariatePolynomial& p,
                                    const BivariatePolynomial& q) {
  return p * q;
}
inline BivariatePolynomial poly_scale(const BivariatePolynomial& p,
                                      const Rational& c) {
  return p.scaled(c);
}

}  // namespace arndt

#endif  // ARNDT_BIVARIATE_POLYNOMIAL_H_
