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

#include "arndt/bivariate_polynomial.h"

#include <algorithm>
#include <cmath>

namespace arndt {

BivariatePolynomial::BivariatePolynomial(const Rational& constant) {
  Rational value = constant;
  value.canonicalize();
  add_term({0, 0}, value);
}

BivariatePolynomial::BivariatePolynomial(long constant) {
  add_term({0, 0}, Rational(constant));
}

BivariatePolynomial BivariatePolynomial::monomial(const Rational& coefficient,
                                                  int dx, int dy) {
  // Callers may hand in an unreduced fraction such as mpq_class(4, 2);
  // equality on coefficients assumes canonical form.
  Rational value = coefficient;
  value.canonicalize();
  BivariatePolynomial p;
  p.add_term({dx, dy}, value);
  return p;
}

void BivariatePolynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational BivariatePolynomial::coefficient(int dx, int dy) const {
  const auto it = terms_.find({dx, dy});
  return it == terms_.end() ? Rational(0) : it->second;
}

int BivariatePolynomial::degree_x() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.x);
  return d;
}

int BivariatePolynomial::degree_y() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.y);
  return d;
}

bool BivariatePolynomial::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) {
    return t.second.get_den() == 1;
  });
}

BivariatePolynomial& BivariatePolynomial::operator+=(
    const BivariatePolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(
    const BivariatePolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator*=(
    const BivariatePolynomial& other) {
  *this = *this * other;
  return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a,
                              const BivariatePolynomial& b) {
  BivariatePolynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.add_term({ma.x + mb.x, ma.y + mb.y}, ca * cb);
    }
  }
  return out;
}

BivariatePolynomial BivariatePolynomial::operator-() const {
  BivariatePolynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

BivariatePolynomial BivariatePolynomial::scaled(const Rational& factor) const {
  if (factor == 0) return {};
  BivariatePolynomial out = *this;
  for (auto& [m, c] : out.terms_) c *= factor;
  return out;
}

BivariatePolynomial BivariatePolynomial::derivative_x() const {
  BivariatePolynomial out;
  for (const auto& [m, c] : terms_) {
    if (m.x > 0) out.add_term({m.x - 1, m.y}, c * m.x);
  }
  return out;
}

BivariatePolynomial BivariatePolynomial::derivative_y() const {
  BivariatePolynomial out;
  for (const auto& [m, c] : terms_) {
    if (m.y > 0) out.add_term({m.x, m.y - 1}, c * m.y);
  }
  return out;
}

BivariatePolynomial BivariatePolynomial::substitute_y(
    const Rational& value) const {
  BivariatePolynomial out;
  for (const auto& [m, c] : terms_) {
    Rational power = 1;
    for (int i = 0; i < m.y; ++i) power *= value;
    out.add_term({m.x, 0}, c * power);
  }
  return out;
}

BivariatePolynomial BivariatePolynomial::truncated(int max_x,
                                                   int max_y) const {
  BivariatePolynomial out;
  for (const auto& [m, c] : terms_) {
    if (m.x <= max_x && m.y <= max_y) out.terms_.emplace(m, c);
  }
  return out;
}

double BivariatePolynomial::evaluate(double x, double y) const {
  double sum = 0.0;
  for (const auto& [m, c] : terms_) {
    sum += c.get_d() * std::pow(x, m.x) * std::pow(y, m.y);
  }
  return sum;
}

std::string BivariatePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string factors;
    if (m.x == 1) factors = "x";
    if (m.x > 1) factors = "x^" + std::to_string(m.x);
    if (m.y > 0) {
      if (!factors.empty()) factors += '*';
      factors += m.y == 1 ? "y" : "y^" + std::to_string(m.y);
    }
    if (factors.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += factors;
    } else {
      out += magnitude.get_str() + '*' + factors;
    }
  }
  return out;
}

BivariatePolynomial pow(const BivariatePolynomial& base, unsigned exponent) {
  BivariatePolynomial result = 1;
  BivariatePolynomial square = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent != 0) square *= square;
  }
  return result;
}

}  // namespace arndt
