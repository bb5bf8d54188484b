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

#include "arndt/asymptotics.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "arndt/closed_forms.h"
#include "arndt/fibonacci.h"

namespace arndt {
namespace {

// Scale for the root test: sum of |coefficient| * rho^degree.
double magnitude(const BivariatePolynomial& p, double rho) {
  double sum = 0.0;
  for (const auto& [m, c] : p.terms()) {
    sum += std::abs(c.get_d()) * std::pow(rho, m.x);
  }
  return sum;
}

}  // namespace

double golden_ratio() {
  static const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  return phi;
}

double dominant_constant(const RationalGF& f, const PoleSpec& pole) {
  if (!f.is_univariate()) {
    throw std::invalid_argument("dominant_asymptotic needs a GF in x only");
  }
  if (!(pole.beta > 0.0) || pole.multiplicity < 1) {
    throw std::invalid_argument("pole needs beta > 0 and multiplicity >= 1");
  }
  const double rho = 1.0 / pole.beta;
  BivariatePolynomial derivative = f.denominator();
  for (int order = 0; order < pole.multiplicity; ++order) {
    const double residual = std::abs(derivative.evaluate(rho));
    const double scale = std::max(1.0, magnitude(derivative, rho));
    if (residual > kPoleTolerance * scale) {
      throw std::invalid_argument(
          "1/beta = " + std::to_string(rho) + " is not a root of order " +
          std::to_string(pole.multiplicity) + " of " +
          f.denominator().to_string() + " (derivative " +
          std::to_string(order) + " is " + std::to_string(residual) + ")");
    }
    derivative = derivative.derivative_x();
  }
  const int nu = pole.multiplicity;
  const double g_nu = derivative.evaluate(rho);
  return nu * std::pow(-pole.beta, nu) * f.numerator().evaluate(rho) / g_nu;
}

double dominant_asymptotic(const RationalGF& f, const PoleSpec& pole, int n) {
  return dominant_constant(f, pole) * std::pow(pole.beta, n) *
         std::pow(static_cast<double>(n), pole.multiplicity - 1);
}

double a_asymptotic(int n, int m) {
  if (m < 1) throw std::domain_error("a(n, m) asymptotic needs m >= 1");
  // lgamma keeps (m-1)! and n^(m-1) finite for large arguments.
  const double log_value = (m - 1) * std::log(static_cast<double>(n)) -
                           (m / 2) * std::log(2.0) - std::lgamma(m);
  return std::exp(log_value);
}

double b_asymptotic(int n, int m) {
  if (m < 1 || n < 2 * m) {
    throw std::domain_error("b(n, m) asymptotic needs m >= 1 and n >= 2m, got (" +
                            std::to_string(n) + ", " + std::to_string(m) + ")");
  }
  const double phi = golden_ratio();
  return std::pow(phi, n - m - 2) / std::sqrt(5.0) *
         (1.0 + std::pow(phi, -(m - 1)));
}

Rational expected_parts(int n) {
  if (n < 1) throw std::domain_error("expected_parts needs n >= 1");
  Rational r(pn_closed(n), fibonacci(n));
  r.canonicalize();
  return r;
}

Rational expected_last(int n) {
  if (n < 1) throw std::domain_error("expected_last needs n >= 1");
  Rational r(dn_closed(n), fibonacci(n));
  r.canonicalize();
  return r;
}

double expected_parts_slope() { return 3.0 / std::sqrt(5.0) - 1.0; }

double expected_last_limit() { return std::sqrt(5.0); }

}  // namespace arndt
