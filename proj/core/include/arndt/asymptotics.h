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

#ifndef ARNDT_ASYMPTOTICS_H_
#define ARNDT_ASYMPTOTICS_H_

#include "arndt/count_triangle.h"
#include "arndt/power_series.h"

namespace arndt {

// The golden ratio, (1 + sqrt 5) / 2.
double golden_ratio();

// Dominant pole 1/beta of a univariate rational GF and its multiplicity.
struct PoleSpec {
  double beta = 1.0;
  int multiplicity = 1;
};

// Relative tolerance for accepting 1/beta as a root of the denominator.
inline constexpr double kPoleTolerance = 1e-9;

// Leading-order estimate of [x^n] f/g for a rational GF with a unique
// smallest-modulus pole 1/beta of multiplicity nu:
//   nu * (-beta)^nu * f(1/beta) / g^(nu)(1/beta) * beta^n * n^(nu-1).
// Numerator and denominator are assumed coprime (not checked).
// Throws std::invalid_argument if f depends on y, beta <= 0, nu < 1, or if
// 1/beta is not a root of g of multiplicity >= nu (residuals above tolerance).
double dominant_asymptotic(const RationalGF& f, const PoleSpec& pole, int n);

// The prefactor of dominant_asymptotic, without beta^n n^(nu-1).
double dominant_constant(const RationalGF& f, const PoleSpec& pole);

// n^(m-1) / (2^floor(m/2) (m-1)!). Throws std::domain_error for m < 1.
double a_asymptotic(int n, int m);

// phi^(n-m-2) / sqrt 5 * (1 + phi^-(m-1)). Throws std::domain_error unless
// m >= 1 and n >= 2m.
double b_asymptotic(int n, int m);

// p(n) / F_n and d(n) / F_n as exact rationals. Throws std::domain_error for
// n < 1.
Rational expected_parts(int n);
Rational expected_last(int n);

// Limits the two expectations approach: slope 3/sqrt 5 - 1 and sqrt 5.
double expected_parts_slope();
double expected_last_limit();

}  // namespace arndt

#endif  // ARNDT_ASYMPTOTICS_H_
