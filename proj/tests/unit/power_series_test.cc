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

#include "arndt/power_series.h"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "arndt/bivariate_polynomial.h"
#include "arndt/enumerator.h"
#include "arndt/gf_catalog.h"

namespace arndt {
namespace {

const BivariatePolynomial kX = BivariatePolynomial::x();
const BivariatePolynomial kY = BivariatePolynomial::y();

BivariatePolynomial random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> deg(0, max_degree);
  BivariatePolynomial p;
  for (int t = 0; t < 6; ++t) {
    p += BivariatePolynomial::monomial(Rational(coeff(rng), 1 + deg(rng)),
                                       deg(rng), deg(rng));
  }
  return p;
}

TEST(BivariatePolynomialTest, RingExamples) {
  EXPECT_EQ((1 - kX) * (1 + kX), 1 - pow(kX, 2));
  EXPECT_EQ(pow(1 - kX, 2) * (1 + kX), 1 - kX - pow(kX, 2) + pow(kX, 3));
  EXPECT_EQ(poly_add(kX, kY), kY + kX);
  EXPECT_EQ(poly_scale(kX * kY, Rational(3, 2)),
            BivariatePolynomial::monomial(Rational(3, 2), 1, 1));
}

TEST(BivariatePolynomialTest, NoStoredZeros) {
  const BivariatePolynomial p = kX + kY - kX;
  EXPECT_EQ(p.terms().size(), 1u);
  EXPECT_TRUE((kX - kX).is_zero());
  EXPECT_EQ(p.degree_x(), 0);
  EXPECT_EQ(p.degree_y(), 1);
}

TEST(BivariatePolynomialTest, UnreducedFractionsCompareEqual) {
  EXPECT_EQ(BivariatePolynomial::monomial(Rational(4, 2), 1, 0), 2 * kX);
  EXPECT_EQ(BivariatePolynomial(Rational(-6, 4)), BivariatePolynomial(Rational(-3, 2)));
}

TEST(BivariatePolynomialTest, MultiplicationIsAssociativeAndDistributive) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const auto p = random_poly(rng, 6);
    const auto q = random_poly(rng, 6);
    const auto r = random_poly(rng, 6);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_EQ(p * q, q * p);
  }
}

TEST(BivariatePolynomialTest, CalculusAndSubstitution) {
  const auto p = pow(kX, 2) * pow(kY, 3) + 2 * kX;
  EXPECT_EQ(p.derivative_y(), 3 * pow(kX, 2) * pow(kY, 2));
  EXPECT_EQ(p.derivative_x(), 2 * kX * pow(kY, 3) + 2);
  EXPECT_EQ(p.substitute_y(1), pow(kX, 2) + 2 * kX);
  EXPECT_DOUBLE_EQ(p.evaluate(2.0, 1.0), 8.0);
  EXPECT_EQ(p.truncated(1, 5), 2 * kX);
}

TEST(RationalGFTest, RejectsZeroConstantDenominator) {
  EXPECT_THROW(RationalGF(1, kX), std::domain_error);
  EXPECT_THROW(RationalGF(1, 0), std::domain_error);
}

TEST(RationalGFTest, AdditionExamples) {
  const RationalGF f(kX * kY, 1 - kX);
  EXPECT_TRUE(equivalent(f + RationalGF(0), f));
  const RationalGF j0(1);
  EXPECT_TRUE(equivalent(j0 + f, RationalGF(1 - kX + kX * kY, 1 - kX)));
}

TEST(RationalGFTest, GeometricSeriesOfOnePartIsAllCompositions) {
  const RationalGF j1(kX * kY, 1 - kX);
  const RationalGF all = rational_div(RationalGF(1), RationalGF(1) - j1);
  EXPECT_TRUE(equivalent(all, RationalGF(1 - kX, 1 - kX - kX * kY)));
  const auto series = expand(all, 10).to_count_triangle();
  EXPECT_EQ(series, parts_triangle(10, FamilySpec::unrestricted()));
}

TEST(RationalGFTest, DivisionByZeroConstantThrows) {
  EXPECT_THROW(rational_div(RationalGF(1), RationalGF(kX)), std::domain_error);
}

TEST(RationalGFTest, FieldOperationsAgreeWithSeries) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const RationalGF f(random_poly(rng, 3), 1 + kX * random_poly(rng, 2));
    const RationalGF g(1 + random_poly(rng, 3) * kX, 1 + kX * random_poly(rng, 2));
    const int n = 8;
    const auto sf = expand(f, n).to_polynomial();
    const auto sg = expand(g, n).to_polynomial();
    EXPECT_EQ(expand(f * g, n).to_polynomial(), (sf * sg).truncated(n, n));
    EXPECT_EQ(expand(f + g, n), expand(f, n) + expand(g, n));
    EXPECT_EQ(expand((f / g) * g, n), expand(f, n));
    EXPECT_TRUE(equivalent(f - f, RationalGF(0)));
  }
}

TEST(ExpandTest, ArndtRows) {
  const auto a = expand(gf::arndt(), 6);
  EXPECT_EQ(a.integer_row(6), (std::vector<BigInt>{0, 1, 2, 4, 1}));
  const auto a0 = expand(gf::arndt(), 0);
  EXPECT_EQ(a0.order(), 0);
  EXPECT_EQ(a0.coefficient(0, 0), 1);
  const auto b = expand(gf::last_part(), 5);
  EXPECT_EQ(b.integer_row(5), (std::vector<BigInt>{0, 2, 2, 0, 0, 1}));
  EXPECT_THROW(b.coefficient(6, 0), std::out_of_range);
}

TEST(ExpandTest, RoundTripDenominatorTimesSeries) {
  for (const auto& f : {gf::arndt(), gf::last_part(), gf::antipalindromic(),
                        gf::k_block(3), gf::k_arndt(-4)}) {
    const auto s = expand(f, 30).to_polynomial();
    EXPECT_EQ((f.denominator() * s).truncated(30, 30),
              f.numerator().truncated(30, 30));
  }
}

TEST(ExpandTest, RejectsFractionalIntegerRow) {
  const auto s = expand(RationalGF(Rational(1, 2)), 2);
  EXPECT_THROW(s.integer_row(0), std::domain_error);
  EXPECT_FALSE(s.all_nonnegative_integers());
}

TEST(DerivativeTest, Examples) {
  const auto x2 = pow(kX, 2);
  const auto x3 = pow(kX, 3);
  const auto x4 = pow(kX, 4);
  EXPECT_TRUE(equivalent(diff_y_at_1(gf::arndt()),
                         RationalGF(kX * (1 - kX + x3 - x4),
                                    pow(1 - kX - x2, 2))));
  EXPECT_TRUE(equivalent(diff_y_at_1(gf::last_part()),
                         RationalGF(kX * (1 + kX - x3),
                                    1 - kX - 2 * x2 + x3 + x4)));
  EXPECT_TRUE(equivalent(diff_y_at_1(gf::fibonacci()), RationalGF(0)));
}

TEST(EvalY1Test, Examples) {
  const auto x2 = pow(kX, 2);
  EXPECT_TRUE(equivalent(eval_y1(gf::arndt()), RationalGF(1 - x2, 1 - kX - x2)));
  EXPECT_EQ(eval_y1(gf::fibonacci()), gf::fibonacci());
  EXPECT_TRUE(equivalent(
      eval_y1(gf::k_block(3)),
      RationalGF(1 - x2 + pow(kX, 5) - pow(kX, 6),
                 1 - kX - x2 + pow(kX, 4) + pow(kX, 5) - 2 * pow(kX, 6))));
}

}  // namespace
}  // namespace arndt
