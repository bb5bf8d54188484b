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

#include "arndt/gf_catalog.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "arndt/enumerator.h"
#include "arndt/power_series.h"

namespace arndt {
namespace {

// [x^n] of f at y = 1 for n = 0..order.
std::vector<BigInt> totals(const RationalGF& f, int order) {
  const auto series = expand(eval_y1(f), order, 0);
  std::vector<BigInt> out;
  for (int n = 0; n <= order; ++n) out.push_back(series.coefficient(n, 0).get_num());
  return out;
}

std::vector<BigInt> big(std::initializer_list<long> values) {
  return {values.begin(), values.end()};
}

// Number of partitions of n into exactly j distinct parts, by recursion on
// the largest part.
long distinct_partitions(int n, int j, int max_part) {
  if (j == 0) return n == 0 ? 1 : 0;
  long count = 0;
  for (int largest = std::min(n, max_part); largest >= 1; --largest) {
    count += distinct_partitions(n - largest, j - 1, largest - 1);
  }
  return count;
}

TEST(ArndtGFTest, Rows) {
  const auto a = expand(gf::arndt(), 5);
  EXPECT_EQ(a.integer_row(5), big({0, 1, 2, 2}));
  EXPECT_EQ(totals(gf::arndt(), 7), big({1, 1, 1, 2, 3, 5, 8, 13}));
  EXPECT_EQ(expand(gf::arndt(), 14).to_count_triangle(),
            parts_triangle(14, FamilySpec::arndt()));
}

TEST(AntipalindromicGFTest, MatchesBruteForceAndReducedScaling) {
  EXPECT_EQ(expand(gf::antipalindromic(), 12).to_count_triangle(),
            parts_triangle(12, FamilySpec::antipalindromic()));
  const auto ap = expand(gf::antipalindromic(), 20);
  const auto bp = expand(gf::reduced_ap(), 20);
  EXPECT_EQ(ap.coefficient(0, 0), 1);
  for (int n = 0; n <= 20; ++n) {
    for (int m = 0; m <= n; ++m) {
      EXPECT_EQ(ap.coefficient(n, m), Rational(1 << (m / 2)) * bp.coefficient(n, m));
    }
  }
}

TEST(ReducedApGFTest, EqualsArndtAsPair) {
  EXPECT_EQ(gf::reduced_ap(), gf::arndt());
  EXPECT_EQ(expand(gf::reduced_ap(), 14).to_count_triangle(),
            parts_triangle(14, FamilySpec::reduced_ap()));
}

TEST(LastPartGFTest, Rows) {
  const auto b = expand(gf::last_part(), 14);
  EXPECT_EQ(b.integer_row(6), big({0, 4, 2, 1, 0, 0, 1}));
  EXPECT_EQ(b.integer_row(2), big({0, 0, 1}));
  EXPECT_EQ(b.to_count_triangle(), last_triangle(14, FamilySpec::arndt()));
}

TEST(TotalsGFTest, Prefixes) {
  EXPECT_EQ(totals(gf::total_parts(), 7), big({0, 1, 1, 3, 6, 11, 21, 38}));
  EXPECT_EQ(totals(gf::total_last(), 7), big({0, 1, 2, 4, 6, 11, 17, 29}));
}

TEST(KArndtGFTest, Examples) {
  EXPECT_EQ(expand(gf::k_arndt(0), 30), expand(gf::arndt(), 30));
  EXPECT_EQ(totals(gf::k_arndt(3), 10).back(), 10);
  EXPECT_EQ(expand(gf::k_arndt(-3), 4).integer_row(4), big({0, 1, 3, 3, 1}));
}

TEST(KArndtGFTest, MatchesBruteForce) {
  for (int k = -4; k <= 4; ++k) {
    EXPECT_EQ(expand(gf::k_arndt(k), 12).to_count_triangle(),
              parts_triangle(12, FamilySpec::k_arndt(k)))
        << "k=" << k;
    EXPECT_TRUE(equivalent(eval_y1(gf::k_arndt(k)), gf::k_arndt_total(k)))
        << "k=" << k;
  }
}

TEST(DistinctPartsGFTest, Examples) {
  EXPECT_EQ(gf::distinct_parts(0), RationalGF(1));
  const auto x = BivariatePolynomial::x();
  EXPECT_TRUE(equivalent(gf::distinct_parts(1),
                         RationalGF(x * BivariatePolynomial::y(), 1 - x)));
  EXPECT_EQ(expand(gf::distinct_parts(2), 5).coefficient(5, 2), 2);
  for (int j = 1; j <= 4; ++j) {
    const auto s = expand(gf::distinct_parts(j), 20);
    for (int n = 0; n <= 20; ++n) {
      EXPECT_EQ(s.coefficient(n, j), distinct_partitions(n, j, n))
          << "j=" << j << " n=" << n;
    }
  }
  EXPECT_THROW(gf::distinct_parts(-1), std::invalid_argument);
}

TEST(KBlockGFTest, Examples) {
  EXPECT_EQ(expand(gf::k_block(2), 30), expand(gf::arndt(), 30));
  EXPECT_EQ(totals(gf::k_block(3), 9), big({1, 1, 1, 2, 2, 3, 4, 6, 8, 13}));
  EXPECT_EQ(totals(gf::k_block(4), 10), big({1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10}));
  EXPECT_TRUE(equivalent(gf::k_block(3), gf::k_block3_closed_form()));
  EXPECT_TRUE(equivalent(gf::k_block(4), gf::k_block4_closed_form()));
  EXPECT_TRUE(equivalent(eval_y1(gf::k_block(3)), gf::k_block3_total_closed_form()));
  EXPECT_TRUE(equivalent(eval_y1(gf::k_block(4)), gf::k_block4_total_closed_form()));
  EXPECT_THROW(gf::k_block(0), std::invalid_argument);
}

TEST(KBlockGFTest, MatchesBruteForce) {
  for (int k = 1; k <= 5; ++k) {
    EXPECT_EQ(expand(gf::k_block(k), 12).to_count_triangle(),
              parts_triangle(12, FamilySpec::k_block_arndt(k)))
        << "k=" << k;
  }
}

TEST(CatalogTest, LookupByName) {
  for (const auto& entry : gf::catalog_entries()) {
    const int k = entry.takes_k ? 2 : 0;
    EXPECT_NO_THROW(gf::by_name(entry.name, k)) << entry.name;
  }
  EXPECT_EQ(gf::by_name("block-arndt", 3), gf::k_block(3));
  EXPECT_THROW(gf::by_name("nonsense"), std::invalid_argument);
}

TEST(CatalogTest, AllCoefficientsNonnegativeIntegers) {
  for (const auto& entry : gf::catalog_entries()) {
    const int k = entry.takes_k ? 3 : 0;
    const auto s = expand(gf::by_name(entry.name, k), 40);
    EXPECT_TRUE(s.all_nonnegative_integers()) << entry.name;
  }
}

}  // namespace
}  // namespace arndt
