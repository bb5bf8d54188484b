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

#include "arndt/closed_forms.h"

#include <gtest/gtest.h>

#include <stdexcept>

#include "arndt/enumerator.h"
#include "arndt/fibonacci.h"
#include "arndt/gf_catalog.h"
#include "arndt/power_series.h"

namespace arndt {
namespace {

TEST(GenBinomialTest, Examples) {
  EXPECT_EQ(gen_binomial(5, 2), 10);
  EXPECT_EQ(gen_binomial(-1, 0), 1);
  EXPECT_EQ(gen_binomial(3, 5), 0);
  EXPECT_EQ(gen_binomial(-2, 3), -4);  // (-2)(-3)(-4)/3!
  EXPECT_EQ(gen_binomial(7, -1), 0);
}

TEST(ArndtSumsTest, TableValues) {
  EXPECT_EQ(a_sum_alternating(6, 3), 4);
  EXPECT_EQ(a_sum_alternating(0, 0), 1);
  EXPECT_EQ(a_sum_alternating(10, 5), 16);
  EXPECT_EQ(a_sum_positive(9, 5), 8);
  EXPECT_EQ(a_sum_positive(4, 3), 1);
  EXPECT_EQ(a_sum_positive(0, 0), 1);
}

TEST(ArndtSumsTest, FirstColumnIsOne) {
  for (int n = 1; n <= 40; ++n) {
    EXPECT_EQ(a_sum_alternating(n, 1), 1) << n;
    EXPECT_EQ(a_sum_positive(n, 1), 1) << n;
  }
}

TEST(ArndtSumsTest, FourPathsAgree) {
  const auto rec = a_recurrence_triangle(40);
  const auto gf_tri = expand(gf::arndt(), 40).to_count_triangle();
  const auto brute = parts_triangle(16, FamilySpec::arndt());
  for (int n = 0; n <= 40; ++n) {
    for (int m = 0; m <= n; ++m) {
      const BigInt a = a_sum_alternating(n, m);
      ASSERT_EQ(a_sum_positive(n, m), a) << n << "," << m;
      ASSERT_EQ(rec.at(n, m), a) << n << "," << m;
      ASSERT_EQ(gf_tri.at(n, m), a) << n << "," << m;
      if (n <= 16) {
        ASSERT_EQ(brute.at(n, m), a) << n << "," << m;
      }
    }
  }
}

TEST(RecurrenceTriangleTest, Rows) {
  const auto tri = a_recurrence_triangle(10);
  EXPECT_EQ(tri.row(10), (std::vector<BigInt>{0, 1, 4, 16, 14, 16, 3, 1}));
  EXPECT_EQ(tri.row(0), (std::vector<BigInt>{1}));
}

TEST(WzResidualTest, VanishesEverywhere) {
  const auto tri = a_recurrence_triangle(42);
  EXPECT_EQ(wz_residual(5, 2, tri), 0);
  EXPECT_EQ(wz_residual(0, 1, tri), 0);
  for (int n = 0; n <= 40; ++n) {
    for (int m = 0; m <= n + 2; ++m) {
      ASSERT_EQ(wz_residual(n, m, tri), 0) << n << "," << m;
    }
  }
  EXPECT_THROW(wz_residual(41, 1, a_recurrence_triangle(41)), std::out_of_range);
}

TEST(WzResidualTest, DetectsCorruptedTable) {
  auto tri = a_recurrence_triangle(12);
  tri.set(7, 2, 4);
  EXPECT_NE(wz_residual(5, 2, tri), 0);
}

TEST(FibonacciDoubleSumTest, Values) {
  EXPECT_EQ(fibonacci_double_sum_alternating(6), 8);
  EXPECT_EQ(fibonacci_double_sum_positive(6), 8);
  EXPECT_EQ(fibonacci_double_sum_alternating(1), 1);
  EXPECT_EQ(fibonacci_double_sum_positive(1), 1);
  EXPECT_EQ(fibonacci_double_sum_alternating(30), 832040);
  EXPECT_EQ(fibonacci_double_sum_positive(30), 832040);
  for (int n = 1; n <= 40; ++n) {
    EXPECT_EQ(fibonacci_double_sum_alternating(n), fibonacci(n)) << n;
    EXPECT_EQ(fibonacci_double_sum_positive(n), fibonacci(n)) << n;
  }
}

TEST(LastPartClosedFormTest, Values) {
  EXPECT_EQ(b_closed(10, 1), 26);
  EXPECT_EQ(b_closed(8, 2), 5);
  EXPECT_EQ(b_closed(0, 0), 1);
  EXPECT_EQ(b_closed(5, 0), 0);
  EXPECT_EQ(b_closed_triangle(40),
            expand(gf::last_part(), 40).to_count_triangle());
  EXPECT_EQ(b_closed_triangle(16), last_triangle(16, FamilySpec::arndt()));
}

TEST(LastPartClosedFormTest, FibonacciForm) {
  for (int m = 1; m <= 8; ++m) {
    for (int n = 2 * m + 2; n <= 40; ++n) {
      EXPECT_EQ(b_closed(n, m), fibonacci(n - m - 2) + fibonacci(n - 2 * m - 1))
          << n << "," << m;
      EXPECT_EQ(b_fibonacci_form(n, m), b_closed(n, m));
    }
  }
  EXPECT_THROW(b_fibonacci_form(5, 2), std::domain_error);
}

TEST(CumulativeTest, Identities) {
  EXPECT_EQ(b_at_most(10, 1), 26);
  for (int n = 6; n <= 40; ++n) {
    EXPECT_EQ(b_at_least(n, 2), fibonacci(n - 2) + fibonacci(n - 4)) << n;
  }
  for (int n = 1; n <= 40; ++n) EXPECT_EQ(b_at_most(n, n), fibonacci(n)) << n;
  for (int k = 1; k <= 8; ++k) {
    for (int n = 2 * k + 2; n <= 40; ++n) {
      BigInt at_most = 0;
      BigInt at_least = 0;
      for (int j = 1; j <= n; ++j) {
        if (j <= k) at_most += b_closed(n, j);
        if (j >= k) at_least += b_closed(n, j);
      }
      EXPECT_EQ(b_at_most_closed(n, k), at_most) << n << "," << k;
      EXPECT_EQ(b_at_least_closed(n, k), at_least) << n << "," << k;
      EXPECT_EQ(b_at_most(n, k), at_most);
      EXPECT_EQ(b_at_least(n, k), at_least);
    }
  }
}

TEST(StatisticsTest, Values) {
  EXPECT_EQ(pn_closed(6), 21);
  EXPECT_EQ(pn_closed(7), 38);
  EXPECT_EQ(dn_closed(6), 17);
  EXPECT_EQ(dn_closed(7), 29);
  for (int n = 0; n <= 20; ++n) {
    EXPECT_EQ(dn_closed(n), total_last(n)) << n;
    EXPECT_EQ(pn_closed(n), total_parts(n)) << n;
  }
}

}  // namespace
}  // namespace arndt
