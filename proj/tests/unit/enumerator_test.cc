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

#include "arndt/enumerator.h"

#include <gtest/gtest.h>

#include <cstdint>
#include <set>
#include <vector>

#include "arndt/composition.h"

namespace arndt {
namespace {

std::vector<BigInt> big(std::initializer_list<long> values) {
  return {values.begin(), values.end()};
}

std::uint64_t fib(int n) {
  std::uint64_t a = 0;
  std::uint64_t b = 1;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t next = a + b;
    a = b;
    b = next;
  }
  return a;
}

TEST(CompositionStreamTest, CompositionsOfFour) {
  std::vector<Composition> got;
  for (const auto& c : compositions_of(4)) got.push_back(c);
  const std::vector<Composition> expected = {
      {4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 3}, {1, 2, 1}, {1, 1, 2}, {1, 1, 1, 1}};
  EXPECT_EQ(got, expected);
}

TEST(CompositionStreamTest, EmptyAndCounts) {
  std::vector<Composition> zero;
  for (const auto& c : compositions_of(0)) zero.push_back(c);
  EXPECT_EQ(zero, std::vector<Composition>{Composition{}});

  std::set<Composition> twelve;
  for (const auto& c : compositions_of(12)) {
    EXPECT_EQ(c.weight(), 12);
    twelve.insert(c);
  }
  EXPECT_EQ(twelve.size(), 2048u);
}

TEST(CompositionStreamTest, ArndtOfSixInCanonicalOrder) {
  std::vector<Composition> got;
  for (const auto& c : members_of(6, FamilySpec::arndt())) got.push_back(c);
  const std::vector<Composition> expected = {
      {6}, {5, 1}, {4, 2}, {4, 1, 1}, {3, 2, 1}, {3, 1, 2}, {2, 1, 3}, {2, 1, 2, 1}};
  EXPECT_EQ(got, expected);
}

TEST(CompositionStreamTest, CapAndDomain) {
  EXPECT_THROW(compositions_of(29), CapExceeded);
  EXPECT_THROW(compositions_of(-1), std::domain_error);
  EnumerationLimits limits;
  limits.max_n = 30;
  EXPECT_NO_THROW(compositions_of(30, limits));
  try {
    count_members(40, FamilySpec::arndt());
    FAIL() << "expected CapExceeded";
  } catch (const CapExceeded& e) {
    EXPECT_EQ(e.n(), 40);
    EXPECT_EQ(e.max_n(), EnumerationLimits::kDefaultMaxN);
  }
}

TEST(CountByPartsTest, Examples) {
  EXPECT_EQ(count_by_parts(6, FamilySpec::arndt()), big({0, 1, 2, 4, 1}));
  EXPECT_EQ(count_by_parts(0, FamilySpec::arndt()), big({1}));
  BigInt total = 0;
  for (const auto& v : count_by_parts(10, FamilySpec::k_arndt(3))) total += v;
  EXPECT_EQ(total, 10);
}

TEST(CountByLastTest, Examples) {
  EXPECT_EQ(count_by_last(6, FamilySpec::arndt()), big({0, 4, 2, 1, 0, 0, 1}));
  EXPECT_EQ(count_by_last(10, FamilySpec::arndt()),
            big({0, 26, 13, 7, 4, 2, 1, 1, 0, 0, 1}));
  EXPECT_EQ(count_by_last(1, FamilySpec::arndt()), big({0, 1}));
}

TEST(TotalsTest, Examples) {
  EXPECT_EQ(total_parts(6), 21);
  EXPECT_EQ(total_parts(0), 0);
  EXPECT_EQ(total_parts(7), 38);
  EXPECT_EQ(total_last(6), 17);
  EXPECT_EQ(total_last(1), 1);
  EXPECT_EQ(total_last(7), 29);
}

TEST(CountMembersTest, ArndtCountIsFibonacci) {
  for (int n = 1; n <= 22; ++n) {
    EXPECT_EQ(count_members(n, FamilySpec::arndt()), BigInt(std::to_string(fib(n))))
        << "n=" << n;
  }
}

TEST(ReducedApTest, Examples) {
  std::vector<Composition> zero;
  for (const auto& c : enumerate_reduced_ap(0)) zero.push_back(c);
  EXPECT_EQ(zero, std::vector<Composition>{Composition{}});

  std::set<Composition> two_parts;
  for (const auto& c : enumerate_reduced_ap(5)) {
    if (c.size() == 2) two_parts.insert(c);
  }
  EXPECT_EQ(two_parts, (std::set<Composition>{{4, 1}, {3, 2}}));
}

TEST(ReducedApTest, CountsMatchArndtByParts) {
  EXPECT_EQ(parts_triangle(14, FamilySpec::reduced_ap()),
            parts_triangle(14, FamilySpec::arndt()));
}

TEST(TriangleTest, RowSumsAreFamilyTotals) {
  const auto tri = parts_triangle(12, FamilySpec::k_block_arndt(3));
  for (int n = 0; n <= 12; ++n) {
    EXPECT_EQ(tri.row_sum(n), count_members(n, FamilySpec::k_block_arndt(3)));
  }
  EXPECT_EQ(tri.get(12, 40), 0);
  EXPECT_EQ(tri.get(99, 1), 0);
  EXPECT_THROW(tri.at(13, 1), std::out_of_range);
}

TEST(TriangleTest, SingleThreadMatchesParallel) {
  EnumerationLimits serial;
  serial.threads = 1;
  EXPECT_EQ(parts_triangle(16, FamilySpec::arndt(), serial),
            parts_triangle(16, FamilySpec::arndt()));
  EXPECT_EQ(last_triangle(16, FamilySpec::arndt(), serial),
            last_triangle(16, FamilySpec::arndt()));
}

}  // namespace
}  // namespace arndt
