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

#include "arndt/composition.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

namespace arndt {
namespace {

// Every composition of n, generated recursively by first part.
std::vector<Composition> all_compositions(int n) {
  std::vector<Composition> out;
  std::vector<int> prefix;
  std::function<void(int)> go = [&](int rest) {
    if (rest == 0) {
      out.emplace_back(prefix);
      return;
    }
    for (int first = 1; first <= rest; ++first) {
      prefix.push_back(first);
      go(rest - first);
      prefix.pop_back();
    }
  };
  go(n);
  return out;
}

TEST(CompositionTest, BasicAccessors) {
  const Composition c{2, 1, 2, 1};
  EXPECT_EQ(c.weight(), 6);
  EXPECT_EQ(c.size(), 4);
  EXPECT_EQ(c.last(), 1);
  EXPECT_EQ(c.to_string(), "(2,1,2,1)");
}

TEST(CompositionTest, EmptyCompositionIsValid) {
  const Composition empty;
  EXPECT_EQ(empty.weight(), 0);
  EXPECT_EQ(empty.size(), 0);
  EXPECT_EQ(empty.to_string(), "()");
  EXPECT_THROW(empty.last(), std::domain_error);
}

TEST(CompositionTest, RejectsNonPositiveParts) {
  EXPECT_THROW(Composition({2, 0, 1}), std::invalid_argument);
  EXPECT_THROW(Composition({-1}), std::invalid_argument);
}

TEST(ArndtPredicateTest, Examples) {
  EXPECT_TRUE(is_arndt(Composition{2, 1, 2, 1}));
  EXPECT_TRUE(is_arndt(Composition{}));
  EXPECT_FALSE(is_arndt(Composition{1, 1, 2}));
  EXPECT_TRUE(is_arndt(Composition{6}));
  EXPECT_FALSE(is_arndt(Composition{2, 2}));
}

TEST(KArndtPredicateTest, Examples) {
  EXPECT_TRUE(is_k_arndt(Composition{5, 1, 4}, 3));
  EXPECT_TRUE(is_k_arndt(Composition{1, 2}, -3));
  EXPECT_FALSE(is_k_arndt(Composition{1, 5}, -3));
  EXPECT_FALSE(is_k_arndt(Composition{4, 2}, 3));
}

TEST(KArndtPredicateTest, ZeroCoincidesWithArndt) {
  for (int n = 0; n <= 10; ++n) {
    for (const auto& c : all_compositions(n)) {
      EXPECT_EQ(is_k_arndt(c, 0), is_arndt(c)) << c.to_string();
    }
  }
}

TEST(KBlockPredicateTest, Examples) {
  EXPECT_TRUE(is_k_block_arndt(Composition{4, 2, 1, 2, 1}, 3));
  EXPECT_TRUE(is_k_block_arndt(Composition{5, 3, 1, 1}, 3));
  EXPECT_FALSE(is_k_block_arndt(Composition{5, 1, 3, 1}, 3));
  EXPECT_FALSE(is_k_block_arndt(Composition{3, 1, 2, 2, 2}, 3));
  EXPECT_THROW(is_k_block_arndt(Composition{1}, 0), std::invalid_argument);
}

TEST(KBlockPredicateTest, BlockOneAcceptsEverythingAndBlockTwoIsArndt) {
  for (int n = 0; n <= 10; ++n) {
    for (const auto& c : all_compositions(n)) {
      EXPECT_TRUE(is_k_block_arndt(c, 1)) << c.to_string();
      EXPECT_EQ(is_k_block_arndt(c, 2), is_arndt(c)) << c.to_string();
    }
  }
}

TEST(AntipalindromicTest, Examples) {
  EXPECT_TRUE(is_antipalindromic(Composition{1, 2, 6, 3, 2}));
  EXPECT_TRUE(is_antipalindromic(Composition{}));
  EXPECT_FALSE(is_antipalindromic(Composition{1, 2, 1}));
}

TEST(ReducedRepresentativeTest, Examples) {
  EXPECT_TRUE(is_reduced_ap_representative(Composition{2, 3, 6, 2, 1}));
  EXPECT_FALSE(is_reduced_ap_representative(Composition{1, 2, 6, 3, 2}));
  EXPECT_TRUE(is_reduced_ap_representative(Composition{5}));
}

TEST(FlipClassTest, Examples) {
  std::vector<Composition> expected = {
      {1, 2, 6, 3, 2}, {2, 2, 6, 3, 1}, {1, 3, 6, 2, 2}, {2, 3, 6, 2, 1}};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(flip_class(Composition{1, 2, 6, 3, 2}), expected);
  EXPECT_EQ(flip_class(Composition{7}), std::vector<Composition>{Composition{7}});
  std::vector<Composition> pair = {{1, 3}, {3, 1}};
  std::sort(pair.begin(), pair.end());
  EXPECT_EQ(flip_class(Composition{3, 1}), pair);
  EXPECT_THROW(flip_class(Composition{1, 2, 1}), std::domain_error);
}

TEST(FlipClassTest, SizesAndSingleRepresentative) {
  for (int n = 0; n <= 12; ++n) {
    for (const auto& c : all_compositions(n)) {
      if (!is_antipalindromic(c)) continue;
      const auto cls = flip_class(c);
      EXPECT_EQ(cls.size(), std::size_t{1} << (c.size() / 2)) << c.to_string();
      EXPECT_EQ(std::count_if(cls.begin(), cls.end(),
                              [](const Composition& x) {
                                return is_reduced_ap_representative(x);
                              }),
                1);
      for (const auto& member : cls) EXPECT_TRUE(is_antipalindromic(member));
    }
  }
}

TEST(FamilySpecTest, ContainsMatchesPredicates) {
  const auto block = FamilySpec::k_block_arndt(3);
  const auto karndt = FamilySpec::k_arndt(-2);
  for (const auto& c : all_compositions(9)) {
    EXPECT_EQ(FamilySpec::arndt().contains(c), is_arndt(c));
    EXPECT_EQ(block.contains(c), is_k_block_arndt(c, 3));
    EXPECT_EQ(karndt.contains(c), is_k_arndt(c, -2));
    EXPECT_EQ(FamilySpec::antipalindromic().contains(c), is_antipalindromic(c));
    EXPECT_EQ(FamilySpec::reduced_ap().contains(c),
              is_reduced_ap_representative(c));
    EXPECT_TRUE(FamilySpec::unrestricted().contains(c));
  }
  EXPECT_THROW(FamilySpec::k_block_arndt(0), std::invalid_argument);
}

}  // namespace
}  // namespace arndt
