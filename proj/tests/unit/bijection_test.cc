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

#include "arndt/bijection.h"

#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

#include "arndt/enumerator.h"

namespace arndt {
namespace {

TEST(BijectionTest, WorkedExamples) {
  EXPECT_EQ(reduced_ap_to_arndt(Composition{2, 3, 6, 2, 1}),
            (Composition{2, 1, 3, 2, 6}));
  EXPECT_EQ(arndt_to_reduced_ap(Composition{2, 1, 3, 2, 6}),
            (Composition{2, 3, 6, 2, 1}));
  EXPECT_EQ(reduced_ap_to_arndt(Composition{5}), Composition{5});
  EXPECT_EQ(reduced_ap_to_arndt(Composition{3, 1}), (Composition{3, 1}));
  EXPECT_EQ(arndt_to_reduced_ap(Composition{}), Composition{});
  const Composition image = arndt_to_reduced_ap(Composition{2, 1, 2, 1});
  EXPECT_EQ(image, (Composition{2, 2, 1, 1}));
  EXPECT_TRUE(is_reduced_ap_representative(image));
}

TEST(BijectionTest, RejectsInvalidInput) {
  EXPECT_THROW(reduced_ap_to_arndt(Composition{1, 2, 6, 3, 2}), std::domain_error);
  EXPECT_THROW(arndt_to_reduced_ap(Composition{1, 2}), std::domain_error);
}

TEST(BijectionTest, BijectiveUpToEighteen) {
  for (int n = 0; n <= 18; ++n) {
    std::set<Composition> image;
    for (const auto& c : enumerate_reduced_ap(n)) {
      const Composition a = reduced_ap_to_arndt(c);
      ASSERT_TRUE(is_arndt(a)) << c.to_string();
      ASSERT_EQ(a.weight(), c.weight());
      ASSERT_EQ(a.size(), c.size());
      ASSERT_EQ(arndt_to_reduced_ap(a), c);
      ASSERT_TRUE(image.insert(a).second) << "collision at " << a.to_string();
    }
    std::set<Composition> arndt;
    for (const auto& a : members_of(n, FamilySpec::arndt())) {
      ASSERT_EQ(reduced_ap_to_arndt(arndt_to_reduced_ap(a)), a);
      arndt.insert(a);
    }
    EXPECT_EQ(image, arndt) << "n=" << n;
  }
}

}  // namespace
}  // namespace arndt
