// Copyright 2026 The locdim Authors.
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

#include "locdim/combinatorics.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include <gtest/gtest.h>

namespace locdim {
namespace {

TEST(BinomialTest, MatchesPascalTriangle) {
  std::vector<std::vector<std::uint64_t>> pascal(41, std::vector<std::uint64_t>(41, 0));
  for (int n = 0; n <= 40; ++n) {
    pascal[n][0] = 1;
    for (int k = 1; k <= n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + (k < n ? pascal[n - 1][k] : 0);
  }
  for (int n = 0; n <= 40; ++n) {
    for (int k = 0; k <= n; ++k) EXPECT_EQ(Binomial(n, k), pascal[n][k]) << n << " " << k;
    EXPECT_EQ(Binomial(n, n + 1), 0u);
    EXPECT_EQ(Binomial(n, -1), 0u);
  }
}

TEST(CombinationTest, EnumeratesInLexOrderWithoutRepeats) {
  for (int n = 0; n <= 9; ++n) {
    for (int k = 0; k <= n; ++k) {
      std::vector<std::vector<int>> seen;
      ForEachCombination(n, k, [&](const std::vector<int>& c) { seen.push_back(c); });
      EXPECT_EQ(seen.size(), Binomial(n, k));
      EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
      EXPECT_EQ(std::set<std::vector<int>>(seen.begin(), seen.end()).size(), seen.size());
      for (std::size_t r = 0; r < seen.size(); ++r) {
        EXPECT_EQ(RankCombination(seen[r], n), r);
        EXPECT_EQ(UnrankCombination(r, n, k), seen[r]);
      }
    }
  }
}

TEST(CombinationTest, EarlyStopHonoured) {
  int calls = 0;
  ForEachCombination(10, 3, [&](const std::vector<int>&) { return ++calls < 7; });
  EXPECT_EQ(calls, 7);
}

}  // namespace
}  // namespace locdim
