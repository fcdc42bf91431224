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

#ifndef LOCDIM_COMBINATORICS_HPP_
#define LOCDIM_COMBINATORICS_HPP_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace locdim {

// Saturating binomial coefficient; returns UINT64_MAX on overflow.
inline std::uint64_t Binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    if (result > std::numeric_limits<std::uint64_t>::max() / num) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    // result * num is divisible by i at every step.
    result = result * num / static_cast<std::uint64_t>(i);
  }
  return result;
}

// Advances `combo` (a strictly increasing k-subset of {0..n-1}) to its
// lexicographic successor. Returns false when `combo` was the last one.
inline bool NextCombination(std::vector<int>& combo, int n) {
  const int k = static_cast<int>(combo.size());
  int i = k - 1;
  while (i >= 0 && combo[i] == n - k + i) --i;
  if (i < 0) return false;
  ++combo[i];
  for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
  return true;
}

// Calls fn(const std::vector<int>&) for every k-subset of {0..n-1} in
// lexicographic order. fn may return false to stop early; the function
// then returns false.
template <typename Fn>
bool ForEachCombination(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return true;
  std::vector<int> combo(k);
  std::iota(combo.begin(), combo.end(), 0);
  do {
    if constexpr (std::is_same_v<decltype(fn(combo)), bool>) {
      if (!fn(combo)) return false;
    } else {
      fn(combo);
    }
  } while (NextCombination(combo, n));
  return true;
}

// Lexicographic rank of a strictly increasing k-subset of {0..n-1} among all
// k-subsets of {0..n-1}.
inline std::uint64_t RankCombination(std::span<const int> combo, int n) {
  const int k = static_cast<int>(combo.size());
  std::uint64_t rank = 0;
  int prev = -1;
  for (int i = 0; i < k; ++i) {
    if (combo[i] <= prev || combo[i] >= n) {
      throw std::invalid_argument("RankCombination: not a sorted subset");
    }
    for (int v = prev + 1; v < combo[i]; ++v) {
      rank += Binomial(n - v - 1, k - i - 1);
    }
    prev = combo[i];
  }
  return rank;
}

// Inverse of RankCombination.
inline std::vector<int> UnrankCombination(std::uint64_t rank, int n, int k) {
  if (rank >= Binomial(n, k)) throw std::invalid_argument("UnrankCombination: rank out of range");
  std::vector<int> combo;
  combo.reserve(k);
  int v = 0;
  for (int i = 0; i < k; ++i) {
    for (;; ++v) {
      const std::uint64_t block = Binomial(n - v - 1, k - i - 1);
      if (rank < block) break;
      rank -= block;
    }
    combo.push_back(v++);
  }
  return combo;
}

}  // namespace locdim

#endif  // LOCDIM_COMBINATORICS_HPP_
