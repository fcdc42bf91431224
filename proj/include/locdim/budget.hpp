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

#ifndef LOCDIM_BUDGET_HPP_
#define LOCDIM_BUDGET_HPP_

#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>

namespace locdim {

// Work limit shared by the exponential searches. A node is whatever unit the
// caller counts (search nodes, belief/placement evaluations, ...).
struct Budget {
  std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
  std::optional<double> max_seconds;
  int threads = 1;

  static Budget Nodes(std::uint64_t n) {
    Budget b;
    b.max_nodes = n;
    return b;
  }
};

// Thread-safe spend counter for one run against a Budget.
class BudgetMeter {
 public:
  explicit BudgetMeter(const Budget& budget)
      : max_nodes_(budget.max_nodes), start_(Clock::now()) {
    if (budget.max_seconds) {
      deadline_ = start_ + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(*budget.max_seconds));
    }
  }

  // Records `n` units of work; returns false once the budget is exhausted.
  bool Spend(std::uint64_t n = 1) {
    const std::uint64_t before = spent_.fetch_add(n, std::memory_order_relaxed);
    if (before + n > max_nodes_) {
      exhausted_.store(true, std::memory_order_relaxed);
    } else if (deadline_ && ((before & 0x3ff) == 0) && Clock::now() > *deadline_) {
      exhausted_.store(true, std::memory_order_relaxed);
    }
    return !exhausted();
  }

  bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }
  std::uint64_t spent() const { return spent_.load(std::memory_order_relaxed); }
  double elapsed_seconds() const {
    return std::chrono::duration<double>(Clock::now() - start_).count();
  }

 private:
  using Clock = std::chrono::steady_clock;
  std::uint64_t max_nodes_;
  Clock::time_point start_;
  std::optional<Clock::time_point> deadline_;
  std::atomic<std::uint64_t> spent_{0};
  std::atomic<bool> exhausted_{false};
};

}  // namespace locdim

#endif  // LOCDIM_BUDGET_HPP_
