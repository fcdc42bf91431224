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

// The localization game as a game on beliefs. A belief is the set of
// vertices the robber may occupy given every probe so far. Each round the
// cops probe from a placement, which partitions the belief by distance
// vector; a singleton part locates the robber, any other part becomes the
// next belief after the robber moves (its closed-neighbourhood spread).

#ifndef LOCDIM_LOCALIZATION_HPP_
#define LOCDIM_LOCALIZATION_HPP_

#include <algorithm>
#include <bit>
#include <compare>
#include <limits>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "locdim/budget.hpp"
#include "locdim/graph.hpp"
#include "locdim/metric_dimension.hpp"

namespace locdim {

inline constexpr int kMaxGameVertices = 64;

inline void RequireGameSize(const Graph& g) {
  if (g.num_vertices() > kMaxGameVertices) {
    throw std::invalid_argument("localization game supports at most 64 vertices");
  }
}

// Nonempty vertex set stored as a 64-bit mask; the mask is the memo key.
class Belief {
 public:
  constexpr Belief() = default;
  constexpr explicit Belief(std::uint64_t mask) : mask_(mask) {}

  static Belief All(int n) {
    return Belief(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static Belief Single(int v) { return Belief(std::uint64_t{1} << v); }
  static Belief Of(std::span<const int> vertices) {
    std::uint64_t m = 0;
    for (int v : vertices) m |= std::uint64_t{1} << v;
    return Belief(m);
  }

  std::uint64_t mask() const { return mask_; }
  int size() const { return std::popcount(mask_); }
  bool empty() const { return mask_ == 0; }
  bool singleton() const { return mask_ != 0 && (mask_ & (mask_ - 1)) == 0; }
  bool contains(int v) const { return (mask_ >> v) & 1; }
  int first() const { return std::countr_zero(mask_); }
  bool SubsetOf(Belief other) const { return (mask_ & ~other.mask_) == 0; }

  std::vector<int> Vertices() const {
    std::vector<int> out;
    for (std::uint64_t m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  friend auto operator<=>(const Belief&, const Belief&) = default;

 private:
  std::uint64_t mask_ = 0;
};

// Sorted, duplicate-free cop positions.
using Placement = std::vector<int>;

// Distances from each cop of the placement, in placement order.
struct Observation {
  std::vector<int> distances;
  friend auto operator<=>(const Observation&, const Observation&) = default;
};

inline Placement MakePlacement(const Graph& g, std::span<const int> cops) {
  return internal::NormalizeVertexSet(g, cops, "Placement");
}

inline Observation Observe(const Graph& g, const Placement& placement, int robber) {
  Observation obs;
  obs.distances.reserve(placement.size());
  for (int c : placement) obs.distances.push_back(g.distance(c, robber));
  return obs;
}

// Splits `belief` by the distance vector each candidate would produce.
inline std::map<Observation, Belief> ProbePartition(const Graph& g, const Placement& placement,
                                                    Belief belief) {
  RequireGameSize(g);
  std::map<Observation, std::uint64_t> parts;
  for (int v : belief.Vertices()) parts[Observe(g, placement, v)] |= std::uint64_t{1} << v;
  std::map<Observation, Belief> out;
  for (auto& [obs, mask] : parts) out.emplace(obs, Belief(mask));
  return out;
}

// Union of closed neighbourhoods: every position after one robber move.
inline Belief Spread(const Graph& g, Belief belief) {
  RequireGameSize(g);
  std::uint64_t out = belief.mask();
  for (int v : belief.Vertices()) {
    for (int w : g.neighbors(v)) out |= std::uint64_t{1} << w;
  }
  return Belief(out);
}

namespace internal {

// Precomputed masks for fast partitioning and spreading.
class GameTables {
 public:
  explicit GameTables(const Graph& g) : n_(g.num_vertices()) {
    RequireGameSize(g);
    const int diameter = g.Diameter();
    layers_ = (diameter == Graph::kUnreachable ? n_ : diameter) + 2;
    layer_.assign(static_cast<std::size_t>(n_) * layers_, 0);
    closed_.assign(n_, 0);
    for (int c = 0; c < n_; ++c) {
      for (int v = 0; v < n_; ++v) {
        const int d = g.distance(c, v);
        const int slot = d == Graph::kUnreachable ? layers_ - 1 : d;
        layer_[static_cast<std::size_t>(c) * layers_ + slot] |= std::uint64_t{1} << v;
      }
      closed_[c] = std::uint64_t{1} << c;
      for (int w : g.neighbors(c)) closed_[c] |= std::uint64_t{1} << w;
    }
  }

  // Parts of `belief` under the placement given as a mask.
  void Partition(std::uint64_t belief, std::uint64_t placement,
                 std::vector<std::uint64_t>& parts) const {
    parts.clear();
    parts.push_back(belief);
    std::vector<std::uint64_t> next;
    for (std::uint64_t p = placement; p; p &= p - 1) {
      const int c = std::countr_zero(p);
      next.clear();
      for (std::uint64_t part : parts) {
        if ((part & (part - 1)) == 0) {
          next.push_back(part);
          continue;
        }
        const std::uint64_t* row = &layer_[static_cast<std::size_t>(c) * layers_];
        for (int d = 0; d < layers_; ++d) {
          const std::uint64_t piece = part & row[d];
          if (piece) next.push_back(piece);
        }
      }
      parts.swap(next);
    }
  }

  std::uint64_t Spread(std::uint64_t belief) const {
    std::uint64_t out = 0;
    for (std::uint64_t m = belief; m; m &= m - 1) out |= closed_[std::countr_zero(m)];
    return out;
  }

 private:
  int n_;
  int layers_ = 0;
  std::vector<std::uint64_t> layer_;
  std::vector<std::uint64_t> closed_;
};

inline std::uint64_t ApplyPermutation(const std::vector<int>& perm, std::uint64_t mask) {
  std::uint64_t out = 0;
  for (std::uint64_t m = mask; m; m &= m - 1) out |= std::uint64_t{1} << perm[std::countr_zero(m)];
  return out;
}

inline std::vector<int> InversePermutation(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
  return inv;
}

inline Placement MaskToPlacement(std::uint64_t mask) { return Belief(mask).Vertices(); }

}  // namespace internal

// Cop strategy that depends only on the current belief. Built by LocDecide;
// with symmetry reduction it stores one placement per orbit of beliefs and
// maps queries through the automorphism that canonicalises them.
class PositionalStrategy {
 public:
  PositionalStrategy() = default;
  PositionalStrategy(std::vector<std::vector<int>> group,
                     std::unordered_map<std::uint64_t, std::pair<std::uint64_t, int>> table)
      : group_(std::move(group)), table_(std::move(table)) {}

  // Placement for `belief`, or nullopt when the belief is not winning.
  std::optional<Placement> PlacementFor(Belief belief) const {
    if (belief.singleton()) return Placement{};
    const auto [canon, index] = Canonical(belief.mask());
    const auto it = table_.find(canon);
    if (it == table_.end()) return std::nullopt;
    if (index < 0) return internal::MaskToPlacement(it->second.first);
    const auto inverse = internal::InversePermutation(group_[index]);
    return internal::MaskToPlacement(internal::ApplyPermutation(inverse, it->second.first));
  }

  // Rounds this strategy needs from `belief` in the worst case.
  std::optional<int> RoundsFor(Belief belief) const {
    const auto it = table_.find(Canonical(belief.mask()).first);
    if (it == table_.end()) return std::nullopt;
    return it->second.second;
  }

  std::size_t size() const { return table_.size(); }

  // Canonical representative (least image) and the group element reaching
  // it; index -1 means the identity.
  std::pair<std::uint64_t, int> Canonical(std::uint64_t mask) const {
    std::uint64_t best = mask;
    int index = -1;
    for (std::size_t i = 0; i < group_.size(); ++i) {
      const std::uint64_t image = internal::ApplyPermutation(group_[i], mask);
      if (image < best) {
        best = image;
        index = static_cast<int>(i);
      }
    }
    return {best, index};
  }

 private:
  std::vector<std::vector<int>> group_;
  // canonical belief -> (placement mask, rounds to capture)
  std::unordered_map<std::uint64_t, std::pair<std::uint64_t, int>> table_;
};

struct LocDecideOptions {
  Budget budget = Budget::Nodes(200'000'000);
  // Size guard: larger instances return kUnknown unless raised.
  int max_vertices = 12;
  int max_cops = 4;
  // Reduce beliefs and placements modulo the automorphism group.
  bool use_symmetry = false;
  std::size_t max_automorphisms = 100000;
};

struct LocDecision {
  enum class Outcome { kCopWin, kRobberWin, kUnknown };
  Outcome outcome = Outcome::kUnknown;
  int cops = 0;
  int rounds = 0;  // worst-case rounds to capture on kCopWin
  PositionalStrategy strategy;
  std::size_t beliefs = 0;  // reachable (canonical) beliefs examined
  std::uint64_t evaluations = 0;
  std::string note;
};

// Least-fixed-point decision of whether `cops` cops locate the robber. A
// belief is won in round s when some placement leaves, in every part, either
// a single vertex or a part whose spread was won in an earlier round. The
// robber's start corresponds to the initial belief V.
inline LocDecision LocDecide(const Graph& g, int cops, const LocDecideOptions& options = {}) {
  RequireGameSize(g);
  LocDecision result;
  result.cops = cops;
  const int n = g.num_vertices();
  const std::uint64_t all = Belief::All(n).mask();
  if (n <= 1 || cops >= n) {
    std::unordered_map<std::uint64_t, std::pair<std::uint64_t, int>> table;
    if (n > 1) table[all] = {all, 1};
    result.outcome = LocDecision::Outcome::kCopWin;
    result.rounds = n > 1 ? 1 : 0;
    result.strategy = PositionalStrategy({}, std::move(table));
    return result;
  }
  if (cops < 1) {
    result.outcome = LocDecision::Outcome::kRobberWin;
    return result;
  }
  if (n > options.max_vertices || cops > options.max_cops) {
    result.note = "instance exceeds the size guard (vertices " + std::to_string(options.max_vertices) +
                  ", cops " + std::to_string(options.max_cops) + ")";
    return result;
  }

  std::vector<std::vector<int>> group;
  if (options.use_symmetry) {
    if (auto autos = Automorphisms(g, options.max_automorphisms)) group = std::move(*autos);
  }
  const internal::GameTables tables(g);
  BudgetMeter meter(options.budget);

  std::unordered_map<std::uint64_t, std::uint64_t> canon_cache;
  auto canonical = [&](std::uint64_t mask) {
    if (group.empty()) return mask;
    const auto it = canon_cache.find(mask);
    if (it != canon_cache.end()) return it->second;
    std::uint64_t best = mask;
    for (const auto& perm : group) best = std::min(best, internal::ApplyPermutation(perm, mask));
    canon_cache.emplace(mask, best);
    return best;
  };

  // Placements considered at a belief: all cop-subsets, reduced modulo the
  // belief's stabiliser when symmetry is on.
  std::vector<std::uint64_t> all_placements;
  ForEachCombination(n, cops, [&](const std::vector<int>& combo) {
    std::uint64_t m = 0;
    for (int v : combo) m |= std::uint64_t{1} << v;
    all_placements.push_back(m);
  });
  auto placements_for = [&](std::uint64_t belief) {
    if (group.empty()) return all_placements;
    std::vector<const std::vector<int>*> stabiliser;
    for (const auto& perm : group) {
      if (internal::ApplyPermutation(perm, belief) == belief) stabiliser.push_back(&perm);
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t p : all_placements) {
      bool minimal = true;
      for (const auto* perm : stabiliser) {
        if (internal::ApplyPermutation(*perm, p) < p) {
          minimal = false;
          break;
        }
      }
      if (minimal) out.push_back(p);
    }
    return out;
  };

  // Reachable canonical beliefs, breadth first from V.
  std::vector<std::uint64_t> beliefs;
  std::vector<std::vector<std::uint64_t>> options_at;
  std::unordered_map<std::uint64_t, int> index_of;
  const std::uint64_t root = canonical(all);
  beliefs.push_back(root);
  index_of[root] = 0;
  std::vector<std::uint64_t> parts;
  for (std::size_t i = 0; i < beliefs.size(); ++i) {
    const std::uint64_t b = beliefs[i];
    options_at.push_back(placements_for(b));
    for (std::uint64_t p : options_at.back()) {
      if (!meter.Spend()) {
        result.note = "budget exhausted while enumerating beliefs";
        result.evaluations = meter.spent();
        return result;
      }
      tables.Partition(b, p, parts);
      for (std::uint64_t part : parts) {
        if ((part & (part - 1)) == 0) continue;
        const std::uint64_t next = canonical(tables.Spread(part));
        if (index_of.emplace(next, static_cast<int>(beliefs.size())).second) {
          beliefs.push_back(next);
        }
      }
    }
  }
  result.beliefs = beliefs.size();

  constexpr int kUnwon = std::numeric_limits<int>::max();
  std::vector<int> rank(beliefs.size(), kUnwon);
  std::vector<std::uint64_t> choice(beliefs.size(), 0);
  auto lookup_rank = [&](std::uint64_t spread) {
    std::uint64_t c = spread;
    if (!group.empty()) {
      const auto it = canon_cache.find(spread);
      if (it != canon_cache.end()) {
        c = it->second;
      } else {
        for (const auto& perm : group) c = std::min(c, internal::ApplyPermutation(perm, spread));
      }
    }
    const auto it = index_of.find(c);
    return it == index_of.end() ? kUnwon : rank[it->second];
  };

  for (int round = 1;; ++round) {
    std::vector<int> won_now(beliefs.size(), 0);
    std::vector<std::uint64_t> chosen_now(beliefs.size(), 0);
    auto sweep = [&](std::size_t begin, std::size_t end) {
      std::vector<std::uint64_t> local_parts;
      for (std::size_t i = begin; i < end; ++i) {
        if (rank[i] != kUnwon) continue;
        for (std::uint64_t p : options_at[i]) {
          if (!meter.Spend()) return;
          tables.Partition(beliefs[i], p, local_parts);
          bool wins = true;
          for (std::uint64_t part : local_parts) {
            if ((part & (part - 1)) == 0) continue;
            if (lookup_rank(tables.Spread(part)) >= round) {
              wins = false;
              break;
            }
          }
          if (wins) {
            won_now[i] = 1;
            chosen_now[i] = p;
            break;
          }
        }
      }
    };
    const int threads = std::max(1, options.budget.threads);
    if (threads == 1 || beliefs.size() < 64) {
      sweep(0, beliefs.size());
    } else {
      std::vector<std::thread> pool;
      const std::size_t chunk = (beliefs.size() + threads - 1) / threads;
      for (int t = 0; t < threads; ++t) {
        const std::size_t begin = std::min(beliefs.size(), t * chunk);
        const std::size_t end = std::min(beliefs.size(), begin + chunk);
        pool.emplace_back(sweep, begin, end);
      }
      for (auto& th : pool) th.join();
    }
    if (meter.exhausted()) {
      result.note = "budget exhausted during value iteration";
      result.evaluations = meter.spent();
      return result;
    }
    bool changed = false;
    for (std::size_t i = 0; i < beliefs.size(); ++i) {
      if (won_now[i]) {
        rank[i] = round;
        choice[i] = chosen_now[i];
        changed = true;
      }
    }
    if (rank[0] != kUnwon) {
      result.outcome = LocDecision::Outcome::kCopWin;
      result.rounds = rank[0];
      break;
    }
    if (!changed) {
      result.outcome = LocDecision::Outcome::kRobberWin;
      break;
    }
  }
  result.evaluations = meter.spent();
  if (result.outcome == LocDecision::Outcome::kCopWin) {
    std::unordered_map<std::uint64_t, std::pair<std::uint64_t, int>> table;
    for (std::size_t i = 0; i < beliefs.size(); ++i) {
      if (rank[i] != kUnwon) table[beliefs[i]] = {choice[i], rank[i]};
    }
    result.strategy = PositionalStrategy(std::move(group), std::move(table));
  }
  return result;
}

struct LocalizationNumberResult {
  bool exact = false;
  int lower = 0;
  int upper = 0;
  std::vector<LocDecision> decisions;  // one per cop count attempted
};

// Scans cop counts upward from `known_lower` with LocDecide. The upper end
// starts at min(known_upper, greedy resolving set size) since the cops can
// always win in one round on a resolving set.
inline LocalizationNumberResult LocalizationNumber(const Graph& g, const LocDecideOptions& options = {},
                                                   int known_lower = 1,
                                                   std::optional<int> known_upper = std::nullopt) {
  RequireGameSize(g);
  LocalizationNumberResult result;
  const int n = g.num_vertices();
  if (n <= 1) {
    result.exact = true;
    return result;
  }
  result.lower = std::max(1, known_lower);
  result.upper = static_cast<int>(GreedyResolving(g).size());
  if (known_upper) result.upper = std::min(result.upper, *known_upper);
  for (int k = result.lower; k <= result.upper; ++k) {
    LocDecision d = LocDecide(g, k, options);
    const auto outcome = d.outcome;
    result.decisions.push_back(std::move(d));
    if (outcome == LocDecision::Outcome::kCopWin) {
      result.upper = k;
      break;
    }
    if (outcome == LocDecision::Outcome::kUnknown) break;
    result.lower = k + 1;
  }
  result.exact = result.lower == result.upper;
  return result;
}

// --- Strategies and exhaustive verification --------------------------------

// Opaque strategy memory; compared and hashed as part of the verifier's
// (state, belief) key.
struct StrategyState {
  int phase = 0;
  std::vector<int> data;
  friend auto operator<=>(const StrategyState&, const StrategyState&) = default;
};

// Raised by a strategy that meets a belief it has no rule for.
class UnhandledBelief : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::string name() const = 0;
  virtual StrategyState Initial() const { return {}; }
  virtual Placement Place(const StrategyState& state, Belief belief) const = 0;
  // Next state once the robber's part `part` (size >= 2) is known.
  virtual StrategyState Advance(const StrategyState& state, Belief belief,
                                const Placement& placement, const Observation& observation,
                                Belief part) const {
    (void)belief, (void)placement, (void)observation, (void)part;
    return state;
  }
  // Human-readable phase name for traces.
  virtual std::string Describe(const StrategyState& state) const {
    (void)state;
    return name();
  }
};

// Same placement every round.
class StaticStrategy : public Strategy {
 public:
  explicit StaticStrategy(Placement placement) : placement_(std::move(placement)) {}
  std::string name() const override { return "static"; }
  Placement Place(const StrategyState&, Belief) const override { return placement_; }

 private:
  Placement placement_;
};

// Adapter exposing a LocDecide strategy through the Strategy interface.
class PositionalStrategyAdapter : public Strategy {
 public:
  explicit PositionalStrategyAdapter(PositionalStrategy strategy) : strategy_(std::move(strategy)) {}
  std::string name() const override { return "positional"; }
  Placement Place(const StrategyState&, Belief belief) const override {
    auto p = strategy_.PlacementFor(belief);
    if (!p) throw UnhandledBelief("belief is not in the winning region");
    return *p;
  }

 private:
  PositionalStrategy strategy_;
};

struct TraceStep {
  int round = 0;
  std::string phase;
  Belief belief;
  Placement placement;
  Observation observation;
  Belief part;          // robber's part of the belief under this observation
  Belief next_belief;   // spread(part); empty when the part is a singleton
};

struct StrategyVerification {
  enum class Outcome { kCaptured, kEvaded, kUnhandled };
  Outcome outcome = Outcome::kCaptured;
  int max_rounds = 0;          // worst case over all robber plays when captured
  std::uint64_t nodes = 0;     // distinct (state, belief) pairs explored
  std::vector<TraceStep> trace;  // worst-case play, or the offending play
  std::vector<Belief> cycle;     // repeated beliefs when evaded by a cycle
  std::string message;
  std::map<std::string, int> phase_visits;  // phase name -> nodes
};

namespace internal {

class StrategyVerifier {
 public:
  StrategyVerifier(const Graph& g, const Strategy& strategy, int cops, int max_rounds)
      : g_(g), strategy_(strategy), cops_(cops), max_rounds_(max_rounds) {}

  StrategyVerification Run(const StrategyState& state, Belief belief) {
    StrategyVerification out;
    const auto value = Visit(state, belief, 1, out);
    out.nodes = memo_.size();
    out.phase_visits = phase_visits_;
    if (value) {
      out.outcome = StrategyVerification::Outcome::kCaptured;
      out.max_rounds = *value;
      // Worst-case play, following the recorded argmax children.
      StrategyState s = state;
      Belief b = belief;
      for (int round = 1;; ++round) {
        const auto it = memo_.find({s, b.mask()});
        if (it == memo_.end()) break;
        TraceStep step = it->second.worst;
        step.round = round;
        out.trace.push_back(step);
        if (step.next_belief.empty()) break;
        s = it->second.worst_next_state;
        b = step.next_belief;
      }
    }
    return out;
  }

 private:
  struct Key {
    StrategyState state;
    std::uint64_t belief;
    friend auto operator<=>(const Key&, const Key&) = default;
  };
  struct Entry {
    int rounds = 0;
    TraceStep worst;
    StrategyState worst_next_state;
  };

  void Fail(StrategyVerification& out, StrategyVerification::Outcome outcome, std::string message) {
    if (failed_) return;
    failed_ = true;
    out.outcome = outcome;
    out.message = std::move(message);
    out.trace = path_;
    for (std::size_t i = 0; i < out.trace.size(); ++i) out.trace[i].round = static_cast<int>(i) + 1;
  }

  // Worst-case rounds to capture from (state, belief) at `round`, or nullopt
  // after recording a failure.
  std::optional<int> Visit(const StrategyState& state, Belief belief, int round,
                           StrategyVerification& out) {
    const Key key{state, belief.mask()};
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second.rounds;
    if (failed_) return std::nullopt;
    for (std::size_t i = 0; i < stack_.size(); ++i) {
      if (stack_[i] == key) {
        for (std::size_t j = i; j < stack_.size(); ++j) out.cycle.push_back(Belief(stack_[j].belief));
        out.cycle.push_back(belief);
        Fail(out, StrategyVerification::Outcome::kEvaded, "belief cycle: the robber evades forever");
        return std::nullopt;
      }
    }
    if (round > max_rounds_) {
      Fail(out, StrategyVerification::Outcome::kEvaded,
           "round budget of " + std::to_string(max_rounds_) + " exceeded");
      return std::nullopt;
    }
    const std::string phase = strategy_.Describe(state);
    ++phase_visits_[phase];
    Placement placement;
    try {
      placement = strategy_.Place(state, belief);
    } catch (const UnhandledBelief& e) {
      TraceStep step;
      step.phase = phase;
      step.belief = belief;
      path_.push_back(step);
      Fail(out, StrategyVerification::Outcome::kUnhandled, e.what());
      path_.pop_back();
      return std::nullopt;
    }
    if (static_cast<int>(placement.size()) > cops_) {
      Fail(out, StrategyVerification::Outcome::kUnhandled,
           "strategy placed " + std::to_string(placement.size()) + " cops, more than " +
               std::to_string(cops_));
      return std::nullopt;
    }
    stack_.push_back(key);
    Entry entry;
    entry.rounds = 0;
    for (const auto& [obs, part] : ProbePartition(g_, placement, belief)) {
      TraceStep step;
      step.phase = phase;
      step.belief = belief;
      step.placement = placement;
      step.observation = obs;
      step.part = part;
      if (part.singleton()) {
        if (entry.rounds < 1) {
          entry.rounds = 1;
          entry.worst = step;
        }
        continue;
      }
      step.next_belief = Spread(g_, part);
      StrategyState next_state;
      path_.push_back(step);
      try {
        next_state = strategy_.Advance(state, belief, placement, obs, part);
      } catch (const UnhandledBelief& e) {
        Fail(out, StrategyVerification::Outcome::kUnhandled, e.what());
        path_.pop_back();
        stack_.pop_back();
        return std::nullopt;
      }
      const auto child = Visit(next_state, step.next_belief, round + 1, out);
      path_.pop_back();
      if (!child) {
        stack_.pop_back();
        return std::nullopt;
      }
      if (1 + *child > entry.rounds) {
        entry.rounds = 1 + *child;
        entry.worst = step;
        entry.worst_next_state = next_state;
      }
    }
    stack_.pop_back();
    const int rounds = entry.rounds;
    memo_.emplace(key, std::move(entry));
    return rounds;
  }

  const Graph& g_;
  const Strategy& strategy_;
  int cops_;
  int max_rounds_;
  bool failed_ = false;
  std::map<Key, Entry> memo_;
  std::vector<Key> stack_;
  std::vector<TraceStep> path_;
  std::map<std::string, int> phase_visits_;
};

}  // namespace internal

// Explores every robber play against `strategy` from (state, belief):
// every part of every probe, depth first, memoised on (state, belief).
inline StrategyVerification VerifyStrategyFrom(const Graph& g, const Strategy& strategy, int cops,
                                               int max_rounds, const StrategyState& state,
                                               Belief belief) {
  RequireGameSize(g);
  internal::StrategyVerifier verifier(g, strategy, cops, max_rounds);
  return verifier.Run(state, belief);
}

inline StrategyVerification VerifyStrategy(const Graph& g, const Strategy& strategy, int cops,
                                           int max_rounds) {
  return VerifyStrategyFrom(g, strategy, cops, max_rounds, strategy.Initial(),
                            Belief::All(g.num_vertices()));
}

}  // namespace locdim

#endif  // LOCDIM_LOCALIZATION_HPP_
