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

// Staged cop strategy with k cops on a diameter-2 Moore graph of degree
// k >= 5. Every reachable belief has one of four forms and the strategy
// keeps the form, with its centre and candidate set, as its state:
//
//   init       belief V.
//   recentre   spread({y} + A0) with A0 a subset of N(y).
//   middle     spread(A) with A a subset of N(u), 3 <= |A| <= k-1;
//              the stage is alpha = k - |A|.
//   endgame    spread({a1, a2}) with a1, a2 in N(u).
//
// All choices are least-index.

#ifndef LOCDIM_MOORE_STRATEGY_HPP_
#define LOCDIM_MOORE_STRATEGY_HPP_

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "locdim/graph.hpp"
#include "locdim/localization.hpp"

namespace locdim {

class MooreStrategy : public Strategy {
 public:
  enum Phase { kInit = 0, kRecentre = 1, kMiddle = 2, kEndgame = 3 };

  explicit MooreStrategy(const Graph& g) : g_(g) {
    const auto k = MooreDegree(g);
    if (!k) throw std::invalid_argument("MooreStrategy: graph is not a diameter-2 Moore graph");
    if (*k < 5) throw std::invalid_argument("MooreStrategy: degree must be at least 5");
    RequireGameSize(g);
    k_ = *k;
  }

  int cops() const { return k_; }
  std::string name() const override { return "moore"; }

  // Stages alpha the middle game is defined for.
  std::vector<int> Stages() const {
    std::vector<int> out;
    for (int alpha = 1; alpha <= k_ - 3; ++alpha) out.push_back(alpha);
    return out;
  }

  StrategyState Initial() const override { return {kInit, {}}; }

  static StrategyState Middle(int u, std::vector<int> candidates) {
    std::sort(candidates.begin(), candidates.end());
    candidates.insert(candidates.begin(), u);
    return {kMiddle, std::move(candidates)};
  }
  static StrategyState Endgame(int u, int a1, int a2) {
    return {kEndgame, {u, std::min(a1, a2), std::max(a1, a2)}};
  }

  std::string Describe(const StrategyState& state) const override {
    switch (state.phase) {
      case kInit:
        return "init";
      case kRecentre:
        return "recentre";
      case kMiddle:
        return "middle alpha=" + std::to_string(k_ - static_cast<int>(state.data.size() - 1));
      case kEndgame:
        return "endgame";
    }
    return "unknown";
  }

  Placement Place(const StrategyState& state, Belief belief) const override {
    switch (state.phase) {
      case kInit:
        return PlaceInit(belief);
      case kRecentre:
        return PlaceRecentre(state, belief);
      case kMiddle:
        return PlaceMiddle(state, belief);
      case kEndgame:
        return PlaceEndgame(state, belief);
    }
    throw UnhandledBelief("unknown phase");
  }

  StrategyState Advance(const StrategyState&, Belief, const Placement&, const Observation&,
                        Belief part) const override {
    const std::vector<int> members = part.Vertices();
    // Common neighbour of the part, if any.
    const int a = members[0];
    const int b = members[1];
    int centre = -1;
    for (int c : g_.neighbors(a)) {
      if (g_.adjacent(c, b)) {
        centre = c;
        break;
      }
    }
    if (centre >= 0 && std::all_of(members.begin(), members.end(),
                                   [&](int v) { return g_.adjacent(centre, v); })) {
      const int size = static_cast<int>(members.size());
      if (size == 2) return Endgame(centre, a, b);
      if (size <= k_ - 1) return Middle(centre, members);
      throw UnhandledBelief("part " + Format(part) + " fills N(" + g_.VertexName(centre) + ")");
    }
    for (int y : members) {
      const bool star = std::all_of(members.begin(), members.end(),
                                    [&](int v) { return v == y || g_.adjacent(y, v); });
      if (star && static_cast<int>(members.size()) <= k_ - 1) {
        std::vector<int> data{y};
        for (int v : members) {
          if (v != y) data.push_back(v);
        }
        return {kRecentre, data};
      }
    }
    throw UnhandledBelief("part " + Format(part) + " matches no strategy form");
  }

 private:
  std::string Format(Belief b) const {
    std::string s = "{";
    for (int v : b.Vertices()) {
      if (s.size() > 1) s += ",";
      s += g_.VertexName(v);
    }
    return s + "}";
  }

  std::vector<int> SortedNeighbors(int v) const {
    std::vector<int> out(g_.neighbors(v).begin(), g_.neighbors(v).end());
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<int> NeighborsExcept(int v, int excluded) const {
    std::vector<int> out = SortedNeighbors(v);
    std::erase(out, excluded);
    return out;
  }

  static Placement Finish(std::vector<int> cops) {
    std::sort(cops.begin(), cops.end());
    cops.erase(std::unique(cops.begin(), cops.end()), cops.end());
    return cops;
  }

  void Expect(Belief actual, Belief expected, const char* phase) const {
    if (actual != expected) {
      throw UnhandledBelief(std::string(phase) + ": belief " + Format(actual) +
                            " differs from the expected " + Format(expected));
    }
  }

  Placement PlaceInit(Belief belief) const {
    Expect(belief, Belief::All(g_.num_vertices()), "init");
    const int x = 0;
    const auto nx = SortedNeighbors(x);
    const int y = nx[0];
    const int z = nx[1];
    const int w = NeighborsExcept(z, x).front();
    std::vector<int> cops;
    for (int v : nx) {
      if (v != y) cops.push_back(v);
    }
    cops.push_back(w);
    return Finish(cops);
  }

  // Cops on N(y) minus one vertex u whose far neighbourhood is outside the
  // belief, plus a cop w' beyond another neighbour z' of y.
  Placement PlaceRecentre(const StrategyState& state, Belief belief) const {
    const int y = state.data[0];
    std::vector<int> cls(state.data.begin(), state.data.end());
    Expect(belief, Spread(g_, Belief::Of(cls)), "recentre");
    int u = -1;
    for (int c : SortedNeighbors(y)) {
      bool outside = true;
      for (int t : g_.neighbors(c)) {
        if (t != y && belief.contains(t)) {
          outside = false;
          break;
        }
      }
      if (outside) {
        u = c;
        break;
      }
    }
    if (u < 0) throw UnhandledBelief("recentre: every neighbour of the centre reaches the belief");
    const auto rest = NeighborsExcept(y, u);
    const int z = rest.front();
    const int w = NeighborsExcept(z, y).front();
    std::vector<int> cops = rest;
    cops.push_back(w);
    return Finish(cops);
  }

  // Cops on A minus v, and on the least k - |A| + 1 vertices of N(v) - u.
  Placement PlaceMiddle(const StrategyState& state, Belief belief) const {
    const int u = state.data[0];
    const std::vector<int> a(state.data.begin() + 1, state.data.end());
    const int s = static_cast<int>(a.size());
    if (s < 3 || s > k_ - 1) throw UnhandledBelief("middle: candidate set of size " + std::to_string(s));
    Expect(belief, Spread(g_, Belief::Of(a)), "middle");
    const int v = a.front();
    std::vector<int> cops(a.begin() + 1, a.end());
    const auto far = NeighborsExcept(v, u);
    cops.insert(cops.end(), far.begin(), far.begin() + (k_ - s + 1));
    return Finish(cops);
  }

  // Two cops on N(a1) - u, the k-3 vertices of N(a2) - u adjacent to
  // neither of them, and one cop on u.
  Placement PlaceEndgame(const StrategyState& state, Belief belief) const {
    const int u = state.data[0];
    const int a1 = state.data[1];
    const int a2 = state.data[2];
    Expect(belief, Spread(g_, Belief::Of(std::vector<int>{a1, a2})), "endgame");
    const auto n1 = NeighborsExcept(a1, u);
    const int c1 = n1[0];
    const int c2 = n1[1];
    std::vector<int> cops{c1, c2};
    for (int t : NeighborsExcept(a2, u)) {
      if (!g_.adjacent(t, c1) && !g_.adjacent(t, c2)) cops.push_back(t);
    }
    if (static_cast<int>(cops.size()) != k_ - 1) {
      throw UnhandledBelief("endgame: expected " + std::to_string(k_ - 3) + " cops on N(a2)");
    }
    for (std::size_t i = 0; i < cops.size(); ++i) {
      for (std::size_t j = i + 1; j < cops.size(); ++j) {
        if (g_.adjacent(cops[i], cops[j])) throw UnhandledBelief("endgame: adjacent cops");
      }
    }
    cops.push_back(u);
    return Finish(cops);
  }

  const Graph& g_;
  int k_ = 0;
};

}  // namespace locdim

#endif  // LOCDIM_MOORE_STRATEGY_HPP_
