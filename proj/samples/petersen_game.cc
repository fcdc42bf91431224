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

// Plays the localization game on the Petersen graph: decides how many cops
// are needed and prints one worst-case play of the winning strategy.

#include <iostream>

#include "locdim/graph.hpp"
#include "locdim/localization.hpp"

int main() {
  using namespace locdim;

  const Graph g = Petersen();
  LocDecideOptions options;
  options.use_symmetry = true;
  for (int cops = 1; cops <= 3; ++cops) {
    const auto d = LocDecide(g, cops, options);
    std::cout << cops << " cop(s): "
              << (d.outcome == LocDecision::Outcome::kCopWin ? "cops win" : "robber escapes")
              << " (" << d.beliefs << " beliefs)\n";
    if (d.outcome != LocDecision::Outcome::kCopWin) continue;
    const PositionalStrategyAdapter strategy(d.strategy);
    const auto v = VerifyStrategy(g, strategy, cops, d.rounds);
    for (const auto& step : v.trace) {
      std::cout << "  round " << step.round << ": probe";
      for (int c : step.placement) std::cout << " " << g.VertexName(c);
      std::cout << ", robber left in {";
      for (int u : step.part.Vertices()) std::cout << " " << g.VertexName(u);
      std::cout << " }\n";
    }
    break;
  }
  return 0;
}
