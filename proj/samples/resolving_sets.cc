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

// Resolving sets of K(2,10) and the Hoffman-Singleton graph: the exact
// solver, the Moore construction, and the detectable-hypergraph view.

#include <iostream>

#include "locdim/bounds.hpp"
#include "locdim/graph.hpp"
#include "locdim/hypergraph.hpp"
#include "locdim/metric_dimension.hpp"

int main() {
  using namespace locdim;

  const Graph kneser = KneserGraph(2, 10);
  const auto c5 = Hypergraph::Make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  const auto cover = KneserResolvingCover(2, 10, c5);
  std::cout << "K(2,10): cover of size " << cover.size() << " is "
            << (IsResolving(kneser, cover).verified ? "resolving" : "not resolving") << "\n";
  const auto h = ResolvingToHypergraph(cover, 2, 10);
  std::cout << "  as a hypergraph: " << h.num_edges() << " edges, Berge girth "
            << BergeGirth(h) << ", 2-detectable " << (IsDetectable(h, 2) ? "yes" : "no") << "\n";

  const Graph hs = HoffmanSingleton();
  const auto moore = MooreResolving(hs);
  std::cout << "Hoffman-Singleton: Moore set of size " << moore.size() << "\n";
  const auto exact = MetricDimension(hs, Budget::Nodes(10'000'000));
  std::cout << "  solver: beta in [" << exact.lower << ", " << exact.upper << "] after "
            << exact.nodes << " nodes\n";

  ReportOptions options;
  options.compute_exact = false;
  const auto report = Report(BoundsTarget::Moore(7), options);
  for (const auto& e : report.entries) {
    std::cout << "  " << QuantityName(e.quantity) << " " << BoundKindName(e.kind) << " "
              << ToString(e.value) << "  (" << e.source << ")\n";
  }
  return 0;
}
