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

// Resolving sets: verification, a greedy upper bound, exact branch-and-bound
// search, and the closed-form constructions for Moore and polarity graphs.

#ifndef LOCDIM_METRIC_DIMENSION_HPP_
#define LOCDIM_METRIC_DIMENSION_HPP_

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <limits>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "locdim/budget.hpp"
#include "locdim/finite_field.hpp"
#include "locdim/graph.hpp"
#include "locdim/graph_io.hpp"

namespace locdim {

struct ResolvingCertificate {
  std::string graph_hash;
  std::vector<int> landmarks;  // sorted, duplicate-free
  bool verified = false;
  // Least (u, v), u < v, with equal distance vectors when not verified.
  std::optional<std::pair<int, int>> witness_pair;
};

namespace internal {

inline std::vector<int> NormalizeVertexSet(const Graph& g, std::span<const int> set,
                                           const char* what) {
  std::vector<int> out(set.begin(), set.end());
  for (int v : out) {
    if (v < 0 || v >= g.num_vertices()) {
      throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(v) +
                                  " not in graph");
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Partition of V into classes of equal distance vectors. class_of[v] is a
// dense class id; ids are assigned in order of least member.
struct Partition {
  std::vector<int> class_of;
  int num_classes = 0;

  static Partition Trivial(int n) {
    Partition p;
    p.class_of.assign(n, 0);
    p.num_classes = n > 0 ? 1 : 0;
    return p;
  }

  Partition Refine(const Graph& g, int landmark) const {
    const int n = static_cast<int>(class_of.size());
    Partition out;
    out.class_of.assign(n, -1);
    // (old class, distance) -> new id, looked up through a small table.
    std::vector<std::pair<std::pair<int, int>, int>> seen;
    for (int v = 0; v < n; ++v) {
      const std::pair<int, int> key{class_of[v], g.distance(landmark, v)};
      int id = -1;
      for (const auto& [k, existing] : seen) {
        if (k == key) {
          id = existing;
          break;
        }
      }
      if (id < 0) {
        id = out.num_classes++;
        seen.push_back({key, id});
      }
      out.class_of[v] = id;
    }
    return out;
  }

  std::uint64_t UnresolvedPairs() const {
    std::vector<std::uint64_t> sizes(num_classes, 0);
    for (int c : class_of) ++sizes[c];
    std::uint64_t pairs = 0;
    for (auto s : sizes) pairs += s * (s - 1) / 2;
    return pairs;
  }

  bool Discrete() const { return num_classes == static_cast<int>(class_of.size()); }
};

// Faster refinement for the search: class ids hashed as old * (D + 2) + dist.
inline int RefineInto(const Graph& g, int landmark, std::span<const int> in, int num_in,
                      std::vector<int>& out, std::vector<int>& scratch, int radix) {
  const int n = static_cast<int>(in.size());
  scratch.assign(static_cast<std::size_t>(num_in) * radix, -1);
  int next = 0;
  out.resize(n);
  for (int v = 0; v < n; ++v) {
    const int d = g.distance(landmark, v);
    const int key = in[v] * radix + (d == Graph::kUnreachable ? radix - 1 : d);
    if (scratch[key] < 0) scratch[key] = next++;
    out[v] = scratch[key];
  }
  return next;
}

}  // namespace internal

inline ResolvingCertificate IsResolving(const Graph& g, std::span<const int> landmarks) {
  ResolvingCertificate cert;
  cert.graph_hash = GraphHash(g);
  cert.landmarks = internal::NormalizeVertexSet(g, landmarks, "IsResolving");
  const int n = g.num_vertices();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto less = [&](int a, int b) {
    for (int s : cert.landmarks) {
      const int da = g.distance(s, a), db = g.distance(s, b);
      if (da != db) return da < db;
    }
    return a < b;
  };
  auto same = [&](int a, int b) {
    for (int s : cert.landmarks) {
      if (g.distance(s, a) != g.distance(s, b)) return false;
    }
    return true;
  };
  std::sort(order.begin(), order.end(), less);
  for (int i = 0; i + 1 < n; ++i) {
    if (!same(order[i], order[i + 1])) continue;
    // order[i] is the least member of its class and order[i+1] the next.
    const std::pair<int, int> pair{order[i], order[i + 1]};
    if (!cert.witness_pair || pair < *cert.witness_pair) cert.witness_pair = pair;
  }
  cert.verified = !cert.witness_pair.has_value();
  return cert;
}

// Adds, one at a time, the landmark leaving the fewest unresolved pairs
// (least index on ties) until every vertex is resolved.
inline std::vector<int> GreedyResolving(const Graph& g) {
  const int n = g.num_vertices();
  internal::Partition current = internal::Partition::Trivial(n);
  std::vector<int> chosen;
  while (!current.Discrete()) {
    int best = -1;
    std::uint64_t best_pairs = std::numeric_limits<std::uint64_t>::max();
    internal::Partition best_partition;
    for (int w = 0; w < n; ++w) {
      if (std::find(chosen.begin(), chosen.end(), w) != chosen.end()) continue;
      internal::Partition refined = current.Refine(g, w);
      const std::uint64_t pairs = refined.UnresolvedPairs();
      if (pairs < best_pairs) {
        best = w;
        best_pairs = pairs;
        best_partition = std::move(refined);
      }
    }
    chosen.push_back(best);
    current = std::move(best_partition);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

struct MetricDimensionResult {
  bool exact = false;
  int lower = 0;
  int upper = 0;
  std::vector<int> best;  // a resolving set of size `upper`
  std::uint64_t nodes = 0;
};

// Smallest t with t + D^t >= n: non-landmark vertices need distinct vectors
// over {1..D}^t.
inline int DiameterLowerBound(const Graph& g) {
  const int n = g.num_vertices();
  if (n <= 1) return 0;
  const int diameter = g.Diameter();
  if (diameter == Graph::kUnreachable) return 1;
  for (int t = 1;; ++t) {
    long double capacity = t;
    long double power = 1;
    for (int i = 0; i < t; ++i) power *= diameter;
    capacity += power;
    if (capacity >= n) return t;
  }
}

namespace internal {

// Depth-first search for a resolving set of exactly `target` landmarks.
// Branches on the candidates that split one unresolved pair (the pair with
// fewest admissible candidates); earlier sibling candidates are forbidden in
// later branches, so every landmark set is explored at most once.
class ResolvingSearch {
 public:
  ResolvingSearch(const Graph& g, BudgetMeter& meter) : g_(g), meter_(meter) {
    n_ = g.num_vertices();
    words_ = (n_ + 63) / 64;
    const int diameter = g.Diameter();
    diameter_ = diameter == Graph::kUnreachable ? n_ : diameter;
    radix_ = diameter_ + 2;
    split_.assign(static_cast<std::size_t>(n_) * n_ * words_, 0);
    for (int u = 0; u < n_; ++u) {
      for (int v = u + 1; v < n_; ++v) {
        std::uint64_t* mask = &split_[(static_cast<std::size_t>(u) * n_ + v) * words_];
        for (int w = 0; w < n_; ++w) {
          if (g.distance(w, u) != g.distance(w, v)) mask[w / 64] |= std::uint64_t{1} << (w % 64);
        }
      }
    }
  }

  // Candidate landmarks for the top-level branch, with the forbidden sets
  // each branch starts from. Empty when V has at most one vertex.
  std::vector<int> RootCandidates() {
    std::vector<int> classes(n_, 0);
    std::vector<std::uint64_t> forbidden(words_, 0);
    const auto pair = PickPair(classes, forbidden);
    if (!pair) return {};
    return Candidates(pair->first, pair->second, forbidden);
  }

  // Explores the subtree where root candidate index `branch` is chosen.
  // Returns true and fills `solution` on success.
  bool SolveBranch(int target, const std::vector<int>& roots, int branch,
                   std::vector<int>& solution) {
    std::vector<std::uint64_t> forbidden(words_, 0);
    for (int i = 0; i < branch; ++i) Set(forbidden, roots[i]);
    std::vector<int> classes(n_, 0);
    std::vector<int> chosen;
    return Choose(roots[branch], target, classes, 1, forbidden, chosen, solution);
  }

  int n() const { return n_; }

 private:
  static void Set(std::vector<std::uint64_t>& bits, int v) {
    bits[v / 64] |= std::uint64_t{1} << (v % 64);
  }
  static bool Test(const std::vector<std::uint64_t>& bits, int v) {
    return (bits[v / 64] >> (v % 64)) & 1;
  }

  std::vector<int> Candidates(int u, int v, const std::vector<std::uint64_t>& forbidden) const {
    const std::uint64_t* mask = &split_[(static_cast<std::size_t>(u) * n_ + v) * words_];
    std::vector<int> out;
    for (int w = 0; w < n_; ++w) {
      if (((mask[w / 64] >> (w % 64)) & 1) && !Test(forbidden, w)) out.push_back(w);
    }
    return out;
  }

  int CountCandidates(int u, int v, const std::vector<std::uint64_t>& forbidden) const {
    const std::uint64_t* mask = &split_[(static_cast<std::size_t>(u) * n_ + v) * words_];
    int count = 0;
    for (int i = 0; i < words_; ++i) count += std::popcount(mask[i] & ~forbidden[i]);
    return count;
  }

  // Unresolved pair with the fewest admissible candidates; nullopt when the
  // partition is discrete. A pair with zero candidates is returned at once.
  std::optional<std::pair<int, int>> PickPair(const std::vector<int>& classes,
                                              const std::vector<std::uint64_t>& forbidden) const {
    std::optional<std::pair<int, int>> best;
    int best_count = std::numeric_limits<int>::max();
    for (int u = 0; u < n_; ++u) {
      for (int v = u + 1; v < n_; ++v) {
        if (classes[u] != classes[v]) continue;
        const int count = CountCandidates(u, v, forbidden);
        if (count < best_count) {
          best_count = count;
          best = std::pair{u, v};
          if (count == 0) return best;
        }
      }
    }
    return best;
  }

  bool Feasible(const std::vector<int>& classes, int num_classes, int remaining) const {
    std::vector<int> sizes(num_classes, 0);
    int largest = 0;
    for (int c : classes) largest = std::max(largest, ++sizes[c]);
    // A class of size s needs s <= r + D^r more landmarks r.
    long double capacity = remaining;
    long double power = 1;
    for (int i = 0; i < remaining && power < n_; ++i) power *= diameter_;
    capacity += power;
    return capacity >= largest;
  }

  bool Choose(int landmark, int target, const std::vector<int>& classes, int depth,
              std::vector<std::uint64_t>& forbidden, std::vector<int>& chosen,
              std::vector<int>& solution) {
    if (!meter_.Spend()) return false;
    std::vector<int> refined, scratch;
    int num_in = 0;
    for (int c : classes) num_in = std::max(num_in, c + 1);
    const int num_classes =
        RefineInto(g_, landmark, classes, num_in, refined, scratch, radix_);
    chosen.push_back(landmark);
    const bool found = Expand(target, refined, num_classes, depth, forbidden, chosen, solution);
    chosen.pop_back();
    return found;
  }

  bool Expand(int target, const std::vector<int>& classes, int num_classes, int depth,
              std::vector<std::uint64_t>& forbidden, std::vector<int>& chosen,
              std::vector<int>& solution) {
    if (num_classes == n_) {
      solution = chosen;
      std::sort(solution.begin(), solution.end());
      return true;
    }
    if (depth == target) return false;
    if (!Feasible(classes, num_classes, target - depth)) return false;
    // Chosen landmarks never split pairs again; treat them as forbidden.
    std::vector<std::uint64_t> blocked = forbidden;
    for (int c : chosen) Set(blocked, c);
    const auto pair = PickPair(classes, blocked);
    if (!pair) return false;
    const std::vector<int> candidates = Candidates(pair->first, pair->second, blocked);
    std::vector<std::uint64_t> local = forbidden;
    for (int w : candidates) {
      if (meter_.exhausted()) return false;
      if (Choose(w, target, classes, depth + 1, local, chosen, solution)) return true;
      Set(local, w);
    }
    return false;
  }

  const Graph& g_;
  BudgetMeter& meter_;
  int n_ = 0;
  int words_ = 0;
  int diameter_ = 0;
  int radix_ = 0;
  std::vector<std::uint64_t> split_;
};

}  // namespace internal

// Exact metric dimension by branch-and-bound, with the greedy set as the
// incumbent. Targets are tried in increasing order from the counting lower
// bound; the first feasible target is the exact value. On budget exhaustion
// the result carries the proven interval [lower, upper].
inline MetricDimensionResult MetricDimension(const Graph& g, const Budget& budget = {}) {
  MetricDimensionResult result;
  const int n = g.num_vertices();
  result.best = GreedyResolving(g);
  result.upper = static_cast<int>(result.best.size());
  result.lower = std::min(DiameterLowerBound(g), result.upper);
  if (n > 1024) throw std::invalid_argument("MetricDimension: graph too large for exact search");
  BudgetMeter meter(budget);
  internal::ResolvingSearch search(g, meter);
  const std::vector<int> roots = search.RootCandidates();
  while (result.lower < result.upper) {
    const int target = result.lower;
    std::atomic<int> next{0};
    std::atomic<int> winner{std::numeric_limits<int>::max()};
    std::vector<std::vector<int>> solutions(roots.size());
    auto worker = [&] {
      for (;;) {
        const int branch = next.fetch_add(1);
        if (branch >= static_cast<int>(roots.size()) || branch > winner.load()) return;
        if (meter.exhausted()) return;
        std::vector<int> solution;
        if (search.SolveBranch(target, roots, branch, solution)) {
          solutions[branch] = std::move(solution);
          int current = winner.load();
          while (branch < current && !winner.compare_exchange_weak(current, branch)) {
          }
        }
      }
    };
    const int threads = std::max(1, budget.threads);
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
    const int w = winner.load();
    if (w != std::numeric_limits<int>::max()) {
      // Every smaller target was refuted, so this size is optimal.
      result.best = solutions[w];
      result.upper = target;
      break;
    }
    if (meter.exhausted()) break;
    result.lower = target + 1;
  }
  result.nodes = meter.spent();
  result.exact = result.lower == result.upper;
  return result;
}

// (N(u) u N(v)) \ {u, v, w} in a k-regular Moore graph of diameter 2, k >= 3:
// a resolving set of size 2k - 3.
inline std::vector<int> MooreResolving(const Graph& g, int u, int v, int w) {
  const auto k = MooreDegree(g);
  if (!k) throw std::invalid_argument("MooreResolving: not a Moore graph of diameter 2");
  if (*k < 3) throw std::invalid_argument("MooreResolving: needs degree k >= 3");
  const int n = g.num_vertices();
  for (int x : {u, v, w}) {
    if (x < 0 || x >= n) throw std::invalid_argument("MooreResolving: vertex out of range");
  }
  if (!g.adjacent(u, v)) throw std::invalid_argument("MooreResolving: v must be adjacent to u");
  if (!g.adjacent(v, w) || w == u) {
    throw std::invalid_argument("MooreResolving: w must be a neighbour of v other than u");
  }
  std::vector<int> out;
  for (int x : g.neighbors(u)) out.push_back(x);
  for (int x : g.neighbors(v)) out.push_back(x);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::erase_if(out, [&](int x) { return x == u || x == v || x == w; });
  return out;
}

// Least-index choice: u = 0, v = min N(u), w = min N(v) \ {u}.
inline std::vector<int> MooreResolving(const Graph& g) {
  if (g.num_vertices() == 0) throw std::invalid_argument("MooreResolving: empty graph");
  const int u = 0;
  if (g.degree(u) == 0) throw std::invalid_argument("MooreResolving: isolated vertex");
  const int v = g.neighbors(u)[0];
  int w = -1;
  for (int x : g.neighbors(v)) {
    if (x != u) {
      w = x;
      break;
    }
  }
  if (w < 0) throw std::invalid_argument("MooreResolving: not a Moore graph of diameter 2");
  return MooreResolving(g, u, v, w);
}

// (N(u) u N(v)) \ {u, v} for the least vertex u of degree q and v = min N(u):
// a resolving set of size 2q - 1 in a polarity graph of order q^2 + q + 1.
inline std::vector<int> PolarityResolving(const Graph& g, int q) {
  if (q < 2 || g.num_vertices() != q * q + q + 1) {
    throw std::invalid_argument("PolarityResolving: order is not q^2 + q + 1");
  }
  int u = -1;
  for (int x = 0; x < g.num_vertices(); ++x) {
    if (g.degree(x) == q) {
      u = x;
      break;
    }
  }
  if (u < 0) throw std::invalid_argument("PolarityResolving: no vertex of degree q");
  const int v = g.neighbors(u)[0];
  std::vector<int> out;
  for (int x : g.neighbors(u)) out.push_back(x);
  for (int x : g.neighbors(v)) out.push_back(x);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::erase_if(out, [&](int x) { return x == u || x == v; });
  return out;
}

inline std::vector<int> PolarityResolving(const PolarityGraph& pg) {
  if (pg.absolute.empty()) throw std::invalid_argument("PolarityResolving: no absolute vertex");
  return PolarityResolving(pg.graph, pg.q);
}

}  // namespace locdim

#endif  // LOCDIM_METRIC_DIMENSION_HPP_
