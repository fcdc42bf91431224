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

// Hypergraph detection: detection vectors, k'-detectability (exhaustive and
// by the degree/girth certificate), Berge girth, the translation between
// k-detectable k-uniform hypergraphs on [n] and resolving sets of K(k,n),
// the degree-sum necessary conditions, girth-5 gadget search, and the
// gadget cover that tiles [n] into a resolving set of K(k,n).
//
// Hypergraph vertices are 0..n-1. Kneser labels are 1-based, so hyperedge
// {0,1} corresponds to the K(k,n) vertex labelled "12".

#ifndef LOCDIM_HYPERGRAPH_HPP_
#define LOCDIM_HYPERGRAPH_HPP_

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "locdim/budget.hpp"
#include "locdim/combinatorics.hpp"
#include "locdim/graph.hpp"

namespace locdim {

struct Hypergraph {
  int n = 0;
  std::vector<std::vector<int>> edges;  // each sorted and duplicate-free

  // Validates and sorts each hyperedge. Empty hyperedges and vertices
  // outside [0, n) are rejected; repeated hyperedges are kept (see
  // HasRepeatedEdges).
  static Hypergraph Make(int n, std::vector<std::vector<int>> edges) {
    if (n < 0) throw std::invalid_argument("Hypergraph: negative vertex count");
    for (auto& e : edges) {
      if (e.empty()) throw std::invalid_argument("Hypergraph: empty hyperedge");
      std::sort(e.begin(), e.end());
      if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
        throw std::invalid_argument("Hypergraph: repeated vertex inside a hyperedge");
      }
      if (e.front() < 0 || e.back() >= n) {
        throw std::invalid_argument("Hypergraph: hyperedge vertex out of range");
      }
    }
    return Hypergraph{n, std::move(edges)};
  }

  int num_edges() const { return static_cast<int>(edges.size()); }

  int MaxEdgeSize() const {
    int k = 0;
    for (const auto& e : edges) k = std::max(k, static_cast<int>(e.size()));
    return k;
  }

  // Common hyperedge size, when all hyperedges have the same size.
  std::optional<int> Uniformity() const {
    if (edges.empty()) return std::nullopt;
    const std::size_t k = edges.front().size();
    for (const auto& e : edges) {
      if (e.size() != k) return std::nullopt;
    }
    return static_cast<int>(k);
  }

  std::vector<int> Degrees() const {
    std::vector<int> degree(n, 0);
    for (const auto& e : edges) {
      for (int v : e) ++degree[v];
    }
    return degree;
  }

  int MinDegree() const {
    const auto d = Degrees();
    return d.empty() ? 0 : *std::min_element(d.begin(), d.end());
  }

  std::optional<int> Regularity() const {
    const auto d = Degrees();
    if (d.empty()) return std::nullopt;
    for (int x : d) {
      if (x != d.front()) return std::nullopt;
    }
    return d.front();
  }

  bool HasRepeatedEdges() const {
    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
  }

  bool HasSingletonEdge() const {
    return std::any_of(edges.begin(), edges.end(), [](const auto& e) { return e.size() == 1; });
  }

  // Vertex pairs that lie together in some hyperedge.
  std::vector<std::vector<char>> CoOccurrence() const {
    std::vector<std::vector<char>> together(n, std::vector<char>(n, 0));
    for (const auto& e : edges) {
      for (int a : e) {
        for (int b : e) {
          if (a != b) together[a][b] = 1;
        }
      }
    }
    return together;
  }
};

enum class Detection : std::uint8_t { kZero = 0, kOne = 1, kFull = 2 };

struct DetectionVector {
  std::vector<Detection> entries;
  friend bool operator==(const DetectionVector&, const DetectionVector&) = default;
};

// Entry i is kZero when hyperedge i misses `selection`, kFull when it meets
// `selection` in exactly `full_size` vertices, and kOne otherwise.
// `full_size` defaults to the largest hyperedge size.
inline DetectionVector ComputeDetectionVector(const Hypergraph& h, std::span<const int> selection,
                                              std::optional<int> full_size = std::nullopt) {
  std::vector<char> in_b(h.n, 0);
  for (int v : selection) {
    if (v < 0 || v >= h.n) {
      throw std::invalid_argument("ComputeDetectionVector: selection vertex out of range");
    }
    in_b[v] = 1;
  }
  const int full = full_size.value_or(h.MaxEdgeSize());
  DetectionVector out;
  out.entries.reserve(h.edges.size());
  for (const auto& e : h.edges) {
    int hits = 0;
    for (int v : e) hits += in_b[v];
    if (hits == 0) {
      out.entries.push_back(Detection::kZero);
    } else if (full > 0 && hits == full) {
      out.entries.push_back(Detection::kFull);
    } else {
      out.entries.push_back(Detection::kOne);
    }
  }
  return out;
}

struct DetectabilityResult {
  enum class Status { kDetectable, kNotDetectable, kBudgetExceeded };
  Status status = Status::kDetectable;
  // Lexicographically first colliding pair (by the later selection) when
  // not detectable.
  std::optional<std::pair<std::vector<int>, std::vector<int>>> witness;
  std::uint64_t selections = 0;

  bool detectable() const { return status == Status::kDetectable; }
};

inline constexpr std::uint64_t kDefaultDetectBudget = 100'000'000;

namespace internal {

struct WordsHash {
  std::size_t operator()(const std::vector<std::uint64_t>& words) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : words) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

inline std::vector<std::uint64_t> EdgeMasks(const Hypergraph& h) {
  if (h.n > 64) throw std::invalid_argument("hypergraph detection supports n <= 64");
  std::vector<std::uint64_t> masks;
  masks.reserve(h.edges.size());
  for (const auto& e : h.edges) {
    std::uint64_t m = 0;
    for (int v : e) m |= std::uint64_t{1} << v;
    masks.push_back(m);
  }
  return masks;
}

}  // namespace internal

// Exhaustive k'-detectability: every pair of distinct k'-subsets must have
// distinct detection vectors. Vectors are hashed, so the work is one vector
// per subset; the budget caps subsets x hyperedges.
inline DetectabilityResult CheckDetectable(const Hypergraph& h, int k_prime,
                                           std::uint64_t budget = kDefaultDetectBudget) {
  if (k_prime < 0 || k_prime > h.n) {
    throw std::invalid_argument("CheckDetectable: need 0 <= k' <= n");
  }
  DetectabilityResult result;
  const std::uint64_t subsets = Binomial(h.n, k_prime);
  const std::uint64_t edges = std::max<std::uint64_t>(1, h.edges.size());
  if (subsets > budget / edges) {
    result.status = DetectabilityResult::Status::kBudgetExceeded;
    return result;
  }
  const std::vector<std::uint64_t> masks = internal::EdgeMasks(h);
  const int full = h.MaxEdgeSize();
  const std::size_t words = (masks.size() * 2 + 63) / 64;
  std::unordered_map<std::vector<std::uint64_t>, std::uint64_t, internal::WordsHash> seen;
  seen.reserve(static_cast<std::size_t>(subsets));
  std::vector<std::uint64_t> key(words);
  ForEachCombination(h.n, k_prime, [&](const std::vector<int>& combo) {
    std::uint64_t b = 0;
    for (int v : combo) b |= std::uint64_t{1} << v;
    std::fill(key.begin(), key.end(), 0);
    for (std::size_t i = 0; i < masks.size(); ++i) {
      const int hits = std::popcount(masks[i] & b);
      const std::uint64_t code = hits == 0 ? 0 : (full > 0 && hits == full ? 2 : 1);
      key[(2 * i) / 64] |= code << ((2 * i) % 64);
    }
    auto [it, inserted] = seen.emplace(key, b);
    ++result.selections;
    if (!inserted) {
      std::vector<int> first;
      for (int v = 0; v < h.n; ++v) {
        if ((it->second >> v) & 1) first.push_back(v);
      }
      result.status = DetectabilityResult::Status::kNotDetectable;
      result.witness = std::pair{std::move(first), combo};
      return false;
    }
    return true;
  });
  return result;
}

inline bool IsDetectable(const Hypergraph& h, int k_prime) {
  const auto r = CheckDetectable(h, k_prime);
  if (r.status == DetectabilityResult::Status::kBudgetExceeded) {
    throw std::runtime_error("IsDetectable: budget exceeded; use CertifyDetectable");
  }
  return r.detectable();
}

// Shortest Berge cycle: distinct vertices v1..vl and pairwise-distinct
// hyperedges e1..el with {vi, vi+1} in ei (cyclically), l >= 2. Computed as
// half the girth of the vertex/hyperedge incidence graph. kAcyclic if none.
inline int BergeGirth(const Hypergraph& h) {
  const int total = h.n + h.num_edges();
  std::vector<std::vector<int>> adj(total);
  for (int i = 0; i < h.num_edges(); ++i) {
    for (int v : h.edges[i]) {
      adj[v].push_back(h.n + i);
      adj[h.n + i].push_back(v);
    }
  }
  int best = kAcyclic;
  std::vector<int> depth(total), parent(total), queue(total);
  for (int root = 0; root < total; ++root) {
    std::fill(depth.begin(), depth.end(), -1);
    depth[root] = 0;
    parent[root] = -1;
    int head = 0, tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      const int u = queue[head++];
      if (2 * depth[u] + 1 >= best) break;
      for (int w : adj[u]) {
        if (depth[w] < 0) {
          depth[w] = depth[u] + 1;
          parent[w] = u;
          queue[tail++] = w;
        } else if (w != parent[u]) {
          best = std::min(best, depth[u] + depth[w] + 1);
        }
      }
    }
  }
  return best == kAcyclic ? kAcyclic : best / 2;
}

// Sufficient condition for k'-detectability of a k-uniform hypergraph:
// minimum degree >= k'/2 + 1 and Berge girth >= 5. False is inconclusive.
inline bool CertifyDetectable(const Hypergraph& h, int k_prime) {
  const auto k = h.Uniformity();
  if (!k) throw std::invalid_argument("CertifyDetectable: hypergraph is not uniform");
  if (k_prime < 0 || k_prime > *k) throw std::invalid_argument("CertifyDetectable: need k' <= k");
  if (2 * h.MinDegree() < k_prime + 2) return false;
  return BergeGirth(h) >= 5;
}

namespace internal {

inline void RequireKneserDiameterTwo(int k, int n, const char* what) {
  if (k < 1 || n < 3 * k) {
    throw std::invalid_argument(std::string(what) + ": needs n >= 3k (K(k,n) of diameter 2)");
  }
}

}  // namespace internal

// The hyperedges of a k-uniform hypergraph on [n], read as K(k,n) vertices.
// When the hypergraph is k-detectable the result resolves K(k,n).
inline std::vector<int> HypergraphToResolving(const Hypergraph& h, int k, int n) {
  internal::RequireKneserDiameterTwo(k, n, "HypergraphToResolving");
  if (h.n != n) throw std::invalid_argument("HypergraphToResolving: hypergraph is not on [n]");
  std::vector<int> out;
  for (const auto& e : h.edges) {
    if (static_cast<int>(e.size()) != k) {
      throw std::invalid_argument("HypergraphToResolving: hypergraph is not k-uniform");
    }
    out.push_back(static_cast<int>(RankCombination(e, n)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct KneserResolvingCheck {
  bool resolving = false;
  // Two k-subsets of [n] with equal distance vectors, lexicographically
  // first by the later subset.
  std::optional<std::pair<std::vector<int>, std::vector<int>>> witness;
  std::uint64_t vertices = 0;
};

// Decides whether the hyperedges, read as vertices of K(k,n), resolve
// K(k,n), working from labels alone: d(A, B) is 0, 1 or 2 as A = B, A and B
// are disjoint, or neither. Needs n >= 3k and n <= 128.
inline KneserResolvingCheck CheckKneserResolving(const Hypergraph& h, int k) {
  const int n = h.n;
  internal::RequireKneserDiameterTwo(k, n, "CheckKneserResolving");
  if (n > 128) throw std::invalid_argument("CheckKneserResolving: n <= 128");
  using Set = std::array<std::uint64_t, 2>;
  auto to_set = [](const std::vector<int>& elements) {
    Set s{0, 0};
    for (int x : elements) s[x / 64] |= std::uint64_t{1} << (x % 64);
    return s;
  };
  std::vector<Set> landmarks;
  for (const auto& e : h.edges) {
    if (static_cast<int>(e.size()) != k) {
      throw std::invalid_argument("CheckKneserResolving: hyperedge is not a k-subset");
    }
    landmarks.push_back(to_set(e));
  }
  KneserResolvingCheck result;
  const std::size_t words = (landmarks.size() * 2 + 63) / 64;
  std::unordered_map<std::vector<std::uint64_t>, std::vector<int>, internal::WordsHash> seen;
  std::vector<std::uint64_t> key(words);
  result.resolving = true;
  ForEachCombination(n, k, [&](const std::vector<int>& combo) {
    const Set a = to_set(combo);
    std::fill(key.begin(), key.end(), 0);
    for (std::size_t i = 0; i < landmarks.size(); ++i) {
      const Set& b = landmarks[i];
      std::uint64_t d = 2;
      if (a == b) {
        d = 0;
      } else if ((a[0] & b[0]) == 0 && (a[1] & b[1]) == 0) {
        d = 1;
      }
      key[(2 * i) / 64] |= d << ((2 * i) % 64);
    }
    ++result.vertices;
    auto [it, inserted] = seen.emplace(key, combo);
    if (!inserted) {
      result.resolving = false;
      result.witness = std::pair{it->second, combo};
      return false;
    }
    return true;
  });
  return result;
}

// The K(k,n) vertices in `landmarks`, read as hyperedges on [n]. When the
// set resolves K(k,n) the result is k-detectable.
inline Hypergraph ResolvingToHypergraph(std::span<const int> landmarks, int k, int n) {
  internal::RequireKneserDiameterTwo(k, n, "ResolvingToHypergraph");
  const std::uint64_t order = Binomial(n, k);
  std::vector<int> sorted(landmarks.begin(), landmarks.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::vector<int>> edges;
  for (int s : sorted) {
    if (s < 0 || static_cast<std::uint64_t>(s) >= order) {
      throw std::invalid_argument("ResolvingToHypergraph: vertex not in K(k,n)");
    }
    edges.push_back(UnrankCombination(static_cast<std::uint64_t>(s), n, k));
  }
  return Hypergraph::Make(n, std::move(edges));
}

struct DegreePropertyViolation {
  int u = 0;
  int v = 0;
  bool together = false;  // u and v share a hyperedge
  int degree_sum = 0;
  int required = 0;
};

struct DegreePropertyReport {
  std::vector<DegreePropertyViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Necessary conditions for k-detectability: d(u) + d(v) >= k for vertices
// that never share a hyperedge, and >= k + 2 for vertices that do.
inline DegreePropertyReport CheckDegreeProperties(const Hypergraph& h, int k) {
  internal::RequireKneserDiameterTwo(k, h.n, "CheckDegreeProperties");
  if (h.HasSingletonEdge()) {
    throw std::invalid_argument("CheckDegreeProperties: singleton hyperedges are not supported");
  }
  const auto degree = h.Degrees();
  const auto together = h.CoOccurrence();
  DegreePropertyReport report;
  for (int u = 0; u < h.n; ++u) {
    for (int v = u + 1; v < h.n; ++v) {
      const bool adjacent = together[u][v] != 0;
      const int required = adjacent ? k + 2 : k;
      const int sum = degree[u] + degree[v];
      if (sum < required) report.violations.push_back({u, v, adjacent, sum, required});
    }
  }
  return report;
}

// ceil(k/2 + 1).
inline int GadgetRegularity(int k) { return (k + 3) / 2; }

namespace internal {

// Backtracking search for a k-uniform r-regular hypergraph with Berge girth
// >= 5 on exactly m vertices. A hyperedge may be added iff its vertices are
// pairwise at distance >= 4 in the 2-section of the current hypergraph.
class GadgetSearch {
 public:
  GadgetSearch(int k, int r, int m, BudgetMeter& meter)
      : k_(k), r_(r), m_(m), meter_(meter), degree_(m, 0), adj_(m, 0) {}

  std::optional<Hypergraph> Run() {
    if ((m_ * r_) % k_ != 0) return std::nullopt;
    if (Extend(-1, {})) {
      return Hypergraph::Make(m_, edges_);
    }
    return std::nullopt;
  }

 private:
  static std::uint64_t Bit(int v) { return std::uint64_t{1} << v; }

  std::uint64_t Ball1(int v) const { return adj_[v] | Bit(v); }
  std::uint64_t Ball2(int v) const {
    std::uint64_t ball = Ball1(v);
    for (std::uint64_t rest = adj_[v]; rest; rest &= rest - 1) {
      ball |= adj_[std::countr_zero(rest)];
    }
    return ball;
  }

  int LeastDeficient() const {
    for (int v = 0; v < m_; ++v) {
      if (degree_[v] < r_) return v;
    }
    return -1;
  }

  int LeastUntouched(std::uint64_t excluded) const {
    for (int v = 0; v < m_; ++v) {
      if (degree_[v] == 0 && !(excluded & Bit(v))) return v;
    }
    return -1;
  }

  // `prev` is the previous hyperedge added at the same anchor vertex; new
  // hyperedges at that anchor must come after it lexicographically.
  bool Extend(int anchor, std::vector<int> prev) {
    if (!meter_.Spend()) return false;
    const int v = LeastDeficient();
    if (v < 0) return true;
    if (v != anchor) prev.clear();
    std::vector<int> edge{v};
    return Pick(v, edge, prev);
  }

  bool Pick(int anchor, std::vector<int>& edge, const std::vector<int>& prev) {
    if (static_cast<int>(edge.size()) == k_) {
      if (!prev.empty() && !(prev < edge)) return false;
      Apply(edge, +1);
      const bool found = Extend(anchor, edge);
      if (found) return true;
      Apply(edge, -1);
      return false;
    }
    std::uint64_t chosen = 0;
    for (int x : edge) chosen |= Bit(x);
    const int untouched = LeastUntouched(chosen);
    for (int u = edge.back() + 1; u < m_; ++u) {
      if (meter_.exhausted()) return false;
      if (degree_[u] >= r_) continue;
      if (degree_[u] == 0 && u != untouched) continue;  // fresh vertices are interchangeable
      bool ok = true;
      for (int x : edge) {
        if (Ball2(x) & Ball1(u)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      edge.push_back(u);
      if (Pick(anchor, edge, prev)) return true;
      edge.pop_back();
    }
    return false;
  }

  void Apply(const std::vector<int>& edge, int sign) {
    std::uint64_t mask = 0;
    for (int x : edge) mask |= Bit(x);
    for (int x : edge) {
      degree_[x] += sign;
      // Pairs inside an added hyperedge were at distance >= 4, so they were
      // not adjacent before and removal clears exactly these bits.
      if (sign > 0) {
        adj_[x] |= mask & ~Bit(x);
      } else {
        adj_[x] &= ~(mask & ~Bit(x));
      }
    }
    if (sign > 0) {
      edges_.push_back(edge);
    } else {
      edges_.pop_back();
    }
  }

  int k_, r_, m_;
  BudgetMeter& meter_;
  std::vector<int> degree_;
  std::vector<std::uint64_t> adj_;
  std::vector<std::vector<int>> edges_;
};

}  // namespace internal

// Fewest vertices a k-uniform r-regular hypergraph of Berge girth >= 5 can
// have: a vertex, its r(k-1) neighbours, and their r(k-1)(r-1)(k-1) further
// neighbours are all distinct.
inline int GadgetMooreBound(int k, int r) {
  return 1 + r * (k - 1) + r * (k - 1) * (r - 1) * (k - 1);
}

struct GadgetSearchOptions {
  // 0 starts at GadgetMooreBound.
  int min_vertices = 0;
  int max_vertices = 64;
  // Defaults to GadgetRegularity(k).
  std::optional<int> regularity;
  Budget budget = Budget::Nodes(100'000'000);
};

// Searches m = min_vertices .. max_vertices for a k-uniform r-regular
// hypergraph of Berge girth >= 5, returning the first found.
inline std::optional<Hypergraph> SearchGirth5Gadget(int k, const GadgetSearchOptions& options = {}) {
  if (k < 2) throw std::invalid_argument("SearchGirth5Gadget: needs k >= 2");
  const int r = options.regularity.value_or(GadgetRegularity(k));
  if (r < 1) throw std::invalid_argument("SearchGirth5Gadget: regularity must be positive");
  if (options.max_vertices > 64) throw std::invalid_argument("SearchGirth5Gadget: at most 64 vertices");
  BudgetMeter meter(options.budget);
  const int start = std::max(options.min_vertices, GadgetMooreBound(k, r));
  for (int m = start; m <= options.max_vertices; ++m) {
    internal::GadgetSearch search(k, r, m, meter);
    if (auto found = search.Run()) return found;
    if (meter.exhausted()) return std::nullopt;
  }
  return std::nullopt;
}

// The union of gadget copies placed on the parts P_1..P_r of [n], each part
// m = gadget.n consecutive elements, the last part ending at n - 1 (it may
// overlap its predecessor). Repeated hyperedges are merged.
inline Hypergraph CoverHypergraph(int n, const Hypergraph& gadget) {
  const int m = gadget.n;
  if (m <= 0 || m > n) throw std::invalid_argument("CoverHypergraph: need 0 < m <= n");
  const int parts = (n + m - 1) / m;
  std::vector<std::vector<int>> edges;
  for (int p = 0; p < parts; ++p) {
    const int offset = (p == parts - 1) ? n - m : p * m;
    for (const auto& e : gadget.edges) {
      std::vector<int> shifted;
      for (int v : e) shifted.push_back(v + offset);
      edges.push_back(std::move(shifted));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Hypergraph::Make(n, std::move(edges));
}

// Resolving set of K(k,n) from a certified gadget tiled over [n].
inline std::vector<int> KneserResolvingCover(int k, int n, const Hypergraph& gadget) {
  internal::RequireKneserDiameterTwo(k, n, "KneserResolvingCover");
  if (gadget.n > n) throw std::invalid_argument("KneserResolvingCover: gadget larger than n");
  if (gadget.Uniformity() != k) {
    throw std::invalid_argument("KneserResolvingCover: gadget is not k-uniform");
  }
  if (!CertifyDetectable(gadget, k)) {
    throw std::invalid_argument("KneserResolvingCover: gadget fails the degree/girth certificate");
  }
  return HypergraphToResolving(CoverHypergraph(n, gadget), k, n);
}

}  // namespace locdim

#endif  // LOCDIM_HYPERGRAPH_HPP_
