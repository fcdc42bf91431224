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

// Immutable simple graphs with eager all-pairs distances, plus generators for
// the named families used throughout the library (cycles, Kneser graphs,
// Petersen, Hoffman-Singleton).

#ifndef LOCDIM_GRAPH_HPP_
#define LOCDIM_GRAPH_HPP_

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "locdim/combinatorics.hpp"

namespace locdim {

using Edge = std::pair<int, int>;

class Graph {
 public:
  static constexpr int kUnreachable = std::numeric_limits<int>::max();

  Graph() = default;

  // Builds a simple undirected graph on {0..n-1}. Self-loops and edges out of
  // range are rejected; duplicate edges collapse. `labels` is either empty or
  // has exactly n entries.
  static Graph FromEdges(int n, std::span<const Edge> edges,
                         std::vector<std::string> labels = {}) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    if (!labels.empty() && static_cast<int>(labels.size()) != n) {
      throw std::invalid_argument("Graph: label count does not match n");
    }
    Graph g;
    g.n_ = n;
    g.labels_ = std::move(labels);
    g.adjacency_.assign(static_cast<std::size_t>(n) * n, 0);
    g.neighbors_.assign(n, {});
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw std::invalid_argument("Graph: edge endpoint out of range");
      }
      if (u == v) throw std::invalid_argument("Graph: self-loop");
      if (g.adjacency_[g.Index(u, v)]) continue;
      g.adjacency_[g.Index(u, v)] = 1;
      g.adjacency_[g.Index(v, u)] = 1;
      g.neighbors_[u].push_back(v);
      g.neighbors_[v].push_back(u);
      ++g.num_edges_;
    }
    for (auto& list : g.neighbors_) std::sort(list.begin(), list.end());
    g.ComputeDistances();
    return g;
  }

  int num_vertices() const { return n_; }
  int num_edges() const { return num_edges_; }
  bool adjacent(int u, int v) const { return adjacency_[Index(u, v)] != 0; }
  int distance(int u, int v) const { return dist_[Index(u, v)]; }
  std::span<const int> neighbors(int u) const { return neighbors_[u]; }
  int degree(int u) const { return static_cast<int>(neighbors_[u].size()); }
  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }

  // Display name of a vertex: its label if present, else its index.
  std::string VertexName(int v) const {
    return labels_.empty() ? std::to_string(v) : labels_[v];
  }

  // Resolves a vertex token: an exact label match wins, then a plain index.
  std::optional<int> FindVertex(const std::string& token) const {
    for (int v = 0; v < static_cast<int>(labels_.size()); ++v) {
      if (labels_[v] == token) return v;
    }
    if (token.empty() ||
        !std::all_of(token.begin(), token.end(),
                     [](char c) { return c >= '0' && c <= '9'; })) {
      return std::nullopt;
    }
    const long value = std::stol(token);
    if (value >= n_) return std::nullopt;
    return static_cast<int>(value);
  }

  // Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> Edges() const {
    std::vector<Edge> edges;
    edges.reserve(num_edges_);
    for (int u = 0; u < n_; ++u) {
      for (int v : neighbors_[u]) {
        if (u < v) edges.emplace_back(u, v);
      }
    }
    return edges;
  }

  std::vector<int> ClosedNeighborhood(int u) const {
    std::vector<int> out(neighbors_[u].begin(), neighbors_[u].end());
    out.insert(std::lower_bound(out.begin(), out.end(), u), u);
    return out;
  }

  std::vector<int> SecondNeighborhood(int u) const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v) {
      if (distance(u, v) == 2) out.push_back(v);
    }
    return out;
  }

  bool IsConnected() const {
    for (int v = 0; v < n_; ++v) {
      if (n_ > 0 && distance(0, v) == kUnreachable) return false;
    }
    return true;
  }

  // kUnreachable for disconnected graphs; 0 for the empty graph.
  int Diameter() const {
    int diameter = 0;
    for (int d : dist_) diameter = std::max(diameter, d);
    return diameter;
  }

  // The common degree when the graph is regular.
  std::optional<int> RegularDegree() const {
    if (n_ == 0) return std::nullopt;
    const int d = degree(0);
    for (int v = 1; v < n_; ++v) {
      if (degree(v) != d) return std::nullopt;
    }
    return d;
  }

  int CommonNeighborCount(int u, int v) const {
    int count = 0;
    for (int w : neighbors_[u]) count += adjacent(w, v) ? 1 : 0;
    return count;
  }

 private:
  std::size_t Index(int u, int v) const {
    return static_cast<std::size_t>(u) * n_ + v;
  }

  void ComputeDistances() {
    dist_.assign(static_cast<std::size_t>(n_) * n_, kUnreachable);
    std::vector<int> queue(n_);
    for (int s = 0; s < n_; ++s) {
      int* row = &dist_[Index(s, 0)];
      row[s] = 0;
      int head = 0, tail = 0;
      queue[tail++] = s;
      while (head < tail) {
        const int u = queue[head++];
        for (int v : neighbors_[u]) {
          if (row[v] == kUnreachable) {
            row[v] = row[u] + 1;
            queue[tail++] = v;
          }
        }
      }
    }
  }

  int n_ = 0;
  int num_edges_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::uint8_t> adjacency_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<int> dist_;
};

// A sorted k-subset of {1..n} naming a Kneser-graph vertex.
struct KneserLabel {
  std::vector<int> elements;

  // Digits are concatenated when every element is a single digit ("12"),
  // otherwise elements are joined with '.' ("1.10").
  std::string ToString(int n) const {
    std::string out;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (n > 9 && i > 0) out += '.';
      out += std::to_string(elements[i]);
    }
    return out;
  }

  friend bool operator==(const KneserLabel&, const KneserLabel&) = default;
};

// All k-subsets of {1..n} in lexicographic order; index i is vertex i of
// KneserGraph(k, n).
inline std::vector<KneserLabel> KneserLabels(int k, int n) {
  std::vector<KneserLabel> labels;
  ForEachCombination(n, k, [&](const std::vector<int>& combo) {
    KneserLabel label;
    label.elements.reserve(k);
    for (int e : combo) label.elements.push_back(e + 1);
    labels.push_back(std::move(label));
  });
  return labels;
}

// Vertex index of a Kneser label in KneserGraph(k, n).
inline int KneserVertexIndex(const KneserLabel& label, int n) {
  std::vector<int> zero_based(label.elements.begin(), label.elements.end());
  for (int& e : zero_based) --e;
  return static_cast<int>(RankCombination(zero_based, n));
}

inline Graph KneserGraph(int k, int n) {
  if (k < 1 || n < 1) throw std::invalid_argument("KneserGraph: need k, n >= 1");
  if (k >= n) throw std::invalid_argument("KneserGraph: need k < n");
  if (Binomial(n, k) > 20000) {
    throw std::invalid_argument("KneserGraph: more than 20000 vertices");
  }
  const std::vector<KneserLabel> labels = KneserLabels(k, n);
  const int count = static_cast<int>(labels.size());
  std::vector<std::uint64_t> masks(count, 0);
  for (int i = 0; i < count; ++i) {
    for (int e : labels[i].elements) masks[i] |= std::uint64_t{1} << (e - 1);
  }
  std::vector<Edge> edges;
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      if ((masks[i] & masks[j]) == 0) edges.emplace_back(i, j);
    }
  }
  std::vector<std::string> names;
  names.reserve(count);
  for (const auto& label : labels) names.push_back(label.ToString(n));
  return Graph::FromEdges(count, edges, std::move(names));
}

inline Graph CycleGraph(int n) {
  if (n < 3) throw std::invalid_argument("CycleGraph: need n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::FromEdges(n, edges);
}

// The Petersen graph, laid out as K(2,5) with its 2-subset labels.
inline Graph Petersen() { return KneserGraph(2, 5); }

// Pentagon/pentagram construction: P_h = {5h + j}, Q_i = {25 + 5i + j};
// P_h[j] ~ P_h[j +- 1], Q_i[j] ~ Q_i[j +- 2], P_h[j] ~ Q_i[h*i + j mod 5].
inline Graph HoffmanSingleton() {
  auto p = [](int h, int j) { return 5 * h + ((j % 5) + 5) % 5; };
  auto q = [](int i, int j) { return 25 + 5 * i + ((j % 5) + 5) % 5; };
  std::vector<Edge> edges;
  for (int a = 0; a < 5; ++a) {
    for (int j = 0; j < 5; ++j) {
      edges.emplace_back(p(a, j), p(a, j + 1));
      edges.emplace_back(q(a, j), q(a, j + 2));
    }
  }
  for (int h = 0; h < 5; ++h) {
    for (int j = 0; j < 5; ++j) {
      for (int i = 0; i < 5; ++i) edges.emplace_back(p(h, j), q(i, h * i + j));
    }
  }
  std::vector<std::string> labels;
  for (int h = 0; h < 5; ++h) {
    for (int j = 0; j < 5; ++j) labels.push_back("P" + std::to_string(h) + std::to_string(j));
  }
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) labels.push_back("Q" + std::to_string(i) + std::to_string(j));
  }
  return Graph::FromEdges(50, edges, std::move(labels));
}

inline constexpr int kAcyclic = std::numeric_limits<int>::max();

// Length of a shortest cycle, or kAcyclic for forests. BFS from every root;
// a non-tree edge (u, w) closes a cycle of length d(u) + d(w) + 1, and the
// minimum over all roots is exact.
inline int Girth(const Graph& g) {
  const int n = g.num_vertices();
  int best = kAcyclic;
  std::vector<int> depth(n), parent(n), queue(n);
  for (int root = 0; root < n; ++root) {
    std::fill(depth.begin(), depth.end(), -1);
    depth[root] = 0;
    parent[root] = -1;
    int head = 0, tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      const int u = queue[head++];
      if (2 * depth[u] + 1 >= best) break;
      for (int w : g.neighbors(u)) {
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
  return best;
}

// True iff two distinct vertices have at least two common neighbours.
inline bool HasFourCycle(const Graph& g) {
  const int n = g.num_vertices();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.CommonNeighborCount(u, v) >= 2) return true;
    }
  }
  return false;
}

// Returns k when g is a k-regular Moore graph of diameter 2: girth 5 and
// order k^2 + 1.
inline std::optional<int> MooreDegree(const Graph& g) {
  const auto k = g.RegularDegree();
  if (!k || *k < 2) return std::nullopt;
  if (g.num_vertices() != (*k) * (*k) + 1) return std::nullopt;
  if (g.Diameter() != 2 || Girth(g) != 5) return std::nullopt;
  return k;
}

// All automorphisms of g as vertex permutations, or nullopt when there are
// more than `limit`. Candidate images must preserve distances to every
// vertex already mapped.
inline std::optional<std::vector<std::vector<int>>> Automorphisms(
    const Graph& g, std::size_t limit = 100000) {
  const int n = g.num_vertices();
  std::vector<std::vector<int>> result;
  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  bool overflow = false;

  auto extend = [&](auto&& self, int v) -> void {
    if (overflow) return;
    if (v == n) {
      if (result.size() >= limit) {
        overflow = true;
        return;
      }
      result.push_back(image);
      return;
    }
    for (int c = 0; c < n; ++c) {
      if (used[c] || g.degree(c) != g.degree(v)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        ok = g.distance(u, v) == g.distance(image[u], c);
      }
      if (!ok) continue;
      image[v] = c;
      used[c] = 1;
      self(self, v + 1);
      used[c] = 0;
      image[v] = -1;
      if (overflow) return;
    }
  };
  extend(extend, 0);
  if (overflow) return std::nullopt;
  return result;
}

}  // namespace locdim

#endif  // LOCDIM_GRAPH_HPP_
