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

#ifndef LOCDIM_GRAPH_IO_HPP_
#define LOCDIM_GRAPH_IO_HPP_

#include <cstdint>
#include <cstdio>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "locdim/graph.hpp"

namespace locdim {

// FNV-1a over the canonical edge list. Labels do not contribute: two graphs
// with the same vertex count and edge set share a hash.
inline std::string GraphHash(const Graph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(g.num_vertices()));
  for (auto [u, v] : g.Edges()) {
    mix(static_cast<std::uint64_t>(u));
    mix(static_cast<std::uint64_t>(v));
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline nlohmann::json GraphToJson(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.num_vertices();
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.Edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (g.has_labels()) j["labels"] = g.labels();
  return j;
}

inline Graph GraphFromJson(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw std::invalid_argument("graph JSON needs \"n\" and \"edges\"");
  }
  const int n = j.at("n").get<int>();
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) {
      throw std::invalid_argument("graph JSON edge must be a pair");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return Graph::FromEdges(n, edges, std::move(labels));
}

inline std::string GraphToDot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.num_vertices(); ++v) {
    out << "  " << v;
    if (g.has_labels()) out << " [label=\"" << g.labels()[v] << "\"]";
    out << ";\n";
  }
  for (auto [u, v] : g.Edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

// Reads the subset of DOT that GraphToDot writes: numeric node statements
// with an optional label attribute, and `u -- v;` edge statements.
inline Graph GraphFromDot(const std::string& text) {
  static const std::regex kNode(R"re(^\s*(\d+)\s*(\[\s*label\s*=\s*"([^"]*)"\s*\])?\s*;\s*$)re");
  static const std::regex kEdge(R"re(^\s*(\d+)\s*--\s*(\d+)\s*;\s*$)re");
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  int n = 0;
  bool any_label = false;
  while (std::getline(in, line)) {
    std::smatch m;
    if (std::regex_match(line, m, kEdge)) {
      edges.emplace_back(std::stoi(m[1]), std::stoi(m[2]));
    } else if (std::regex_match(line, m, kNode)) {
      const int v = std::stoi(m[1]);
      if (v != n) throw std::invalid_argument("DOT: nodes must be listed 0..n-1");
      ++n;
      labels.push_back(m[3].matched ? m[3].str() : std::to_string(v));
      any_label = any_label || m[3].matched;
    }
  }
  if (!any_label) labels.clear();
  return Graph::FromEdges(n, edges, std::move(labels));
}

}  // namespace locdim

#endif  // LOCDIM_GRAPH_IO_HPP_
