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

// JSON forms of certificates, hypergraphs, bound reports and strategy
// traces, plus the on-disk gadget cache.

#ifndef LOCDIM_SERIALIZATION_HPP_
#define LOCDIM_SERIALIZATION_HPP_

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "locdim/bounds.hpp"
#include "locdim/graph.hpp"
#include "locdim/graph_io.hpp"
#include "locdim/hypergraph.hpp"
#include "locdim/localization.hpp"
#include "locdim/metric_dimension.hpp"

namespace locdim {

using Json = nlohmann::json;

inline Json ReadJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

inline void WriteJsonFile(const std::filesystem::path& path, const Json& j) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

inline std::vector<std::string> VertexNames(const Graph& g, std::span<const int> vs) {
  std::vector<std::string> out;
  for (int v : vs) out.push_back(g.VertexName(v));
  return out;
}

// --- resolving sets ---

inline Json CertificateToJson(const Graph& g, const ResolvingCertificate& c) {
  Json j;
  j["kind"] = "resolving_set";
  j["graph_hash"] = c.graph_hash;
  j["landmarks"] = c.landmarks;
  j["landmark_labels"] = VertexNames(g, c.landmarks);
  j["size"] = c.landmarks.size();
  j["verified"] = c.verified;
  if (c.witness_pair) j["witness_pair"] = {c.witness_pair->first, c.witness_pair->second};
  return j;
}

inline ResolvingCertificate CertificateFromJson(const Json& j) {
  if (!j.contains("graph_hash") || !j.contains("landmarks")) {
    throw std::invalid_argument("certificate JSON needs \"graph_hash\" and \"landmarks\"");
  }
  ResolvingCertificate c;
  c.graph_hash = j.at("graph_hash").get<std::string>();
  c.landmarks = j.at("landmarks").get<std::vector<int>>();
  c.verified = j.value("verified", false);
  return c;
}

inline Json MetricDimensionToJson(const Graph& g, const MetricDimensionResult& r) {
  Json j;
  j["graph_hash"] = GraphHash(g);
  j["exact"] = r.exact;
  j["lower"] = r.lower;
  j["upper"] = r.upper;
  j["nodes"] = r.nodes;
  j["certificate"] = CertificateToJson(g, IsResolving(g, r.best));
  return j;
}

// --- hypergraphs ---

inline Json HypergraphToJson(const Hypergraph& h) {
  Json j;
  j["n"] = h.n;
  j["edges"] = h.edges;
  return j;
}

inline Hypergraph HypergraphFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw std::invalid_argument("hypergraph JSON needs \"n\" and \"edges\"");
  }
  return Hypergraph::Make(j.at("n").get<int>(),
                          j.at("edges").get<std::vector<std::vector<int>>>());
}

inline Json DetectabilityToJson(const DetectabilityResult& r, int k_prime) {
  Json j;
  j["k"] = k_prime;
  j["selections"] = r.selections;
  switch (r.status) {
    case DetectabilityResult::Status::kDetectable:
      j["status"] = "detectable";
      break;
    case DetectabilityResult::Status::kNotDetectable:
      j["status"] = "not_detectable";
      j["witness"] = {r.witness->first, r.witness->second};
      break;
    case DetectabilityResult::Status::kBudgetExceeded:
      j["status"] = "budget_exceeded";
      break;
  }
  return j;
}

// --- gadget cache ---

inline Json GadgetToJson(const Hypergraph& gadget) {
  Json j;
  j["k"] = gadget.Uniformity().value_or(0);
  j["m"] = gadget.n;
  j["regularity"] = gadget.Regularity().value_or(0);
  j["edges"] = gadget.edges;
  return j;
}

// Parses and re-certifies a cached gadget; throws when it fails.
inline Hypergraph GadgetFromJson(const Json& j) {
  for (const char* key : {"k", "m", "regularity", "edges"}) {
    if (!j.contains(key)) throw std::invalid_argument(std::string("gadget JSON lacks \"") + key + "\"");
  }
  const int k = j.at("k").get<int>();
  Hypergraph h = Hypergraph::Make(j.at("m").get<int>(),
                                  j.at("edges").get<std::vector<std::vector<int>>>());
  if (h.Uniformity() != k || h.Regularity() != j.at("regularity").get<int>()) {
    throw std::invalid_argument("gadget JSON: uniformity or regularity mismatch");
  }
  if (!CertifyDetectable(h, k)) throw std::invalid_argument("gadget JSON fails certification");
  return h;
}

inline std::filesystem::path GadgetCacheDir() {
  if (const char* dir = std::getenv("LOCDIM_CACHE_DIR"); dir && *dir) return dir;
  return ".locdim-cache";
}

inline std::filesystem::path GadgetCachePath(int k, int regularity) {
  return GadgetCacheDir() / ("gadget_k" + std::to_string(k) + "_r" + std::to_string(regularity) + ".json");
}

inline std::optional<Hypergraph> LoadCachedGadget(int k, int regularity) {
  const auto path = GadgetCachePath(k, regularity);
  if (!std::filesystem::exists(path)) return std::nullopt;
  return GadgetFromJson(ReadJsonFile(path));
}

inline void StoreCachedGadget(const Hypergraph& gadget) {
  WriteJsonFile(GadgetCachePath(gadget.Uniformity().value_or(0), gadget.Regularity().value_or(0)),
                GadgetToJson(gadget));
}

// Cached gadget when present (re-certified on load), otherwise a fresh
// search whose result is written back to the cache.
inline std::optional<Hypergraph> SearchGirth5GadgetCached(int k, const GadgetSearchOptions& options = {}) {
  const int r = options.regularity.value_or(GadgetRegularity(k));
  if (auto cached = LoadCachedGadget(k, r)) return cached;
  auto found = SearchGirth5Gadget(k, options);
  if (found) StoreCachedGadget(*found);
  return found;
}

// --- bounds ---

inline Json RationalToJson(const Rational& r) {
  return Json{{"num", r.numerator()}, {"den", r.denominator()}, {"text", ToString(r)}};
}

inline Json BoundEntryToJson(const BoundEntry& e) {
  Json j;
  j["quantity"] = QuantityName(e.quantity);
  j["kind"] = BoundKindName(e.kind);
  j["value"] = e.has_value ? RationalToJson(e.value) : Json(nullptr);
  if (auto v = e.integer()) {
    j["integer"] = *v;
  } else {
    j["integer"] = nullptr;
  }
  j["source"] = e.source;
  j["satisfied"] = e.satisfied();
  Json pre = Json::array();
  for (const auto& p : e.preconditions) {
    pre.push_back({{"condition", p.description}, {"satisfied", p.satisfied}});
  }
  j["preconditions"] = pre;
  if (!e.notes.empty()) j["notes"] = e.notes;
  if (e.clamped) j["clamped"] = true;
  if (e.extension) j["extension"] = true;
  return j;
}

inline Json BoundsReportToJson(const BoundsReport& r) {
  Json j;
  j["target"] = r.target.Describe();
  Json entries = Json::array();
  for (const auto& e : r.entries) entries.push_back(BoundEntryToJson(e));
  j["entries"] = entries;
  for (Quantity q : {Quantity::kBeta, Quantity::kZeta}) {
    const auto [lo, hi] = r.Interval(q);
    j["interval"][QuantityName(q)] = {lo ? Json(*lo) : Json(nullptr), hi ? Json(*hi) : Json(nullptr)};
  }
  return j;
}

// --- localization game ---

inline Json TraceStepToJson(const Graph& g, const TraceStep& s) {
  Json j;
  j["round"] = s.round;
  j["phase"] = s.phase;
  j["belief"] = VertexNames(g, s.belief.Vertices());
  j["placement"] = VertexNames(g, s.placement);
  j["observation"] = s.observation.distances;
  j["part"] = VertexNames(g, s.part.Vertices());
  if (s.part.singleton()) {
    j["captured"] = g.VertexName(s.part.first());
  } else {
    j["next_belief"] = VertexNames(g, s.next_belief.Vertices());
  }
  return j;
}

inline const char* OutcomeName(StrategyVerification::Outcome o) {
  switch (o) {
    case StrategyVerification::Outcome::kCaptured:
      return "captured";
    case StrategyVerification::Outcome::kEvaded:
      return "evaded";
    case StrategyVerification::Outcome::kUnhandled:
      return "unhandled";
  }
  return "?";
}

inline Json VerificationToJson(const Graph& g, const std::string& strategy, int cops,
                               const StrategyVerification& v) {
  Json j;
  j["graph_hash"] = GraphHash(g);
  j["strategy"] = strategy;
  j["cops"] = cops;
  j["outcome"] = OutcomeName(v.outcome);
  if (v.outcome == StrategyVerification::Outcome::kCaptured) j["max_rounds"] = v.max_rounds;
  if (!v.message.empty()) j["message"] = v.message;
  j["nodes"] = v.nodes;
  j["phase_visits"] = v.phase_visits;
  Json rounds = Json::array();
  for (const auto& s : v.trace) rounds.push_back(TraceStepToJson(g, s));
  j["rounds"] = rounds;
  if (!v.cycle.empty()) {
    Json cycle = Json::array();
    for (Belief b : v.cycle) cycle.push_back(VertexNames(g, b.Vertices()));
    j["cycle"] = cycle;
  }
  return j;
}

inline const char* DecisionName(LocDecision::Outcome o) {
  switch (o) {
    case LocDecision::Outcome::kCopWin:
      return "cop_win";
    case LocDecision::Outcome::kRobberWin:
      return "robber_win";
    case LocDecision::Outcome::kUnknown:
      return "unknown";
  }
  return "?";
}

inline Json DecisionToJson(const Graph& g, const LocDecision& d) {
  Json j;
  j["graph_hash"] = GraphHash(g);
  j["cops"] = d.cops;
  j["outcome"] = DecisionName(d.outcome);
  j["beliefs"] = d.beliefs;
  j["evaluations"] = d.evaluations;
  if (!d.note.empty()) j["note"] = d.note;
  if (d.outcome == LocDecision::Outcome::kCopWin) {
    j["rounds"] = d.rounds;
    if (auto p = d.strategy.PlacementFor(Belief::All(g.num_vertices()))) {
      j["first_placement"] = VertexNames(g, *p);
    }
  }
  return j;
}

}  // namespace locdim

#endif  // LOCDIM_SERIALIZATION_HPP_
