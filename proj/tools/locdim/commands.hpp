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

// Subcommands of the locdim tool. Run() is the whole program minus process
// setup so that tests can drive it with in-memory streams.
//
// Exit codes: 0 success, 1 verification failure, 2 budget exhausted or
// result left open, 3 invalid input.

#ifndef LOCDIM_TOOLS_COMMANDS_HPP_
#define LOCDIM_TOOLS_COMMANDS_HPP_

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "locdim/bounds.hpp"
#include "locdim/finite_field.hpp"
#include "locdim/graph.hpp"
#include "locdim/graph_io.hpp"
#include "locdim/hypergraph.hpp"
#include "locdim/localization.hpp"
#include "locdim/metric_dimension.hpp"
#include "locdim/moore_strategy.hpp"
#include "locdim/serialization.hpp"

namespace locdim::cli {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kBudgetExhausted = 2, kInvalidInput = 3 };

// Raised for bad flags or inputs; maps to kInvalidInput.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Flags {
  std::string graph;
  std::string hypergraph;
  std::string out;
  std::string set;
  std::string certificate;
  std::string strategy = "decide";
  std::string family;
  std::string gadget;
  std::string trace;
  std::optional<std::uint64_t> budget_nodes;
  std::optional<double> budget_seconds;
  int threads = 1;
  std::optional<int> k;
  std::optional<int> n;
  std::optional<int> q;
  std::optional<int> min_vertices;
  int max_vertices = 64;
  int max_rounds = 64;
  int max_game_vertices = 12;
  int max_cops = 4;
  bool dot = false;
  bool symmetry = false;
  bool no_exact = false;
  bool no_cache = false;
};

namespace internal {

inline int RequireInt(const std::optional<int>& v, const char* flag) {
  if (!v) throw InputError(std::string("missing ") + flag);
  return *v;
}

inline std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

inline int ParseInt(const std::string& text) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size()) throw InputError("not an integer: " + text);
    return v;
  } catch (const std::logic_error&) {
    throw InputError("not an integer: " + text);
  }
}

// Named graphs: c5, cycle:N, petersen, hoffman-singleton, kneser[:K:N],
// er[:Q]; anything else is read as a .json or .dot file.
inline Graph ResolveGraph(const std::string& spec, const Flags& f) {
  if (spec.empty()) throw InputError("missing --graph");
  std::vector<std::string> parts;
  {
    std::stringstream in(spec);
    std::string p;
    while (std::getline(in, p, ':')) parts.push_back(p);
  }
  const std::string& name = parts[0];
  if (name == "c5" && parts.size() == 1) return CycleGraph(5);
  if (name == "cycle" && parts.size() == 2) return CycleGraph(ParseInt(parts[1]));
  if (name == "petersen" && parts.size() == 1) return Petersen();
  if (name == "hoffman-singleton" && parts.size() == 1) return HoffmanSingleton();
  if (name == "kneser" && (parts.size() == 1 || parts.size() == 3)) {
    const int k = parts.size() == 3 ? ParseInt(parts[1]) : RequireInt(f.k, "-k");
    const int n = parts.size() == 3 ? ParseInt(parts[2]) : RequireInt(f.n, "-n");
    return KneserGraph(k, n);
  }
  if (name == "er" && (parts.size() == 1 || parts.size() == 2)) {
    return ErPolarityGraph(parts.size() == 2 ? ParseInt(parts[1]) : RequireInt(f.q, "--q")).graph;
  }
  const std::filesystem::path path(spec);
  if (!std::filesystem::exists(path)) throw InputError("unknown graph: " + spec);
  if (path.extension() == ".dot") {
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    return GraphFromDot(text.str());
  }
  return GraphFromJson(ReadJsonFile(path));
}

// (k, n) when the graph spec names a Kneser graph.
inline std::optional<std::pair<int, int>> KneserParameters(const std::string& spec, const Flags& f) {
  if (spec == "kneser") return std::pair{RequireInt(f.k, "-k"), RequireInt(f.n, "-n")};
  if (spec.rfind("kneser:", 0) == 0) {
    const auto rest = spec.substr(7);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) throw InputError("expected kneser:K:N");
    return std::pair{ParseInt(rest.substr(0, colon)), ParseInt(rest.substr(colon + 1))};
  }
  return std::nullopt;
}

inline std::vector<int> ResolveSet(const Graph& g, const std::string& text) {
  std::vector<int> out;
  for (const auto& token : SplitList(text)) {
    const auto v = g.FindVertex(token);
    if (!v) throw InputError("unknown vertex: " + token);
    out.push_back(*v);
  }
  return out;
}

inline Budget MakeBudget(const Flags& f, std::uint64_t default_nodes) {
  Budget b = Budget::Nodes(f.budget_nodes.value_or(default_nodes));
  b.max_seconds = f.budget_seconds;
  b.threads = std::max(1, f.threads);
  return b;
}

inline void Emit(const Flags& f, const Json& j) {
  if (!f.out.empty()) WriteJsonFile(f.out, j);
}

inline std::string Join(const Graph& g, const std::vector<int>& vs) {
  std::string s;
  for (int v : vs) {
    if (!s.empty()) s += ",";
    s += g.VertexName(v);
  }
  return s;
}

inline Hypergraph ResolveHypergraph(const Flags& f, std::optional<int>* kneser_k = nullptr) {
  if (!f.hypergraph.empty()) return HypergraphFromJson(ReadJsonFile(f.hypergraph));
  if (!f.graph.empty() && !f.set.empty()) {
    // A resolving-set candidate on a Kneser graph, read as a hypergraph.
    const auto kn = KneserParameters(f.graph, f);
    if (!kn) throw InputError("--set conversion needs --graph kneser");
    const Graph g = KneserGraph(kn->first, kn->second);
    if (kneser_k) *kneser_k = kn->first;
    return ResolvingToHypergraph(ResolveSet(g, f.set), kn->first, kn->second);
  }
  throw InputError("missing --hypergraph (or --graph kneser with --set)");
}

// --- graph ---

inline int GraphBuild(const Flags& f, std::ostream& out) {
  const Graph g = ResolveGraph(f.family.empty() ? f.graph : f.family, f);
  out << "vertices " << g.num_vertices() << "\n"
      << "edges " << g.num_edges() << "\n";
  const int d = g.Diameter();
  out << "diameter " << (d == Graph::kUnreachable ? std::string("inf") : std::to_string(d)) << "\n";
  const int girth = Girth(g);
  out << "girth " << (girth == kAcyclic ? std::string("inf") : std::to_string(girth)) << "\n";
  out << "hash " << GraphHash(g) << "\n";
  Json j = GraphToJson(g);
  const std::string spec = f.family.empty() ? f.graph : f.family;
  if (spec == "er" || spec.rfind("er:", 0) == 0) {
    const auto pg = ErPolarityGraph(spec == "er" ? RequireInt(f.q, "--q") : ParseInt(spec.substr(3)));
    j["absolute"] = pg.absolute;
    out << "absolute " << pg.absolute.size() << "\n";
  }
  Emit(f, j);
  return kOk;
}

inline int GraphExport(const Flags& f, std::ostream& out) {
  const Graph g = ResolveGraph(f.graph, f);
  const std::string text = f.dot ? GraphToDot(g) : GraphToJson(g).dump(2) + "\n";
  if (f.out.empty()) {
    out << text;
  } else {
    std::ofstream file(f.out);
    if (!file) throw std::runtime_error("cannot write " + f.out);
    file << text;
  }
  return kOk;
}

// --- hyper ---

inline int HyperDetect(const Flags& f, std::ostream& out) {
  std::optional<int> inferred;
  const Hypergraph h = ResolveHypergraph(f, &inferred);
  const int k = f.k ? *f.k : RequireInt(inferred, "-k");
  const auto r = CheckDetectable(h, k, f.budget_nodes.value_or(kDefaultDetectBudget));
  Emit(f, DetectabilityToJson(r, k));
  switch (r.status) {
    case DetectabilityResult::Status::kDetectable:
      out << "detectable k=" << k << " (" << r.selections << " selections)\n";
      return kOk;
    case DetectabilityResult::Status::kNotDetectable: {
      auto fmt = [](const std::vector<int>& s) {
        std::string t = "{";
        for (int v : s) t += (t.size() > 1 ? "," : "") + std::to_string(v + 1);
        return t + "}";
      };
      out << "not detectable k=" << k << ": " << fmt(r.witness->first) << " and "
          << fmt(r.witness->second) << " share a detection vector\n";
      return kVerificationFailed;
    }
    case DetectabilityResult::Status::kBudgetExceeded:
      out << "budget exceeded; try hyper certify\n";
      return kBudgetExhausted;
  }
  return kOk;
}

inline int HyperGirth(const Flags& f, std::ostream& out) {
  const Hypergraph h = ResolveHypergraph(f);
  const int girth = BergeGirth(h);
  out << "berge girth " << (girth == kAcyclic ? std::string("inf") : std::to_string(girth)) << "\n";
  Json j;
  j["girth"] = girth == kAcyclic ? Json(nullptr) : Json(girth);
  Emit(f, j);
  return kOk;
}

inline int HyperCertify(const Flags& f, std::ostream& out) {
  const Hypergraph h = ResolveHypergraph(f);
  const int k = RequireInt(f.k, "-k");
  const bool ok = CertifyDetectable(h, k);
  Json j;
  j["k"] = k;
  j["min_degree"] = h.MinDegree();
  const int girth = BergeGirth(h);
  j["girth"] = girth == kAcyclic ? Json(nullptr) : Json(girth);
  j["certified"] = ok;
  Emit(f, j);
  out << (ok ? "certified" : "not certified") << " k'=" << k << " (min degree " << h.MinDegree()
      << ", girth " << (girth == kAcyclic ? std::string("inf") : std::to_string(girth)) << ")\n";
  return ok ? kOk : kVerificationFailed;
}

inline int HyperConvert(const Flags& f, std::ostream& out) {
  if (!f.hypergraph.empty()) {
    const Hypergraph h = HypergraphFromJson(ReadJsonFile(f.hypergraph));
    const int k = RequireInt(f.k, "-k");
    const auto landmarks = HypergraphToResolving(h, k, h.n);
    const Graph g = KneserGraph(k, h.n);
    const auto cert = IsResolving(g, landmarks);
    Emit(f, CertificateToJson(g, cert));
    out << "landmarks " << Join(g, cert.landmarks) << "\n"
        << (cert.verified ? "resolving" : "not resolving") << "\n";
    return cert.verified ? kOk : kVerificationFailed;
  }
  const Hypergraph h = ResolveHypergraph(f);
  Emit(f, HypergraphToJson(h));
  out << "hypergraph n=" << h.n << " edges=" << h.num_edges() << "\n";
  return kOk;
}

inline std::optional<Hypergraph> FindGadget(const Flags& f, int k, bool* exhausted, std::ostream& out) {
  *exhausted = false;
  if (k == 2) return Hypergraph::Make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  if (!f.gadget.empty()) return GadgetFromJson(ReadJsonFile(f.gadget));
  const int r = GadgetRegularity(k);
  if (!f.no_cache) {
    if (auto cached = LoadCachedGadget(k, r)) {
      out << "gadget loaded from " << GadgetCachePath(k, r).string() << "\n";
      return cached;
    }
  }
  GadgetSearchOptions options;
  options.min_vertices = f.min_vertices.value_or(0);
  options.max_vertices = f.max_vertices;
  options.budget = MakeBudget(f, 2'000'000'000);
  auto found = SearchGirth5Gadget(k, options);
  if (!found) {
    *exhausted = true;
    return std::nullopt;
  }
  if (!f.no_cache) {
    StoreCachedGadget(*found);
    out << "gadget cached at " << GadgetCachePath(k, r).string() << "\n";
  }
  return found;
}

inline int HyperGadget(const Flags& f, std::ostream& out) {
  const int k = RequireInt(f.k, "-k");
  bool exhausted = false;
  const auto gadget = FindGadget(f, k, &exhausted, out);
  if (!gadget) {
    out << "no gadget found for k=" << k << " within the budget and vertex range\n";
    return kBudgetExhausted;
  }
  Emit(f, GadgetToJson(*gadget));
  out << "gadget k=" << k << " m=" << gadget->n << " edges=" << gadget->num_edges()
      << " regularity=" << gadget->Regularity().value_or(0) << " girth=" << BergeGirth(*gadget) << "\n";
  return kOk;
}

inline int HyperCover(const Flags& f, std::ostream& out) {
  const int k = RequireInt(f.k, "-k");
  const int n = RequireInt(f.n, "-n");
  bool exhausted = false;
  const auto gadget = FindGadget(f, k, &exhausted, out);
  if (!gadget) {
    out << "no gadget available for k=" << k << "\n";
    return kBudgetExhausted;
  }
  const Hypergraph cover = CoverHypergraph(n, *gadget);
  const auto check = CheckKneserResolving(cover, k);
  const auto landmarks = HypergraphToResolving(cover, k, n);
  Json j;
  j["k"] = k;
  j["n"] = n;
  j["gadget_vertices"] = gadget->n;
  j["size"] = landmarks.size();
  j["hypergraph"] = HypergraphToJson(cover);
  j["landmarks"] = landmarks;
  j["verified"] = check.resolving;
  if (Binomial(n, k) <= 20000) j["graph_hash"] = GraphHash(KneserGraph(k, n));
  Emit(f, j);
  out << "cover of K(" << k << "," << n << ") with m=" << gadget->n << ": " << landmarks.size()
      << " landmarks, " << (check.resolving ? "resolving" : "NOT resolving") << "\n";
  return check.resolving ? kOk : kVerificationFailed;
}

// --- md ---

inline int MdVerify(const Flags& f, std::ostream& out) {
  const Graph g = ResolveGraph(f.graph, f);
  std::vector<int> landmarks;
  if (!f.certificate.empty()) {
    const auto claimed = CertificateFromJson(ReadJsonFile(f.certificate));
    if (claimed.graph_hash != GraphHash(g)) {
      throw InputError("certificate was computed for graph " + claimed.graph_hash + ", not " +
                       GraphHash(g));
    }
    landmarks = claimed.landmarks;
  } else {
    if (f.set.empty()) throw InputError("missing --set or --certificate");
    landmarks = ResolveSet(g, f.set);
  }
  const auto cert = IsResolving(g, landmarks);
  Emit(f, CertificateToJson(g, cert));
  if (cert.verified) {
    out << "resolving set of size " << cert.landmarks.size() << "\n";
    return kOk;
  }
  out << "not resolving: " << g.VertexName(cert.witness_pair->first) << " and "
      << g.VertexName(cert.witness_pair->second) << " share a distance vector\n";
  return kVerificationFailed;
}

inline int MdExact(const Flags& f, std::ostream& out) {
  const Graph g = ResolveGraph(f.graph, f);
  const auto r = MetricDimension(g, MakeBudget(f, 200'000'000));
  Emit(f, MetricDimensionToJson(g, r));
  if (r.exact) {
    out << "beta " << r.upper << "\n" << "set " << Join(g, r.best) << "\n";
    return kOk;
  }
  out << "beta in [" << r.lower << ", " << r.upper << "] (budget exhausted)\n"
      << "set " << Join(g, r.best) << "\n";
  return kBudgetExhausted;
}

inline int ReportSet(const Flags& f, const Graph& g, const std::vector<int>& set, const char* what,
                     std::ostream& out) {
  const auto cert = IsResolving(g, set);
  Emit(f, CertificateToJson(g, cert));
  out << what << " size " << cert.landmarks.size() << ": " << Join(g, cert.landmarks) << "\n"
      << (cert.verified ? "resolving" : "NOT resolving") << "\n";
  return cert.verified ? kOk : kVerificationFailed;
}

inline int MdGreedy(const Flags& f, std::ostream& out) {
  const Graph g = ResolveGraph(f.graph, f);
  return ReportSet(f, g, GreedyResolving(g), "greedy", out);
}

inline int MdConstructMoore(const Flags& f, std::ostream& out) {
  const Graph g = ResolveGraph(f.graph, f);
  return ReportSet(f, g, MooreResolving(g), "moore construction", out);
}

inline int MdConstructPolarity(const Flags& f, std::ostream& out) {
  const int q = f.q ? *f.q : -1;
  if (q < 0 && f.graph.empty()) throw InputError("missing --q");
  if (q >= 0) {
    const auto pg = ErPolarityGraph(q);
    return ReportSet(f, pg.graph, PolarityResolving(pg), "polarity construction", out);
  }
  const Graph g = ResolveGraph(f.graph, f);
  const int n = g.num_vertices();
  int order = 0;
  while (order * order + order + 1 < n) ++order;
  if (order * order + order + 1 != n) throw InputError("graph order is not q^2 + q + 1");
  return ReportSet(f, g, PolarityResolving(g, order), "polarity construction", out);
}

// --- loc ---

inline LocDecideOptions DecideOptions(const Flags& f) {
  LocDecideOptions o;
  o.budget = MakeBudget(f, 200'000'000);
  o.max_vertices = f.max_game_vertices;
  o.max_cops = f.max_cops;
  o.use_symmetry = f.symmetry;
  return o;
}

inline int LocDecideCommand(const Flags& f, std::ostream& out) {
  const Graph g = ResolveGraph(f.graph, f);
  const int k = RequireInt(f.k, "-k");
  const auto d = LocDecide(g, k, DecideOptions(f));
  Emit(f, DecisionToJson(g, d));
  out << DecisionName(d.outcome) << " k=" << k;
  if (d.outcome == LocDecision::Outcome::kCopWin) out << " rounds=" << d.rounds;
  if (!d.note.empty()) out << " (" << d.note << ")";
  out << "\n";
  return d.outcome == LocDecision::Outcome::kUnknown ? kBudgetExhausted : kOk;
}

// Known zeta interval for recognised families, used to seed the scan.
inline std::optional<std::vector<BoundEntry>> FamilyZetaBounds(const Graph& g) {
  if (auto k = MooreDegree(g); k && (*k == 2 || *k == 3 || *k == 7 || *k == 57)) {
    return MooreBounds(*k);
  }
  const int n = g.num_vertices();
  for (int q = 2; q * q + q + 1 <= n; ++q) {
    if (q * q + q + 1 == n && PrimePowerBase(q) && q <= 37 && GraphHash(ErPolarityGraph(q).graph) == GraphHash(g)) {
      return PolarityBounds(q);
    }
  }
  return std::nullopt;
}

inline int LocNumber(const Flags& f, std::ostream& out) {
  const Graph g = ResolveGraph(f.graph, f);
  int lower = 1;
  std::optional<int> upper;
  if (auto entries = FamilyZetaBounds(g)) {
    BoundsReport r;
    r.entries = *entries;
    const auto [lo, hi] = r.Interval(Quantity::kZeta);
    if (lo) lower = static_cast<int>(*lo);
    if (hi) upper = static_cast<int>(*hi);
  }
  const auto options = DecideOptions(f);
  const bool decidable = g.num_vertices() <= options.max_vertices;
  LocalizationNumberResult r;
  if (decidable) {
    // The scan starts at 1 so that every lower bound is decided, not quoted.
    r = LocalizationNumber(g, options);
  } else {
    r.lower = lower;
    r.upper = upper.value_or(static_cast<int>(GreedyResolving(g).size()));
    r.exact = r.lower == r.upper;
  }
  Json j;
  j["graph_hash"] = GraphHash(g);
  j["exact"] = r.exact;
  j["lower"] = r.lower;
  j["upper"] = r.upper;
  j["decided"] = decidable;
  Json decisions = Json::array();
  for (const auto& d : r.decisions) decisions.push_back(DecisionToJson(g, d));
  j["decisions"] = decisions;
  Emit(f, j);
  if (r.exact) {
    out << r.lower << "\n";
    return kOk;
  }
  out << "[" << r.lower << ", " << r.upper << "]"
      << (decidable ? " (budget exhausted)\n" : " (from bounds; exact decision not attempted)\n");
  return kBudgetExhausted;
}

inline int LocVerify(const Flags& f, std::ostream& out) {
  const Graph g = ResolveGraph(f.graph, f);
  std::unique_ptr<Strategy> strategy;
  int k = 0;
  if (f.strategy == "moore") {
    auto moore = std::make_unique<MooreStrategy>(g);
    k = f.k.value_or(moore->cops());
    strategy = std::move(moore);
  } else if (f.strategy == "static") {
    const auto cops = ResolveSet(g, f.set);
    strategy = std::make_unique<StaticStrategy>(MakePlacement(g, cops));
    k = f.k.value_or(static_cast<int>(cops.size()));
  } else if (f.strategy == "decide") {
    k = RequireInt(f.k, "-k");
    auto d = LocDecide(g, k, DecideOptions(f));
    if (d.outcome == LocDecision::Outcome::kUnknown) {
      out << "loc decide left k=" << k << " open: " << d.note << "\n";
      return kBudgetExhausted;
    }
    if (d.outcome == LocDecision::Outcome::kRobberWin) {
      out << "robber_win k=" << k << ": no strategy to verify\n";
      return kVerificationFailed;
    }
    strategy = std::make_unique<PositionalStrategyAdapter>(std::move(d.strategy));
  } else {
    throw InputError("unknown strategy: " + f.strategy);
  }
  const auto v = VerifyStrategy(g, *strategy, k, f.max_rounds);
  Emit(f, VerificationToJson(g, strategy->name(), k, v));
  out << OutcomeName(v.outcome) << " strategy=" << strategy->name() << " k=" << k;
  if (v.outcome == StrategyVerification::Outcome::kCaptured) out << " max_rounds=" << v.max_rounds;
  out << " states=" << v.nodes << "\n";
  for (const auto& [phase, count] : v.phase_visits) out << "  " << phase << ": " << count << "\n";
  if (!v.message.empty()) out << v.message << "\n";
  return v.outcome == StrategyVerification::Outcome::kCaptured ? kOk : kVerificationFailed;
}

// Re-checks a persisted trace step by step against the graph.
inline int LocReplay(const Flags& f, std::ostream& out) {
  const Graph g = ResolveGraph(f.graph, f);
  if (f.trace.empty()) throw InputError("missing --trace");
  const Json j = ReadJsonFile(f.trace);
  if (j.value("graph_hash", "") != GraphHash(g)) throw InputError("trace is for a different graph");
  auto names_to_belief = [&](const Json& names) {
    std::vector<int> vs;
    for (const auto& name : names) {
      const auto v = g.FindVertex(name.get<std::string>());
      if (!v) throw InputError("unknown vertex in trace: " + name.get<std::string>());
      vs.push_back(*v);
    }
    return vs;
  };
  Belief expected = Belief::All(g.num_vertices());
  bool captured = false;
  int round = 0;
  for (const auto& step : j.at("rounds")) {
    ++round;
    const Belief belief = Belief::Of(names_to_belief(step.at("belief")));
    const Placement placement = MakePlacement(g, names_to_belief(step.at("placement")));
    const Observation obs{step.at("observation").get<std::vector<int>>()};
    const Belief part = Belief::Of(names_to_belief(step.at("part")));
    auto fail = [&](const std::string& why) {
      out << "round " << round << ": " << why << "\n";
      return kVerificationFailed;
    };
    if (captured || belief != expected) return fail("belief does not follow from the previous round");
    const auto parts = ProbePartition(g, placement, belief);
    const auto it = parts.find(obs);
    if (it == parts.end() || it->second != part) return fail("part does not match the observation");
    if (step.contains("next_belief")) {
      const Belief next = Belief::Of(names_to_belief(step.at("next_belief")));
      if (next != Spread(g, part)) return fail("next belief is not the spread of the part");
      expected = next;
    } else {
      captured = true;
    }
  }
  out << "trace consistent over " << round << " rounds\n";
  return kOk;
}

// --- bounds ---

inline int BoundsReportCommand(const Flags& f, std::ostream& out) {
  BoundsTarget target;
  std::string family = f.family;
  if (family.empty() && !f.graph.empty()) {
    if (f.graph == "c5") {
      target = BoundsTarget::Moore(2);
    } else if (f.graph == "petersen") {
      target = BoundsTarget::Moore(3);
    } else if (f.graph == "hoffman-singleton") {
      target = BoundsTarget::Moore(7);
    } else {
      throw InputError("bounds report: use --family, or --graph c5|petersen|hoffman-singleton");
    }
  } else if (family == "kneser") {
    const int k = RequireInt(f.k, "-k");
    std::optional<int> m;
    if (k == 2) m = 5;
    if (!f.no_cache && k >= 3) {
      if (auto g = LoadCachedGadget(k, GadgetRegularity(k))) m = g->n;
    }
    target = BoundsTarget::Kneser(k, RequireInt(f.n, "-n"), k >= 3 ? m : std::nullopt);
  } else if (family == "moore") {
    target = BoundsTarget::Moore(RequireInt(f.k, "-k"));
  } else if (family == "polarity" || family == "er") {
    target = BoundsTarget::Polarity(RequireInt(f.q, "--q"));
  } else {
    throw InputError("unknown family: " + family);
  }
  ReportOptions options;
  options.compute_exact = !f.no_exact;
  options.loc_options = DecideOptions(f);
  const BoundsReport report = Report(target, options);
  const Json j = BoundsReportToJson(report);
  Emit(f, j);
  out << report.target.Describe() << "\n";
  for (const auto& e : report.entries) {
    out << "  " << QuantityName(e.quantity) << " " << BoundKindName(e.kind) << " "
        << (e.has_value ? ToString(e.value) : std::string("-"));
    if (auto v = e.integer()) {
      out << " => " << *v;
    } else {
      out << " (unsatisfied)";
    }
    if (e.clamped) out << " [clamped]";
    if (e.extension) out << " [extension]";
    out << "  " << e.source << "\n";
  }
  for (Quantity q : {Quantity::kBeta, Quantity::kZeta}) {
    const auto [lo, hi] = report.Interval(q);
    out << QuantityName(q) << " in [" << (lo ? std::to_string(*lo) : "?") << ", "
        << (hi ? std::to_string(*hi) : "?") << "]\n";
  }
  return kOk;
}

}  // namespace internal

inline int Run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Localization number and metric dimension of diameter-2 graphs", "locdim"};
  app.require_subcommand(1);
  Flags f;
  int (*handler)(const Flags&, std::ostream&) = nullptr;

  auto graph_flags = [&](CLI::App* c) {
    c->add_option("--graph", f.graph, "graph file (.json/.dot) or c5, cycle:N, petersen, "
                                      "hoffman-singleton, kneser[:K:N], er[:Q]");
    c->add_option("-k", f.k, "k");
    c->add_option("-n", f.n, "n");
    c->add_option("--q", f.q, "field order");
    c->add_option("--out", f.out, "JSON artifact path");
  };
  auto budget_flags = [&](CLI::App* c) {
    c->add_option("--budget-nodes", f.budget_nodes, "work budget in search nodes");
    c->add_option("--budget-seconds", f.budget_seconds, "wall-clock budget");
    c->add_option("--threads", f.threads, "worker threads");
  };
  auto verb = [&](CLI::App* parent, const char* name, const char* help,
                  int (*fn)(const Flags&, std::ostream&)) {
    CLI::App* c = parent->add_subcommand(name, help);
    graph_flags(c);
    budget_flags(c);
    c->callback([&handler, fn] { handler = fn; });
    return c;
  };

  CLI::App* graph = app.add_subcommand("graph", "build and export graphs")->require_subcommand(1);
  verb(graph, "build", "build a graph", internal::GraphBuild)
      ->add_option("family", f.family, "named graph, as for --graph");
  verb(graph, "export", "export a graph", internal::GraphExport)
      ->add_flag("--dot", f.dot, "DOT instead of JSON");

  CLI::App* hyper = app.add_subcommand("hyper", "hypergraph detection")->require_subcommand(1);
  for (auto [name, help, fn] :
       std::initializer_list<std::tuple<const char*, const char*, int (*)(const Flags&, std::ostream&)>>{
           {"detect", "exhaustive k-detectability", internal::HyperDetect},
           {"girth", "Berge girth", internal::HyperGirth},
           {"certify", "degree/girth detectability certificate", internal::HyperCertify},
           {"convert", "resolving set <-> hypergraph on Kneser graphs", internal::HyperConvert},
           {"gadget", "girth-5 gadget search with cache", internal::HyperGadget},
           {"cover", "Kneser resolving set from gadget copies", internal::HyperCover}}) {
    CLI::App* c = verb(hyper, name, help, fn);
    c->add_option("--hypergraph", f.hypergraph, "hypergraph JSON {n, edges}");
    c->add_option("--set", f.set, "Kneser vertices (labels or indices)");
    c->add_option("--gadget", f.gadget, "gadget JSON");
    c->add_option("--min-vertices", f.min_vertices, "gadget search start");
    c->add_option("--max-vertices", f.max_vertices, "gadget search end");
    c->add_flag("--no-cache", f.no_cache, "ignore the gadget cache");
  }

  CLI::App* md = app.add_subcommand("md", "metric dimension")->require_subcommand(1);
  verb(md, "verify", "verify a resolving set", internal::MdVerify)
      ->add_option("--set", f.set, "landmarks (labels or indices)");
  md->get_subcommand("verify")->add_option("--certificate", f.certificate, "certificate JSON");
  verb(md, "exact", "exact metric dimension", internal::MdExact);
  verb(md, "greedy", "greedy resolving set", internal::MdGreedy);
  verb(md, "construct-moore", "Moore-graph resolving set", internal::MdConstructMoore);
  verb(md, "construct-polarity", "polarity-graph resolving set", internal::MdConstructPolarity);

  CLI::App* loc = app.add_subcommand("loc", "localization game")->require_subcommand(1);
  for (auto [name, help, fn] :
       std::initializer_list<std::tuple<const char*, const char*, int (*)(const Flags&, std::ostream&)>>{
           {"decide", "decide whether k cops win", internal::LocDecideCommand},
           {"number", "localization number", internal::LocNumber},
           {"verify", "verify a strategy against every robber play", internal::LocVerify},
           {"replay", "re-check a saved trace", internal::LocReplay}}) {
    CLI::App* c = verb(loc, name, help, fn);
    c->add_option("--strategy", f.strategy, "moore, static or decide");
    c->add_option("--set", f.set, "cop placement for --strategy static");
    c->add_option("--max-rounds", f.max_rounds, "round budget for verify");
    c->add_option("--trace", f.trace, "trace JSON for replay");
    c->add_option("--max-vertices", f.max_game_vertices, "size guard: vertices");
    c->add_option("--max-cops", f.max_cops, "size guard: cops");
    c->add_flag("--symmetry", f.symmetry, "reduce by graph automorphisms");
  }

  CLI::App* bounds = app.add_subcommand("bounds", "closed-form bounds")->require_subcommand(1);
  CLI::App* report = verb(bounds, "report", "bounds report", internal::BoundsReportCommand);
  report->add_option("--family", f.family, "kneser, moore or polarity");
  report->add_flag("--no-exact", f.no_exact, "skip the exact solvers");
  report->add_flag("--no-cache", f.no_cache, "ignore the gadget cache");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream help;
    const int code = app.exit(e, help, err);
    (void)code;
    if (e.get_exit_code() == 0) {
      out << help.str();
      return kOk;
    }
    return kInvalidInput;
  }
  if (!handler) {
    err << "no command given\n";
    return kInvalidInput;
  }
  try {
    return handler(f, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::logic_error& e) {
    err << "contradiction: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}

}  // namespace locdim::cli

#endif  // LOCDIM_TOOLS_COMMANDS_HPP_
