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

// Closed-form bounds on the metric dimension (beta) and localization number
// (zeta) of Kneser, Moore and polarity graphs, in exact rational arithmetic.
// Preconditions travel with each entry as data; an entry whose
// preconditions fail keeps its formula value but asserts no integer bound.

#ifndef LOCDIM_BOUNDS_HPP_
#define LOCDIM_BOUNDS_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "locdim/combinatorics.hpp"
#include "locdim/finite_field.hpp"
#include "locdim/graph.hpp"
#include "locdim/localization.hpp"
#include "locdim/metric_dimension.hpp"

namespace locdim {

using Rational = boost::rational<std::int64_t>;

enum class Quantity { kBeta, kZeta };
enum class BoundKind { kLower, kUpper, kExact };

inline const char* QuantityName(Quantity q) { return q == Quantity::kBeta ? "beta" : "zeta"; }
inline const char* BoundKindName(BoundKind k) {
  switch (k) {
    case BoundKind::kLower:
      return "lower";
    case BoundKind::kUpper:
      return "upper";
    case BoundKind::kExact:
      return "exact";
  }
  return "?";
}

inline std::int64_t Ceil(const Rational& r) {
  const std::int64_t q = r.numerator() / r.denominator();
  return (r.numerator() % r.denominator() != 0 && r > 0) ? q + 1 : q;
}
inline std::int64_t Floor(const Rational& r) {
  const std::int64_t q = r.numerator() / r.denominator();
  return (r.numerator() % r.denominator() != 0 && r < 0) ? q - 1 : q;
}

inline std::string ToString(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

struct Precondition {
  std::string description;
  bool satisfied = true;
};

struct BoundEntry {
  Quantity quantity = Quantity::kBeta;
  BoundKind kind = BoundKind::kLower;
  Rational value{0};
  std::string source;
  std::vector<Precondition> preconditions;
  std::vector<std::string> notes;
  // False when the formula cannot be evaluated (e.g. no gadget size).
  bool has_value = true;
  bool clamped = false;
  // Not a claim of the underlying theory, e.g. the k=2 cover size.
  bool extension = false;

  bool satisfied() const {
    return std::all_of(preconditions.begin(), preconditions.end(),
                       [](const Precondition& p) { return p.satisfied; });
  }

  // Integer consequence: ceiling for lower bounds, floor for upper bounds,
  // clamped to 1 for vacuous lower bounds. Empty when unsatisfied.
  std::optional<std::int64_t> integer() const {
    if (!satisfied() || !has_value) return std::nullopt;
    switch (kind) {
      case BoundKind::kLower:
        return clamped ? std::max<std::int64_t>(Ceil(value), 1) : Ceil(value);
      case BoundKind::kUpper:
        return Floor(value);
      case BoundKind::kExact:
        return Floor(value);
    }
    return std::nullopt;
  }
};

namespace internal {

inline BoundEntry Entry(Quantity q, BoundKind kind, Rational value, std::string source) {
  BoundEntry e;
  e.quantity = q;
  e.kind = kind;
  e.value = value;
  e.source = std::move(source);
  return e;
}

inline void ClampLower(BoundEntry& e) {
  if (e.kind == BoundKind::kLower && e.value < 1) e.clamped = true;
}

// Same entry restated for zeta, using zeta <= beta.
inline BoundEntry ZetaFromBeta(const BoundEntry& beta) {
  BoundEntry e = beta;
  e.quantity = Quantity::kZeta;
  e.source = "zeta <= beta; " + beta.source;
  return e;
}

}  // namespace internal

// beta(K(k,n)) >= n/2 + n/k, or (3n-1)/4 when k = 4.
inline BoundEntry KneserBetaLower(int k, int n) {
  const Rational value = k == 4 ? Rational(3 * n - 1, 4) : Rational(n, 2) + Rational(n, k);
  auto e = internal::Entry(Quantity::kBeta, BoundKind::kLower, value,
                           k == 4 ? "detection lower bound (3n-1)/4"
                                  : "detection lower bound n/2 + n/k");
  e.preconditions.push_back({"n >= 3k", n >= 3 * k});
  e.preconditions.push_back({"k >= 3", k >= 3});
  if (k == 3) e.preconditions.push_back({"k = 3 requires n >= 18", n >= 18});
  return e;
}

// zeta(K(k,n)) >= n/2 + n/k - k/2 - 1, or (3n-13)/4 when k = 4.
inline BoundEntry KneserZetaLower(int k, int n) {
  const Rational value = k == 4 ? Rational(3 * n - 13, 4)
                                : Rational(n, 2) + Rational(n, k) - Rational(k, 2) - 1;
  auto e = internal::Entry(Quantity::kZeta, BoundKind::kLower, value,
                           k == 4 ? "last-move lower bound (3n-13)/4"
                                  : "last-move lower bound n/2 + n/k - k/2 - 1");
  e.preconditions.push_back({"n >= 3k", n >= 3 * k});
  e.preconditions.push_back({"k >= 3", k >= 3});
  if (k == 3) e.preconditions.push_back({"k = 3 requires n - k >= 18", n - k >= 18});
  if (n - k < 3 * k) {
    e.notes.push_back("the argument applies the detection bound to K(k, n-k), whose own range "
                      "condition n - k >= 3k fails here");
  }
  internal::ClampLower(e);
  return e;
}

// Upper bound from covering [n] with copies of a girth-5 gadget on m
// vertices: (1/2 + 1/k) n + (1/2 + 1/k) m ceil(n'/m) for even k >= 4 and
// (1/2 + 1/k + 1/(2k)) (n + m ceil(n'/m)) for odd k >= 3, n' = n mod m.
// Passing no m marks the entry unsatisfied.
inline BoundEntry KneserBetaUpper(int k, int n, std::optional<int> m) {
  const bool even = k % 2 == 0;
  const Rational coefficient =
      even ? Rational(1, 2) + Rational(1, k) : Rational(1, 2) + Rational(1, k) + Rational(1, 2 * k);
  Rational value{0};
  if (m && *m > 0) {
    const int residue = n % *m;
    const int blocks = residue == 0 ? 0 : 1;
    value = coefficient * n + coefficient * Rational(*m) * blocks;
  }
  auto e = internal::Entry(Quantity::kBeta, BoundKind::kUpper, value,
                           even ? "gadget cover upper bound (1/2 + 1/k)(n + m ceil(n'/m))"
                                : "gadget cover upper bound (1/2 + 1/k + 1/2k)(n + m ceil(n'/m))");
  e.has_value = m.has_value() && *m > 0;
  e.preconditions.push_back({"girth-5 gadget available", e.has_value});
  e.preconditions.push_back({even ? "k >= 4 even" : "k >= 3 odd", k >= 3 && (even ? k >= 4 : true)});
  e.preconditions.push_back({"n >= 3k", n >= 3 * k});
  if (m) e.notes.push_back("m = " + std::to_string(*m));
  return e;
}

// Size of the k = 2 cover built from the 5-cycle gadget: ceil(n/5) * 5.
inline BoundEntry KneserPairCoverUpper(int n) {
  auto e = internal::Entry(Quantity::kBeta, BoundKind::kUpper, Rational((n + 4) / 5 * 5),
                           "5-cycle gadget cover size ceil(n/5) * 5");
  e.preconditions.push_back({"k = 2", true});
  e.preconditions.push_back({"n >= 6", n >= 6});
  e.extension = true;
  return e;
}

// Earlier partition bound ceil(n/(2k-1)) (C(2k-1, k) - 1).
inline BoundEntry KneserPartitionUpper(int k, int n) {
  const std::int64_t blocks = (n + 2 * k - 2) / (2 * k - 1);
  const std::uint64_t per = Binomial(2 * k - 1, k) - 1;
  auto e = internal::Entry(Quantity::kBeta, BoundKind::kUpper,
                           Rational(blocks * static_cast<std::int64_t>(per)),
                           "partition upper bound ceil(n/(2k-1)) (C(2k-1,k) - 1)");
  e.preconditions.push_back({"n >= 3k", n >= 3 * k});
  return e;
}

inline std::vector<BoundEntry> KneserBounds(int k, int n, std::optional<int> gadget_vertices = {}) {
  if (k < 1 || n <= k) throw std::invalid_argument("KneserBounds: need 1 <= k < n");
  std::vector<BoundEntry> out;
  if (k >= 3) {
    out.push_back(KneserBetaLower(k, n));
    out.push_back(KneserZetaLower(k, n));
    out.push_back(KneserBetaUpper(k, n, gadget_vertices));
  }
  if (k == 2) out.push_back(KneserPairCoverUpper(n));
  out.push_back(KneserPartitionUpper(k, n));
  std::vector<BoundEntry> zeta;
  for (const auto& e : out) {
    if (e.quantity == Quantity::kBeta && e.kind == BoundKind::kUpper) {
      zeta.push_back(internal::ZetaFromBeta(e));
    }
  }
  out.insert(out.end(), zeta.begin(), zeta.end());
  return out;
}

// Diameter-2 Moore graphs of degree k in {2, 3, 7, 57}.
inline std::vector<BoundEntry> MooreBounds(int k) {
  if (k != 2 && k != 3 && k != 7 && k != 57) {
    throw std::invalid_argument("MooreBounds: no diameter-2 Moore graph of degree " +
                                std::to_string(k));
  }
  using internal::Entry;
  std::vector<BoundEntry> out;
  if (k == 2) {
    out.push_back(Entry(Quantity::kBeta, BoundKind::kExact, 2, "5-cycle: beta = 2"));
    out.push_back(Entry(Quantity::kZeta, BoundKind::kExact, 2, "5-cycle: zeta = 2"));
    return out;
  }
  out.push_back(Entry(Quantity::kBeta, BoundKind::kLower, k, "Moore lower bound k"));
  out.push_back(Entry(Quantity::kBeta, BoundKind::kUpper, 2 * k - 3,
                      "Moore resolving set (N(u) + N(v)) - {u, v, w}, size 2k - 3"));
  if (k == 3) {
    out.push_back(Entry(Quantity::kBeta, BoundKind::kExact, 3, "Petersen graph: beta = 3"));
    out.push_back(Entry(Quantity::kZeta, BoundKind::kExact, 3, "Petersen graph: zeta = 3"));
  } else {
    out.push_back(Entry(Quantity::kZeta, BoundKind::kLower, k - 1, "Moore localization bound k - 1"));
    out.push_back(Entry(Quantity::kZeta, BoundKind::kUpper, k, "staged Moore strategy with k cops"));
  }
  return out;
}

// Polarity graphs of order q^2 + q + 1.
inline std::vector<BoundEntry> PolarityBounds(int q) {
  if (q < 2 || !PrimePowerBase(q)) {
    throw std::invalid_argument("PolarityBounds: q must be a prime power >= 2");
  }
  using internal::Entry;
  std::vector<BoundEntry> out;
  auto beta_lower = Entry(Quantity::kBeta, BoundKind::kLower, 2 * q - 5, "polarity lower bound 2q - 5");
  internal::ClampLower(beta_lower);
  out.push_back(beta_lower);
  out.push_back(Entry(Quantity::kBeta, BoundKind::kUpper, 2 * q - 1,
                      "polarity resolving set, size 2q - 1"));
  auto zeta_lower = Entry(Quantity::kZeta, BoundKind::kLower, Rational(2 * q - 5, 3),
                          "polarity localization lower bound (2q - 5)/3");
  internal::ClampLower(zeta_lower);
  out.push_back(zeta_lower);
  out.push_back(internal::ZetaFromBeta(out[1]));
  return out;
}

struct BoundsTarget {
  enum class Family { kKneser, kMoore, kPolarity };
  Family family = Family::kKneser;
  int k = 0;
  int n = 0;
  int q = 0;
  std::optional<int> gadget_vertices;

  static BoundsTarget Kneser(int k, int n, std::optional<int> m = {}) {
    return {Family::kKneser, k, n, 0, m};
  }
  static BoundsTarget Moore(int k) { return {Family::kMoore, k, 0, 0, {}}; }
  static BoundsTarget Polarity(int q) { return {Family::kPolarity, 0, 0, q, {}}; }

  std::string Describe() const {
    switch (family) {
      case Family::kKneser:
        return "Kneser(" + std::to_string(k) + "," + std::to_string(n) + ")";
      case Family::kMoore:
        return "Moore(" + std::to_string(k) + ")";
      case Family::kPolarity:
        return "Polarity(" + std::to_string(q) + ")";
    }
    return "?";
  }
};

struct BoundsReport {
  BoundsTarget target;
  std::vector<BoundEntry> entries;

  // Tightest asserted interval for the quantity, over satisfied entries.
  std::pair<std::optional<std::int64_t>, std::optional<std::int64_t>> Interval(Quantity q) const {
    std::optional<std::int64_t> lo, hi;
    for (const auto& e : entries) {
      if (e.quantity != q) continue;
      const auto v = e.integer();
      if (!v) continue;
      if (e.kind != BoundKind::kUpper) lo = lo ? std::max(*lo, *v) : *v;
      if (e.kind != BoundKind::kLower) hi = hi ? std::min(*hi, *v) : *v;
    }
    return {lo, hi};
  }
};

struct ReportOptions {
  // Run the exact solvers when the instance is small enough.
  bool compute_exact = true;
  int max_md_vertices = 40;
  Budget md_budget = Budget::Nodes(20'000'000);
  LocDecideOptions loc_options;
};

inline std::vector<BoundEntry> FamilyBounds(const BoundsTarget& target) {
  switch (target.family) {
    case BoundsTarget::Family::kKneser:
      return KneserBounds(target.k, target.n, target.gadget_vertices);
    case BoundsTarget::Family::kMoore:
      return MooreBounds(target.k);
    case BoundsTarget::Family::kPolarity:
      return PolarityBounds(target.q);
  }
  return {};
}

inline std::optional<Graph> TargetGraph(const BoundsTarget& target) {
  switch (target.family) {
    case BoundsTarget::Family::kKneser:
      if (Binomial(target.n, target.k) > 64) return std::nullopt;
      return KneserGraph(target.k, target.n);
    case BoundsTarget::Family::kMoore:
      if (target.k == 2) return CycleGraph(5);
      if (target.k == 3) return Petersen();
      if (target.k == 7) return HoffmanSingleton();
      return std::nullopt;
    case BoundsTarget::Family::kPolarity:
      if (target.q * target.q + target.q + 1 > 64) return std::nullopt;
      return ErPolarityGraph(target.q).graph;
  }
  return std::nullopt;
}

// Checks lower <= upper and lower <= exact <= upper over satisfied entries;
// throws std::logic_error naming the offending sources.
inline void CrossCheck(const BoundsReport& report) {
  for (Quantity q : {Quantity::kBeta, Quantity::kZeta}) {
    for (const auto& lo : report.entries) {
      if (lo.quantity != q || lo.kind == BoundKind::kUpper || !lo.integer()) continue;
      for (const auto& hi : report.entries) {
        if (hi.quantity != q || hi.kind == BoundKind::kLower || !hi.integer() || &lo == &hi) continue;
        if (*lo.integer() > *hi.integer()) {
          throw std::logic_error(std::string(QuantityName(q)) + " contradiction on " +
                                 report.target.Describe() + ": " + lo.source + " (" +
                                 std::to_string(*lo.integer()) + ") exceeds " + hi.source + " (" +
                                 std::to_string(*hi.integer()) + ")");
        }
      }
    }
  }
  // zeta <= beta: every zeta lower bound must sit below every beta upper bound.
  for (const auto& z : report.entries) {
    if (z.quantity != Quantity::kZeta || z.kind == BoundKind::kUpper || !z.integer()) continue;
    for (const auto& b : report.entries) {
      if (b.quantity != Quantity::kBeta || b.kind == BoundKind::kLower || !b.integer()) continue;
      if (*z.integer() > *b.integer()) {
        throw std::logic_error("zeta <= beta violated on " + report.target.Describe() + ": " +
                               z.source + " exceeds " + b.source);
      }
    }
  }
}

// Family bounds plus exact solver values where they close, cross-checked.
inline BoundsReport Report(const BoundsTarget& target, const ReportOptions& options = {}) {
  BoundsReport report;
  report.target = target;
  report.entries = FamilyBounds(target);
  if (options.compute_exact) {
    if (auto g = TargetGraph(target)) {
      if (g->num_vertices() <= options.max_md_vertices) {
        const auto md = MetricDimension(*g, options.md_budget);
        if (md.exact) {
          report.entries.push_back(internal::Entry(Quantity::kBeta, BoundKind::kExact, md.upper,
                                                   "exact metric dimension search"));
        }
      }
      if (g->num_vertices() <= kMaxGameVertices) {
        const auto loc = LocalizationNumber(*g, options.loc_options);
        if (loc.exact) {
          report.entries.push_back(internal::Entry(Quantity::kZeta, BoundKind::kExact, loc.lower,
                                                   "exact localization game solver"));
        }
      }
    }
  }
  CrossCheck(report);
  return report;
}

}  // namespace locdim

#endif  // LOCDIM_BOUNDS_HPP_
