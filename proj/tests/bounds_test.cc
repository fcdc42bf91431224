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

#include "locdim/bounds.hpp"

#include <vector>

#include <gtest/gtest.h>

#include "locdim/graph.hpp"
#include "locdim/hypergraph.hpp"
#include "locdim/localization.hpp"
#include "locdim/metric_dimension.hpp"

namespace locdim {
namespace {

const BoundEntry* Find(const std::vector<BoundEntry>& entries, Quantity q, BoundKind kind,
                       const std::string& source_prefix = "") {
  for (const auto& e : entries) {
    if (e.quantity == q && e.kind == kind && e.source.rfind(source_prefix, 0) == 0) return &e;
  }
  return nullptr;
}

TEST(RationalTest, CeilAndFloor) {
  EXPECT_EQ(Ceil(Rational(35, 4)), 9);
  EXPECT_EQ(Floor(Rational(35, 4)), 8);
  EXPECT_EQ(Ceil(Rational(-1, 3)), 0);
  EXPECT_EQ(Floor(Rational(-1, 3)), -1);
  EXPECT_EQ(Ceil(Rational(12)), 12);
  EXPECT_EQ(ToString(Rational(23, 4)), "23/4");
  EXPECT_EQ(ToString(Rational(8, 2)), "4");
}

TEST(KneserBoundsTest, BetaLower) {
  const auto a = KneserBetaLower(6, 18);
  EXPECT_EQ(a.value, Rational(12));
  EXPECT_TRUE(a.satisfied());
  EXPECT_EQ(a.integer(), 12);
  const auto b = KneserBetaLower(4, 12);
  EXPECT_EQ(b.value, Rational(35, 4));
  EXPECT_EQ(b.integer(), 9);
  const auto c = KneserBetaLower(3, 9);
  EXPECT_FALSE(c.satisfied());
  EXPECT_FALSE(c.integer());
  EXPECT_TRUE(KneserBetaLower(3, 18).satisfied());
  EXPECT_FALSE(KneserBetaLower(4, 11).satisfied());
}

TEST(KneserBoundsTest, ZetaLower) {
  EXPECT_EQ(KneserZetaLower(6, 18).value, Rational(8));
  const auto b = KneserZetaLower(4, 12);
  EXPECT_EQ(b.value, Rational(23, 4));
  EXPECT_EQ(b.integer(), 6);
  EXPECT_EQ(KneserZetaLower(5, 15).value, Rational(7));
  EXPECT_FALSE(KneserZetaLower(3, 20).satisfied());
  EXPECT_TRUE(KneserZetaLower(3, 21).satisfied());
  EXPECT_FALSE(KneserZetaLower(4, 12).notes.empty());
}

TEST(KneserBoundsTest, BetaUpperFormulas) {
  // n divisible by m leaves only the leading term.
  EXPECT_EQ(KneserBetaUpper(4, 40, 20).value, Rational(3, 4) * 40);
  EXPECT_EQ(KneserBetaUpper(6, 60, 30).value, Rational(2, 3) * 60);
  // Odd k = 3: 1/2 + 1/3 + 1/6 = 1.
  EXPECT_EQ(KneserBetaUpper(3, 70, 35).value, Rational(70));
  EXPECT_EQ(KneserBetaUpper(3, 45, 35).value, Rational(45 + 35));
  const auto none = KneserBetaUpper(4, 12, std::nullopt);
  EXPECT_FALSE(none.has_value);
  EXPECT_FALSE(none.satisfied());
  EXPECT_FALSE(none.integer());
}

TEST(KneserBoundsTest, OddGadgetCoverMatchesFormula) {
  const auto gadget = Hypergraph::Make(
      35, {{0, 1, 2},    {0, 3, 4},    {0, 5, 6},    {1, 7, 8},    {1, 9, 10},   {2, 11, 12},
           {2, 13, 14},  {3, 15, 16},  {3, 17, 18},  {4, 19, 20},  {4, 21, 22},  {5, 23, 24},
           {5, 25, 26},  {6, 27, 28},  {6, 29, 30},  {7, 15, 23},  {7, 19, 27},  {8, 17, 25},
           {8, 21, 29},  {9, 16, 28},  {9, 20, 24},  {10, 31, 32}, {10, 33, 34}, {11, 16, 26},
           {11, 21, 31}, {12, 17, 33}, {12, 20, 30}, {13, 18, 24}, {13, 29, 34}, {14, 22, 28},
           {14, 25, 32}, {15, 30, 32}, {18, 27, 31}, {19, 26, 34}, {22, 23, 33}});
  for (int n : {35, 45, 70}) {
    const auto cover = CoverHypergraph(n, gadget);
    const auto bound = KneserBetaUpper(3, n, 35);
    EXPECT_LE(static_cast<std::int64_t>(cover.edges.size()), *bound.integer()) << n;
    if (n % 35 == 0) {
      EXPECT_EQ(static_cast<std::int64_t>(cover.edges.size()), *bound.integer());
    }
    EXPECT_TRUE(CheckKneserResolving(cover, 3).resolving) << n;
  }
}

TEST(KneserBoundsTest, PairCoverExtension) {
  const auto e = KneserPairCoverUpper(10);
  EXPECT_TRUE(e.extension);
  EXPECT_EQ(e.integer(), 10);
  std::vector<std::vector<int>> c5;
  for (int i = 0; i < 5; ++i) c5.push_back({i, (i + 1) % 5});
  const auto set = KneserResolvingCover(2, 10, Hypergraph::Make(5, c5));
  EXPECT_EQ(static_cast<std::int64_t>(set.size()), *e.integer());
  EXPECT_TRUE(IsResolving(KneserGraph(2, 10), set).verified);
}

TEST(KneserBoundsTest, PartitionUpperAgainstExactSmallCases) {
  EXPECT_EQ(KneserPartitionUpper(4, 12).integer(), 2 * 34);
  for (int n = 6; n <= 8; ++n) {
    const auto md = MetricDimension(KneserGraph(2, n));
    ASSERT_TRUE(md.exact);
    EXPECT_LE(md.upper, *KneserPartitionUpper(2, n).integer()) << n;
    EXPECT_LE(md.upper, *KneserPairCoverUpper(n).integer()) << n;
  }
}

TEST(KneserBoundsTest, ZetaEntriesMirrorBetaUppers) {
  const auto entries = KneserBounds(4, 20, 20);
  int beta_uppers = 0, zeta_uppers = 0;
  for (const auto& e : entries) {
    if (e.kind != BoundKind::kUpper) continue;
    (e.quantity == Quantity::kBeta ? beta_uppers : zeta_uppers) += 1;
  }
  EXPECT_EQ(beta_uppers, zeta_uppers);
  EXPECT_THROW(KneserBounds(3, 3), std::invalid_argument);
}

TEST(MooreBoundsTest, Degrees) {
  const auto two = MooreBounds(2);
  EXPECT_EQ(Find(two, Quantity::kBeta, BoundKind::kExact)->integer(), 2);
  EXPECT_EQ(Find(two, Quantity::kZeta, BoundKind::kExact)->integer(), 2);
  const auto three = MooreBounds(3);
  EXPECT_EQ(Find(three, Quantity::kBeta, BoundKind::kExact)->integer(), 3);
  EXPECT_EQ(Find(three, Quantity::kZeta, BoundKind::kExact)->integer(), 3);
  BoundsReport seven{BoundsTarget::Moore(7), MooreBounds(7)};
  EXPECT_EQ(seven.Interval(Quantity::kBeta), std::pair(std::optional<std::int64_t>(7),
                                                       std::optional<std::int64_t>(11)));
  EXPECT_EQ(seven.Interval(Quantity::kZeta), std::pair(std::optional<std::int64_t>(6),
                                                       std::optional<std::int64_t>(7)));
  EXPECT_NO_THROW(MooreBounds(57));
  for (int k : {1, 4, 5, 8}) EXPECT_THROW(MooreBounds(k), std::invalid_argument);
}

TEST(PolarityBoundsTest, Examples) {
  BoundsReport five{BoundsTarget::Polarity(5), PolarityBounds(5)};
  using I = std::optional<std::int64_t>;
  EXPECT_EQ(five.Interval(Quantity::kBeta), std::pair(I(5), I(9)));
  EXPECT_EQ(five.Interval(Quantity::kZeta), std::pair(I(2), I(9)));
  const auto two = PolarityBounds(2);
  const auto* lower = Find(two, Quantity::kBeta, BoundKind::kLower);
  EXPECT_TRUE(lower->clamped);
  EXPECT_EQ(lower->value, Rational(-1));
  EXPECT_EQ(lower->integer(), 1);
  BoundsReport three{BoundsTarget::Polarity(3), PolarityBounds(3)};
  EXPECT_EQ(three.Interval(Quantity::kBeta), std::pair(I(1), I(5)));
  const int exact = MetricDimension(ErPolarityGraph(3).graph).upper;
  EXPECT_GE(exact, 1);
  EXPECT_LE(exact, 5);
  EXPECT_THROW(PolarityBounds(6), std::invalid_argument);
  EXPECT_THROW(PolarityBounds(1), std::invalid_argument);
}

TEST(ReportTest, PetersenIsExact) {
  const auto report = Report(BoundsTarget::Moore(3));
  using I = std::optional<std::int64_t>;
  EXPECT_EQ(report.Interval(Quantity::kBeta), std::pair(I(3), I(3)));
  EXPECT_EQ(report.Interval(Quantity::kZeta), std::pair(I(3), I(3)));
  EXPECT_TRUE(Find(report.entries, Quantity::kBeta, BoundKind::kExact, "exact metric"));
  EXPECT_TRUE(Find(report.entries, Quantity::kZeta, BoundKind::kExact, "exact localization"));
}

TEST(ReportTest, KneserFourTwelve) {
  const auto report = Report(BoundsTarget::Kneser(4, 12));
  EXPECT_EQ(report.Interval(Quantity::kBeta).first, 9);
  EXPECT_EQ(report.Interval(Quantity::kZeta).first, 6);
  const auto* gadget = Find(report.entries, Quantity::kBeta, BoundKind::kUpper, "gadget");
  ASSERT_TRUE(gadget);
  EXPECT_FALSE(gadget->has_value);
}

TEST(ReportTest, SolversLandInsideBounds) {
  for (int q : {2, 3}) {
    const auto report = Report(BoundsTarget::Polarity(q));
    const auto* beta = Find(report.entries, Quantity::kBeta, BoundKind::kExact);
    ASSERT_TRUE(beta);
    const auto [lo, hi] = report.Interval(Quantity::kBeta);
    EXPECT_EQ(lo, hi);
    EXPECT_EQ(lo, beta->integer());
  }
  for (int k : {2, 3}) EXPECT_NO_THROW(Report(BoundsTarget::Moore(k)));
  for (int n = 6; n <= 8; ++n) EXPECT_NO_THROW(Report(BoundsTarget::Kneser(2, n)));
}

TEST(ReportTest, ZetaNeverAboveBeta) {
  for (const auto& target : {BoundsTarget::Moore(2), BoundsTarget::Moore(3), BoundsTarget::Moore(7),
                             BoundsTarget::Polarity(2), BoundsTarget::Polarity(3),
                             BoundsTarget::Kneser(2, 6), BoundsTarget::Kneser(4, 20, 20)}) {
    ReportOptions options;
    options.compute_exact = target.family != BoundsTarget::Family::kMoore || target.k < 7;
    const auto report = Report(target, options);
    const auto zeta = report.Interval(Quantity::kZeta);
    const auto beta = report.Interval(Quantity::kBeta);
    if (zeta.first && beta.second) {
      EXPECT_LE(*zeta.first, *beta.second) << target.Describe();
    }
  }
}

TEST(ReportTest, ContradictionIsHardFailure) {
  BoundsReport report{BoundsTarget::Moore(3), MooreBounds(3)};
  BoundEntry bogus;
  bogus.quantity = Quantity::kBeta;
  bogus.kind = BoundKind::kExact;
  bogus.value = Rational(2);
  bogus.source = "bogus";
  report.entries.push_back(bogus);
  try {
    CrossCheck(report);
    FAIL() << "expected a contradiction";
  } catch (const std::logic_error& e) {
    EXPECT_NE(std::string(e.what()).find("Moore lower bound k"), std::string::npos);
  }
  BoundsReport zeta{BoundsTarget::Moore(3), MooreBounds(3)};
  bogus.quantity = Quantity::kZeta;
  bogus.kind = BoundKind::kLower;
  bogus.value = Rational(4);
  zeta.entries.push_back(bogus);
  EXPECT_THROW(CrossCheck(zeta), std::logic_error);
}

}  // namespace
}  // namespace locdim
