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

#include "locdim/finite_field.hpp"

#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "locdim/graph.hpp"

namespace locdim {
namespace {

const std::vector<int> kSupported = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16};

// Polynomial product over GF(p) reduced by a monic modulus, digits in base p.
int PolyMul(int a, int b, int p, const std::vector<int>& modulus) {
  const int e = static_cast<int>(modulus.size()) - 1;
  std::vector<int> x(e), y(e), prod(2 * e, 0);
  for (int i = 0; i < e; ++i, a /= p, b /= p) {
    x[i] = a % p;
    y[i] = b % p;
  }
  for (int i = 0; i < e; ++i) {
    for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  }
  for (int d = 2 * e - 1; d >= e; --d) {
    const int c = prod[d];
    for (int i = 0; i <= e; ++i) {
      prod[d - e + i] = ((prod[d - e + i] - c * modulus[i]) % p + p) % p;
    }
  }
  int out = 0;
  for (int i = e - 1; i >= 0; --i) out = out * p + prod[i];
  return out;
}

TEST(FiniteFieldTest, PrimeFieldTwo) {
  const GaloisField f(2);
  EXPECT_EQ(f.Add(f.One(), f.One()).value, 0);
  EXPECT_EQ(f.characteristic(), 2);
}

TEST(FiniteFieldTest, RejectsNonPrimePowers) {
  for (int q : {0, 1, 6, 10, 12, 15}) EXPECT_THROW(GaloisField{q}, std::invalid_argument) << q;
  EXPECT_THROW(GaloisField{25}, std::invalid_argument);
  EXPECT_THROW(GaloisField{32}, std::invalid_argument);
}

TEST(FiniteFieldTest, FieldAxiomsExhaustive) {
  for (int q : kSupported) {
    SCOPED_TRACE(q);
    const GaloisField f(q);
    ASSERT_EQ(f.order(), q);
    for (int a = 0; a < q; ++a) {
      const FieldElement x{a};
      ASSERT_EQ(f.Add(x, f.Zero()).value, a);
      ASSERT_EQ(f.Mul(x, f.One()).value, a);
      ASSERT_EQ(f.Add(x, f.Neg(x)).value, 0);
      if (a != 0) {
        ASSERT_EQ(f.Mul(x, f.Inv(x)).value, 1);
      }
      for (int b = 0; b < q; ++b) {
        const FieldElement y{b};
        ASSERT_EQ(f.Add(x, y).value, f.Add(y, x).value);
        ASSERT_EQ(f.Mul(x, y).value, f.Mul(y, x).value);
        ASSERT_EQ(f.Sub(f.Add(x, y), y).value, a);
        if (a != 0 && b != 0) {
          ASSERT_NE(f.Mul(x, y).value, 0);
        }
        for (int c = 0; c < q; ++c) {
          const FieldElement z{c};
          ASSERT_EQ(f.Add(f.Add(x, y), z).value, f.Add(x, f.Add(y, z)).value);
          ASSERT_EQ(f.Mul(f.Mul(x, y), z).value, f.Mul(x, f.Mul(y, z)).value);
          ASSERT_EQ(f.Mul(x, f.Add(y, z)).value, f.Add(f.Mul(x, y), f.Mul(x, z)).value);
        }
      }
    }
  }
}

TEST(FiniteFieldTest, ExtensionFieldsMatchPolynomialOracle) {
  const std::vector<std::pair<int, std::vector<int>>> cases = {
      {4, {1, 1, 1}}, {8, {1, 1, 0, 1}}, {9, {1, 0, 1}}, {16, {1, 1, 0, 0, 1}}};
  for (const auto& [q, modulus] : cases) {
    const GaloisField f(q);
    const int p = f.characteristic();
    for (int a = 0; a < q; ++a) {
      for (int b = 0; b < q; ++b) {
        ASSERT_EQ(f.Mul({a}, {b}).value, PolyMul(a, b, p, modulus)) << q << " " << a << " " << b;
        int sum = 0;
        for (int x = a, y = b, w = 1; x > 0 || y > 0; x /= p, y /= p, w *= p) {
          sum += ((x % p + y % p) % p) * w;
        }
        ASSERT_EQ(f.Add({a}, {b}).value, sum);
      }
    }
  }
}

TEST(FiniteFieldTest, FourElementFieldInverse) {
  const GaloisField f(4);
  // x is digit 2, x + 1 is digit 3.
  EXPECT_EQ(f.Mul({2}, {3}).value, 1);
}

TEST(FiniteFieldTest, PointNormalization) {
  const GaloisField f(5);
  const auto p = ProjectivePoint::Normalized(f, {FieldElement{0}, FieldElement{3}, FieldElement{4}});
  EXPECT_EQ(p.coords[1].value, 1);
  EXPECT_EQ(ProjectivePoint::Normalized(f, p.coords), p);
  EXPECT_THROW(ProjectivePoint::Normalized(f, {FieldElement{0}, FieldElement{0}, FieldElement{0}}),
               std::invalid_argument);
  const auto points = ProjectivePlanePoints(f);
  EXPECT_EQ(points.size(), 31u);
  EXPECT_EQ(std::set<ProjectivePoint>(points.begin(), points.end()).size(), 31u);
  EXPECT_TRUE(std::is_sorted(points.begin(), points.end()));
}

TEST(PolarityGraphTest, SmallExamples) {
  const auto er2 = ErPolarityGraph(2);
  EXPECT_EQ(er2.graph.num_vertices(), 7);
  EXPECT_EQ(er2.graph.num_edges(), 9);
  EXPECT_EQ(er2.absolute.size(), 3u);
  for (int v : er2.absolute) EXPECT_EQ(er2.graph.degree(v), 2);
  const auto er3 = ErPolarityGraph(3);
  EXPECT_EQ(er3.graph.num_vertices(), 13);
  EXPECT_EQ(er3.graph.num_edges(), 24);
  EXPECT_EQ(er3.absolute.size(), 4u);
  EXPECT_FALSE(HasFourCycle(ErPolarityGraph(4).graph));
  EXPECT_THROW(ErPolarityGraph(6), std::invalid_argument);
}

TEST(PolarityGraphTest, InvariantsForAllSupportedOrders) {
  for (int q : kSupported) {
    SCOPED_TRACE(q);
    const auto pg = ErPolarityGraph(q);
    const Graph& g = pg.graph;
    const int n = q * q + q + 1;
    ASSERT_EQ(g.num_vertices(), n);
    EXPECT_EQ(g.num_edges(), q * (q + 1) * (q + 1) / 2);
    EXPECT_EQ(static_cast<int>(pg.absolute.size()), q + 1);
    const std::set<int> absolute(pg.absolute.begin(), pg.absolute.end());
    const GaloisField f(q);
    for (int u = 0; u < n; ++u) {
      EXPECT_EQ(g.degree(u), absolute.count(u) ? q : q + 1);
      EXPECT_EQ(absolute.count(u) > 0, Dot(f, pg.points[u], pg.points[u]).value == 0);
      for (int v = 0; v < n; ++v) {
        ASSERT_EQ(g.adjacent(u, v), g.adjacent(v, u));
        if (u != v) {
          ASSERT_EQ(g.adjacent(u, v), Dot(f, pg.points[u], pg.points[v]).value == 0);
        }
      }
    }
    EXPECT_FALSE(HasFourCycle(g));
    EXPECT_EQ(g.Diameter(), 2);
  }
}

}  // namespace
}  // namespace locdim
