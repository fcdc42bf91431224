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

// GF(q) arithmetic, points of PG(2,q), and the orthogonal-polarity graphs
// ER(q): vertices are projective points, u ~ v iff u.v = 0 and u != v.

#ifndef LOCDIM_FINITE_FIELD_HPP_
#define LOCDIM_FINITE_FIELD_HPP_

#include <array>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "locdim/graph.hpp"

namespace locdim {

struct FieldElement {
  int value = 0;
  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

inline bool IsPrime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Returns p when q = p^e for a prime p and e >= 1, otherwise 0.
inline int PrimePowerBase(int q) {
  if (q < 2) return 0;
  int p = 2;
  while (q % p != 0) ++p;
  int rest = q;
  while (rest % p == 0) rest /= p;
  return rest == 1 ? p : 0;
}

// Table-driven field of order q. Elements are 0..q-1; for q = p^e the base-p
// digits of an element are the coefficients (constant term first) of its
// residue polynomial modulo a fixed irreducible of degree e.
class GaloisField {
 public:
  static constexpr int kMaxPrime = 1009;

  explicit GaloisField(int q) : q_(q) {
    p_ = PrimePowerBase(q);
    if (p_ == 0) {
      throw std::invalid_argument("GF(" + std::to_string(q) + "): not a prime power");
    }
    if (p_ == q) {
      if (q > kMaxPrime) {
        throw std::invalid_argument("GF(" + std::to_string(q) + "): prime too large");
      }
      BuildPrime();
      return;
    }
    // Monic irreducibles, coefficients from the constant term up.
    static const std::map<int, std::vector<int>> kIrreducible = {
        {4, {1, 1, 1}},        // x^2 + x + 1 over GF(2)
        {8, {1, 1, 0, 1}},     // x^3 + x + 1 over GF(2)
        {9, {1, 0, 1}},        // x^2 + 1 over GF(3)
        {16, {1, 1, 0, 0, 1}}  // x^4 + x + 1 over GF(2)
    };
    const auto it = kIrreducible.find(q);
    if (it == kIrreducible.end()) {
      throw std::invalid_argument("GF(" + std::to_string(q) +
                                  "): unsupported prime power (supported: primes, 4, 8, 9, 16)");
    }
    BuildExtension(it->second);
  }

  int order() const { return q_; }
  int characteristic() const { return p_; }

  FieldElement Zero() const { return {0}; }
  FieldElement One() const { return {1}; }
  FieldElement Add(FieldElement a, FieldElement b) const { return {add_[a.value * q_ + b.value]}; }
  FieldElement Mul(FieldElement a, FieldElement b) const { return {mul_[a.value * q_ + b.value]}; }
  FieldElement Neg(FieldElement a) const { return {neg_[a.value]}; }
  FieldElement Sub(FieldElement a, FieldElement b) const { return Add(a, Neg(b)); }
  FieldElement Inv(FieldElement a) const {
    if (a.value == 0) throw std::domain_error("GaloisField: inverse of zero");
    return {inv_[a.value]};
  }

 private:
  void BuildPrime() {
    Allocate();
    for (int a = 0; a < q_; ++a) {
      for (int b = 0; b < q_; ++b) {
        add_[a * q_ + b] = (a + b) % q_;
        mul_[a * q_ + b] = (a * b) % q_;
      }
    }
    FinishTables();
  }

  void BuildExtension(const std::vector<int>& modulus) {
    Allocate();
    const int degree = static_cast<int>(modulus.size()) - 1;
    auto digits = [&](int a) {
      std::vector<int> d(degree);
      for (int i = 0; i < degree; ++i, a /= p_) d[i] = a % p_;
      return d;
    };
    auto encode = [&](const std::vector<int>& d) {
      int a = 0;
      for (int i = degree - 1; i >= 0; --i) a = a * p_ + d[i];
      return a;
    };
    for (int a = 0; a < q_; ++a) {
      const auto da = digits(a);
      for (int b = 0; b < q_; ++b) {
        const auto db = digits(b);
        std::vector<int> sum(degree);
        for (int i = 0; i < degree; ++i) sum[i] = (da[i] + db[i]) % p_;
        add_[a * q_ + b] = encode(sum);

        std::vector<int> prod(2 * degree - 1, 0);
        for (int i = 0; i < degree; ++i) {
          for (int j = 0; j < degree; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        }
        // Reduce from the top using the monic modulus.
        for (int t = 2 * degree - 2; t >= degree; --t) {
          const int c = prod[t];
          if (c == 0) continue;
          for (int i = 0; i <= degree; ++i) {
            prod[t - degree + i] = ((prod[t - degree + i] - c * modulus[i]) % p_ + p_) % p_;
          }
        }
        prod.resize(degree);
        mul_[a * q_ + b] = encode(prod);
      }
    }
    FinishTables();
  }

  void Allocate() {
    add_.assign(q_ * q_, 0);
    mul_.assign(q_ * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);
  }

  void FinishTables() {
    for (int a = 0; a < q_; ++a) {
      for (int b = 0; b < q_; ++b) {
        if (add_[a * q_ + b] == 0) neg_[a] = b;
        if (mul_[a * q_ + b] == 1) inv_[a] = b;
      }
    }
  }

  int q_;
  int p_;
  std::vector<int> add_, mul_, neg_, inv_;
};

// A point of PG(2,q): homogeneous coordinates scaled so the first nonzero
// coordinate is 1.
struct ProjectivePoint {
  std::array<FieldElement, 3> coords;

  static ProjectivePoint Normalized(const GaloisField& f, std::array<FieldElement, 3> c) {
    int lead = 0;
    while (lead < 3 && c[lead].value == 0) ++lead;
    if (lead == 3) throw std::invalid_argument("ProjectivePoint: zero vector");
    const FieldElement scale = f.Inv(c[lead]);
    for (auto& x : c) x = f.Mul(x, scale);
    return {c};
  }

  std::string ToString() const {
    return std::to_string(coords[0].value) + ":" + std::to_string(coords[1].value) + ":" +
           std::to_string(coords[2].value);
  }

  friend auto operator<=>(const ProjectivePoint&, const ProjectivePoint&) = default;
};

inline FieldElement Dot(const GaloisField& f, const ProjectivePoint& a, const ProjectivePoint& b) {
  FieldElement sum = f.Zero();
  for (int i = 0; i < 3; ++i) sum = f.Add(sum, f.Mul(a.coords[i], b.coords[i]));
  return sum;
}

// All points of PG(2,q) in lexicographic order of normalized coordinates:
// (0,0,1), then (0,1,b), then (1,a,b).
inline std::vector<ProjectivePoint> ProjectivePlanePoints(const GaloisField& f) {
  const int q = f.order();
  std::vector<ProjectivePoint> points;
  points.reserve(q * q + q + 1);
  points.push_back({{FieldElement{0}, FieldElement{0}, FieldElement{1}}});
  for (int b = 0; b < q; ++b) points.push_back({{FieldElement{0}, FieldElement{1}, FieldElement{b}}});
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      points.push_back({{FieldElement{1}, FieldElement{a}, FieldElement{b}}});
    }
  }
  return points;
}

struct PolarityGraph {
  Graph graph;
  int q = 0;
  std::vector<int> absolute;  // sorted vertices with u.u = 0
  std::vector<ProjectivePoint> points;
};

inline PolarityGraph ErPolarityGraph(int q) {
  const GaloisField field(q);
  if (q > 37) throw std::invalid_argument("ER(q): q > 37 exceeds the supported size");
  PolarityGraph result;
  result.q = q;
  result.points = ProjectivePlanePoints(field);
  const int n = static_cast<int>(result.points.size());
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int u = 0; u < n; ++u) {
    labels.push_back(result.points[u].ToString());
    if (Dot(field, result.points[u], result.points[u]).value == 0) result.absolute.push_back(u);
    for (int v = u + 1; v < n; ++v) {
      if (Dot(field, result.points[u], result.points[v]).value == 0) edges.emplace_back(u, v);
    }
  }
  result.graph = Graph::FromEdges(n, edges, std::move(labels));
  return result;
}

}  // namespace locdim

#endif  // LOCDIM_FINITE_FIELD_HPP_
