// Copyright 2026 The g2c2 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef G2C2_RELATIONS_HPP
#define G2C2_RELATIONS_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "g2c2/char2.hpp"

namespace g2c2 {

struct RelationCheck {
  std::string id;
  std::string statement;
  MultiPoly residual{Ring::F2};
  bool ok() const { return residual.is_zero(); }
};

/// Exponent vector (e, f, g, h) of K1^e K3^f K8^g K10^h.
using GeneratorMonomial = std::array<unsigned, 4>;

inline constexpr std::array<unsigned, 4> kGeneratorWeights = {1, 3, 8, 10};

/// All monomials in K1, K3, K8, K10 of weight at most w.
inline std::vector<GeneratorMonomial> generator_monomials(unsigned w) {
  std::vector<GeneratorMonomial> out;
  for (unsigned h = 0; 10 * h <= w; ++h)
    for (unsigned g = 0; 10 * h + 8 * g <= w; ++g)
      for (unsigned f = 0; 10 * h + 8 * g + 3 * f <= w; ++f)
        for (unsigned e = 0; 10 * h + 8 * g + 3 * f + e <= w; ++e) out.push_back({e, f, g, h});
  return out;
}

/// Rank over F2 of a list of polynomials, by reduction against pivots keyed
/// on leading monomials (F2 addition is symmetric difference).
inline std::size_t f2_rank(const std::vector<MultiPoly>& polys) {
  std::map<Monomial, MultiPoly> pivots;
  for (MultiPoly p : polys) {
    while (!p.is_zero()) {
      auto it = pivots.find(p.leading_monomial());
      if (it == pivots.end()) {
        pivots.emplace(p.leading_monomial(), std::move(p));
        break;
      }
      p += it->second;
    }
  }
  return pivots.size();
}

struct IndependenceResult {
  unsigned weight_bound = 0;
  std::size_t monomials = 0;
  std::size_t rank = 0;
  bool ok() const { return rank == monomials; }
};

inline IndependenceResult check_independence(const KTable& k, unsigned w) {
  const std::array<const MultiPoly*, 4> gens = {&k.K1.body, &k.K3.body, &k.K8.body, &k.K10.body};
  std::array<std::vector<MultiPoly>, 4> powers;
  auto power = [&](int i, unsigned e) -> const MultiPoly& {
    auto& v = powers[i];
    if (v.empty()) v.push_back(MultiPoly::one(Ring::F2));
    while (v.size() <= e) v.push_back(v.back() * *gens[i]);
    return v[e];
  };
  const auto mons = generator_monomials(w);
  std::vector<MultiPoly> expanded;
  expanded.reserve(mons.size());
  for (const auto& m : mons) {
    MultiPoly p = MultiPoly::one(Ring::F2);
    for (int i = 0; i < 4; ++i)
      if (m[i]) p = p * power(i, m[i]);
    expanded.push_back(std::move(p));
  }
  return {w, mons.size(), f2_rank(expanded)};
}

struct RelationsReport {
  std::vector<RelationCheck> identities;
  IndependenceResult independence;
  bool ok() const {
    for (const auto& r : identities)
      if (!r.ok()) return false;
    return independence.ok();
  }
};

/// Checks K15 = K3 K12 + K10 K1^5 (against the stored closed formula), the
/// weight-52 relation K10^4 K12 = K8 K10^4 K1^4 + (K3 K10)^4 + (K3 K10)^3 K1^3 K10,
/// and linear independence of the K1, K3, K8, K10 monomials of weight <= w.
inline RelationsReport verify_relations(const KTable& k, unsigned w = 20) {
  RelationsReport rep;
  const MultiPoly &k1 = k.K1.body, &k3 = k.K3.body, &k8 = k.K8.body, &k10 = k.K10.body,
                  &k12 = k.K12.body, &k15 = k.K15.body;
  rep.identities.push_back(
      {"K15", "K15 = K3*K12 + K10*K1^5", k15 + k3 * k12 + k10 * k1.pow(5)});
  // Squaring is linear over F2, so the fourth powers are cheap; the products
  // are grouped so that the large factor K10^4 is multiplied only once per term.
  const MultiPoly k10_4 = k10.square().square();
  const MultiPoly k3k10 = k3 * k10;
  const MultiPoly lhs = k10_4 * k12;
  const MultiPoly rhs = k10_4 * (k8 * k1.pow(4)) + k3k10.square().square() +
                        k10_4 * (k3.pow(3) * k1.pow(3));
  rep.identities.push_back(
      {"weight52", "K10^4*K12 = K8*K10^4*K1^4 + (K3*K10)^4 + (K3*K10)^3*K1^3*K10", lhs + rhs});
  rep.independence = check_independence(k, w);
  return rep;
}

}  // namespace g2c2

#endif  // G2C2_RELATIONS_HPP
