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

#ifndef G2C2_CHAR2_HPP
#define G2C2_CHAR2_HPP

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "g2c2/igusa.hpp"
#include "g2c2/poly_ops.hpp"

namespace g2c2 {

/// Lift of y^2 + a y = b to the sextic a^2 + 4b:
/// c_i -> 4 b_i + sum_{r+s=i} a_r a_s (ordered pairs, so mixed products get 2).
inline Bindings substitution_eq6() {
  Bindings out;
  for (int i = 0; i <= 6; ++i) {
    MultiPoly ci = mpz_class(4) * var(Ring::Integers, b_var(i));
    for (int r = 0; r <= 3; ++r) {
      const int s = i - r;
      if (s < 0 || s > 3) continue;
      ci += var(Ring::Integers, a_var(r)) * var(Ring::Integers, a_var(s));
    }
    out.emplace(c_var(i), std::move(ci));
  }
  return out;
}

struct Reduction {
  MultiPoly value{Ring::F2};
  long two_exponent = 0;  // total power of 2 removed, including the scale
};

/// Substitutes the lift into j, removes the exact power of 2 and reduces mod 2.
/// Only the 2-adic part of the scale matters; odd factors reduce to 1.
inline Reduction reduce_invariant_detailed(const ScaledPoly& j) {
  const MultiPoly lifted = substitute(j.body, substitution_eq6());
  if (lifted.is_zero()) throw ZeroAfterSubstitution("invariant vanishes after the lift");
  const unsigned content = content_2adic(lifted);
  return {divide_pow2_and_reduce(lifted), two_adic_valuation(j.scale) + static_cast<long>(content)};
}

inline MultiPoly reduce_invariant(const ScaledInvariant& j) {
  return reduce_invariant_detailed(j.value).value;
}

/// A named characteristic-2 invariant of weight n in a0..a3, b0..b6.
struct InvariantRecord {
  std::string name;
  unsigned weight = 0;
  MultiPoly body{Ring::F2};
};

/// Integer combination x J2^3 + y J2 J4 + z J6 whose reduction is K3^2.
struct J6Combination {
  int x = 0, y = 0, z = 1;
};

/// Integer combination x J2^2 + y J4 whose reduction is K4 = K1 K3.
/// I4 = J2^2 - 24 J4 is (1, -24).
struct K4Combination {
  int x = 1, y = -24;
};

struct KTable {
  InvariantRecord K1, K2, K3, K4, K8, K10, K12, K15;
  K4Combination k4_combination;
  J6Combination j6_combination;
  MultiPoly j6_reduction{Ring::F2};
  std::map<std::string, long> two_exponents;

  std::vector<const InvariantRecord*> all() const {
    return {&K1, &K2, &K3, &K4, &K8, &K10, &K12, &K15};
  }
  const InvariantRecord& operator[](const std::string& name) const {
    for (const auto* r : all())
      if (r->name == name) return *r;
    throw std::out_of_range("unknown invariant " + name);
  }
};

inline MultiPoly k1_poly() {
  return var(Ring::F2, Var::a0) * var(Ring::F2, Var::a3) +
         var(Ring::F2, Var::a1) * var(Ring::F2, Var::a2);
}

/// K12 = K8 K1^4 + K3^4 + K1^3 K3^3
inline MultiPoly k12_formula(const MultiPoly& k1, const MultiPoly& k3, const MultiPoly& k8) {
  return k8 * k1.pow(4) + k3.pow(4) + k1.pow(3) * k3.pow(3);
}

/// K15 = K1^3 K3^4 + K1^5 K10 + K1^4 K3 K8 + K3^5
inline MultiPoly k15_formula(const MultiPoly& k1, const MultiPoly& k3, const MultiPoly& k8,
                             const MultiPoly& k10) {
  return k1.pow(3) * k3.pow(4) + k1.pow(5) * k10 + k1.pow(4) * k3 * k8 + k3.pow(5);
}

/// Finds how J6 yields K3^2: directly if possible, otherwise by the smallest
/// integer combination with J2^3 and J2 J4 that does. Throws if none exists.
inline J6Combination find_j6_combination(const IgusaTable& igusa, const MultiPoly& k3_squared,
                                         MultiPoly* reduction = nullptr) {
  const ScaledPoly j2cubed = igusa.J2.value.pow(3);
  const ScaledPoly j2j4 = igusa.J2.value * igusa.J4.value;
  auto attempt = [&](int x, int y, int z) -> bool {
    const ScaledPoly combo = mpq_class(x) * j2cubed + mpq_class(y) * j2j4 + mpq_class(z) * igusa.J6.value;
    if (combo.is_zero()) return false;
    const MultiPoly r = reduce_invariant_detailed(combo).value;
    if (r != k3_squared) return false;
    if (reduction) *reduction = r;
    return true;
  };
  if (attempt(0, 0, 1)) return {0, 0, 1};
  for (int bound = 1; bound <= 8; ++bound)
    for (int z = 1; z <= bound; ++z)
      for (int x = -bound; x <= bound; ++x)
        for (int y = -bound; y <= bound; ++y)
          if (std::max({std::abs(x), std::abs(y), z}) == bound && attempt(x, y, z)) return {x, y, z};
  throw VerificationFailure("no small combination of J2^3, J2 J4, J6 reduces to K3^2");
}

inline bool involves_b(const MultiPoly& p) {
  for (const auto& m : p.monomials())
    for (int j = 0; j <= 6; ++j)
      if (m.exponent(b_var(j)) > 0) return true;
  return false;
}

/// Picks the degree-4 source of K4. I4 = J2^2 - 24 J4 is tried first; its
/// lift is dominated 2-adically by J2^2 and reduces to K1^4, which carries no
/// new information. The search then walks small combinations x J2^2 + y J4
/// and takes the first whose reduction is divisible by K1 with a quotient
/// that involves the b-coefficients.
inline K4Combination find_k4_combination(const IgusaTable& igusa, MultiPoly* reduction = nullptr) {
  const ScaledPoly j2sq = igusa.J2.value.pow(2);
  const MultiPoly k1 = k1_poly();
  auto attempt = [&](int x, int y) -> bool {
    const ScaledPoly combo = mpq_class(x) * j2sq + mpq_class(y) * igusa.J4.value;
    if (combo.is_zero()) return false;
    const MultiPoly r = reduce_invariant_detailed(combo).value;
    try {
      if (!involves_b(exact_divide(r, k1))) return false;
    } catch (const NotDivisible&) {
      return false;
    }
    if (reduction) *reduction = r;
    return true;
  };
  if (attempt(1, -24)) return {1, -24};
  // Within each bound, smaller |x| first so that J4 alone wins over J4 +- J2^2.
  for (int bound = 1; bound <= 8; ++bound)
    for (int y = 1; y <= bound; ++y)
      for (int ax = 0; ax <= bound; ++ax)
        for (int x : {ax, -ax}) {
          if (std::max(ax, y) != bound) continue;
          if (attempt(x, y)) return {x, y};
          if (ax == 0) break;
        }
  throw VerificationFailure("no small combination of J2^2 and J4 yields K4");
}

/// Runs the lift/divide/reduce pipeline on the Igusa table and assembles the
/// characteristic-2 invariants. K3 = K4 / K1 must be exact.
inline KTable build_k_table(const IgusaTable& igusa) {
  KTable t;
  t.K1 = {"K1", 1, k1_poly()};
  const Reduction r2 = reduce_invariant_detailed(igusa.J2.value);
  MultiPoly k4(Ring::F2);
  t.k4_combination = find_k4_combination(igusa, &k4);
  const Reduction r8 = reduce_invariant_detailed(igusa.J8.value);
  const Reduction r10 = reduce_invariant_detailed(igusa.J10.value);
  t.K2 = {"K2", 2, r2.value};
  t.K4 = {"K4", 4, k4};
  t.K3 = {"K3", 3, exact_divide(k4, t.K1.body)};
  t.K8 = {"K8", 8, r8.value};
  t.K10 = {"K10", 10, r10.value};
  t.K12 = {"K12", 12, k12_formula(t.K1.body, t.K3.body, t.K8.body)};
  t.K15 = {"K15", 15, k15_formula(t.K1.body, t.K3.body, t.K8.body, t.K10.body)};
  t.two_exponents = {{"J2", r2.two_exponent},
                     {"J8", r8.two_exponent},
                     {"J10", r10.two_exponent}};
  t.j6_combination = find_j6_combination(igusa, t.K3.body.square(), &t.j6_reduction);
  return t;
}

/// The weight-(2,0) covariant (a0a2+a1^2) x1^2 + (a0a3+a1a2) x1x2 + (a1a3+a2^2) x2^2
/// of a cubic with coefficients a[0..3] (polynomials over F2).
inline MultiPoly covariant_c20(const std::array<MultiPoly, 4>& a) {
  const MultiPoly x1 = var(Ring::F2, Var::x1), x2 = var(Ring::F2, Var::x2);
  return (a[0] * a[2] + a[1].square()) * x1.square() + (a[0] * a[3] + a[1] * a[2]) * x1 * x2 +
         (a[1] * a[3] + a[2].square()) * x2.square();
}

inline std::array<MultiPoly, 4> universal_cubic_coefficients() {
  return {var(Ring::F2, Var::a0), var(Ring::F2, Var::a1), var(Ring::F2, Var::a2),
          var(Ring::F2, Var::a3)};
}

}  // namespace g2c2

#endif  // G2C2_CHAR2_HPP
