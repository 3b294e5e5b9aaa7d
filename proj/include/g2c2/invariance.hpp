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

#ifndef G2C2_INVARIANCE_HPP
#define G2C2_INVARIANCE_HPP

#include <array>
#include <string>
#include <vector>

#include "g2c2/char2.hpp"
#include "g2c2/poly_ops.hpp"

namespace g2c2 {

/// Symbolic pair (a, b) of binary forms over F2: a = sum a_i x1^(3-i) x2^i,
/// b = sum b_j x1^(6-j) x2^j.
struct SymbolicPair {
  MultiPoly a{Ring::F2}, b{Ring::F2};

  static SymbolicPair universal() {
    const MultiPoly x1 = var(Ring::F2, Var::x1), x2 = var(Ring::F2, Var::x2);
    SymbolicPair p;
    for (int i = 0; i <= 3; ++i)
      p.a += var(Ring::F2, a_var(i)) * x1.pow(3 - i) * x2.pow(i);
    for (int j = 0; j <= 6; ++j)
      p.b += var(Ring::F2, b_var(j)) * x1.pow(6 - j) * x2.pow(j);
    return p;
  }
};

/// Splits a form of the given degree in x1, x2 into its coefficients;
/// entry i multiplies x1^(degree-i) x2^i.
inline std::vector<MultiPoly> form_coefficients(const MultiPoly& form, unsigned degree) {
  std::vector<std::vector<std::pair<Monomial, mpz_class>>> parts(degree + 1);
  form.for_each_term([&](const Monomial& m, const mpz_class& c) {
    const unsigned e1 = m.exponent(Var::x1), e2 = m.exponent(Var::x2);
    if (e1 + e2 != degree) throw VerificationFailure("form is not homogeneous of degree " + std::to_string(degree));
    parts[e2].emplace_back(m.without(Var::x1).without(Var::x2), c);
  });
  std::vector<MultiPoly> out;
  out.reserve(parts.size());
  for (const auto& p : parts) out.push_back(MultiPoly::from_terms(form.ring(), p));
  return out;
}

/// One symbolic generator of SL(V) x| Sym^3(V), acting on the universal pair.
struct Generator {
  std::string name;
  SymbolicPair image;
};

/// The seven generators: x1 -> x1 + t x2, x2 -> x2 + s x1, the swap, and the
/// translations b -> b + t^2 m^2 + t a m for the four cubic monomials m.
inline std::vector<Generator> invariance_generators() {
  const SymbolicPair u = SymbolicPair::universal();
  const MultiPoly x1 = var(Ring::F2, Var::x1), x2 = var(Ring::F2, Var::x2);
  const MultiPoly t = var(Ring::F2, Var::t), s = var(Ring::F2, Var::s);
  auto linear = [&](const std::string& name, const Bindings& xs) {
    return Generator{name, {substitute(u.a, xs), substitute(u.b, xs)}};
  };
  std::vector<Generator> gens;
  gens.push_back(linear("x1->x1+t*x2", {{Var::x1, x1 + t * x2}}));
  gens.push_back(linear("x2->x2+s*x1", {{Var::x2, x2 + s * x1}}));
  gens.push_back(linear("x1<->x2", {{Var::x1, x2}, {Var::x2, x1}}));
  const std::array<std::pair<const char*, MultiPoly>, 4> cubics = {{
      {"x1^3", x1.pow(3)}, {"x1^2*x2", x1.square() * x2}, {"x1*x2^2", x1 * x2.square()}, {"x2^3", x2.pow(3)}}};
  for (const auto& [label, m] : cubics) {
    const MultiPoly v = t * m;
    gens.push_back({std::string("b->b+v^2+a*v, v=t*") + label, {u.a, u.b + v.square() + u.a * v}});
  }
  return gens;
}

/// Rewrites the a- and b-coefficients of an invariant body according to the
/// generator's image of the universal pair.
inline Bindings coefficient_bindings(const SymbolicPair& image) {
  Bindings out;
  const auto as = form_coefficients(image.a, 3);
  const auto bs = form_coefficients(image.b, 6);
  for (int i = 0; i <= 3; ++i) out.emplace(a_var(i), as[i]);
  for (int j = 0; j <= 6; ++j) out.emplace(b_var(j), bs[j]);
  return out;
}

struct InvarianceResult {
  std::string generator;
  MultiPoly residual{Ring::F2};  // zero iff the body is fixed
};

struct IsobarityResult {
  bool bi_isobaric = true;        // a-degree + 2 b-degree == 2n
  bool weighted_isobaric = true;  // sum i*deg(a_i) + sum j*deg(b_j) == 3n
  Monomial first_violation;
};

inline IsobarityResult check_isobarity(const InvariantRecord& k) {
  IsobarityResult r;
  bool first = true;
  for (const auto& m : k.body.monomials()) {
    unsigned da = 0, db = 0, w = 0;
    for (int i = 0; i <= 3; ++i) {
      da += m.exponent(a_var(i));
      w += i * m.exponent(a_var(i));
    }
    for (int j = 0; j <= 6; ++j) {
      db += m.exponent(b_var(j));
      w += j * m.exponent(b_var(j));
    }
    const bool bi = da + 2 * db == 2 * k.weight, wt = w == 3 * k.weight;
    r.bi_isobaric &= bi;
    r.weighted_isobaric &= wt;
    if (first && !(bi && wt)) {
      r.first_violation = m;
      first = false;
    }
  }
  return r;
}

/// Applies every generator to the body and returns the differences.
inline std::vector<InvarianceResult> check_invariance(const InvariantRecord& k,
                                                      const std::vector<Generator>& gens) {
  std::vector<InvarianceResult> out;
  out.reserve(gens.size());
  for (const auto& g : gens)
    out.push_back({g.name, substitute(k.body, coefficient_bindings(g.image)) + k.body});
  return out;
}

inline std::vector<InvarianceResult> check_invariance(const InvariantRecord& k) {
  return check_invariance(k, invariance_generators());
}

}  // namespace g2c2

#endif  // G2C2_INVARIANCE_HPP
