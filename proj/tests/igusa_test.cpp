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

#include <gtest/gtest.h>

#include <random>

#include "g2c2/igusa.hpp"
#include "g2c2/invariance.hpp"
#include "g2c2/poly_ops.hpp"

namespace g2c2 {
namespace {

const IgusaTable& table() {
  static const IgusaTable t = build_igusa_invariants();
  return t;
}

MultiPoly P(const char* s) { return parse_poly(s, Ring::Integers); }

std::map<Var, mpq_class> sextic_point(const std::array<long, 7>& c) {
  std::map<Var, mpq_class> out;
  for (int i = 0; i <= 6; ++i) out[c_var(i)] = c[i];
  return out;
}

TEST(Transvectant, ZerothIsProduct) {
  const BinaryForm f(2, P("x1^2 + 3*x1*x2")), g(3, P("x2^3 - x1*x2^2"));
  const BinaryForm h = transvectant(f, g, 0);
  EXPECT_EQ(h.degree(), 5u);
  EXPECT_TRUE(h.value() == ScaledPoly(f.value().body * g.value().body));
}

TEST(Transvectant, OddSelfTransvectantVanishes) {
  const BinaryForm f = universal_sextic();
  for (unsigned k : {1u, 3u, 5u}) EXPECT_TRUE(transvectant(f, f, k).value().is_zero()) << k;
}

TEST(Transvectant, SecondOfSquares) {
  const BinaryForm h = transvectant(BinaryForm(2, P("x1^2")), BinaryForm(2, P("x2^2")), 2);
  EXPECT_EQ(h.degree(), 0u);
  EXPECT_TRUE(h.value() == ScaledPoly(P("1")));
}

TEST(Transvectant, RejectsInhomogeneousForm) {
  EXPECT_THROW(BinaryForm(2, P("x1^2 + x2")), std::invalid_argument);
}

TEST(Igusa, J2MatchesDisplayedFormula) {
  const ScaledPoly& j2 = table().J2.value;
  EXPECT_EQ(j2.scale, mpq_class(1, 4));
  EXPECT_EQ(j2.body, P("-120*c0*c6 + 20*c1*c5 - 8*c2*c4 + 3*c3^2"));
  EXPECT_EQ(format_scale(j2.scale), "+1/1·2^-2");
}

TEST(Igusa, J2AtSumOfSixthPowers) {
  EXPECT_EQ(table().J2.value.evaluate_at(sextic_point({1, 0, 0, 0, 0, 0, 1})), -30);
}

TEST(Igusa, J4LeadingCoefficients) {
  const ScaledPoly& j4 = table().J4.value;
  const Monomial m1 = Monomial::of(Var::c0, 2) * Monomial::of(Var::c6, 2);
  const Monomial m2 = Monomial::of(Var::c0) * Monomial::of(Var::c1) * Monomial::of(Var::c5) * Monomial::of(Var::c6);
  EXPECT_EQ(j4.coefficient(m1), mpq_class(165, 8));
  EXPECT_EQ(j4.coefficient(m2), mpq_class(-55, 8));
  EXPECT_EQ(format_scale(j4.scale), "+1/1·2^-7");
  // c0^2 c6^2 is the leading monomial of J4 in the c-order.
  EXPECT_EQ(j4.body.leading_monomial(), m1);
}

TEST(Igusa, QuadraticRelation) {
  const IgusaTable& t = table();
  const ScaledPoly r = t.J4.value.pow(2) - t.J2.value * t.J6.value + mpq_class(4) * t.J8.value;
  EXPECT_TRUE(r.is_zero());
}

TEST(Igusa, I4Definition) {
  const IgusaTable& t = table();
  EXPECT_TRUE(t.I4.value == t.J2.value.pow(2) - mpq_class(24) * t.J4.value);
}

TEST(Igusa, Isobarity) {
  for (const ScaledInvariant* j : table().all()) {
    for (const Monomial& m : j->value.body.monomials()) {
      unsigned deg = 0, weight = 0;
      for (int i = 0; i <= 6; ++i) {
        deg += m.exponent(c_var(i));
        weight += i * m.exponent(c_var(i));
      }
      ASSERT_EQ(deg, m.degree()) << j->name;
      ASSERT_EQ(deg, j->degree) << j->name << " " << m.to_string();
      ASSERT_EQ(weight, 3 * j->degree) << j->name << " " << m.to_string();
    }
  }
}

TEST(Igusa, J10VanishesOnRepeatedRoot) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 5; ++trial) {
    RationalSextic s = RationalSextic::random(rng);
    s.roots[4] = s.roots[1];
    EXPECT_EQ(table().J10.value.evaluate_at(s.as_binding()), 0);
    EXPECT_EQ(root_difference_oracle("I10", s.roots, s.leading), 0);
  }
}

TEST(Igusa, OracleI2IsEightJ2) {
  std::mt19937_64 rng(22);
  const RationalSextic first = RationalSextic::random(rng);
  const mpq_class ratio =
      root_difference_oracle("I2", first.roots, first.leading) / table().J2.value.evaluate_at(first.as_binding());
  EXPECT_EQ(ratio, 8);
  for (int trial = 0; trial < 10; ++trial) {
    const RationalSextic s = RationalSextic::random(rng);
    EXPECT_EQ(root_difference_oracle("I2", s.roots, s.leading), ratio * table().J2.value.evaluate_at(s.as_binding()));
  }
}

TEST(Igusa, AgreesWithOracleOnFreshSextics) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 5; ++trial) {
    const RationalSextic s = RationalSextic::random(rng);
    const OracleJ o = OracleJ::at(s);
    const auto point = s.as_binding();
    EXPECT_EQ(table().J4.value.evaluate_at(point), o.j4);
    EXPECT_EQ(table().J6.value.evaluate_at(point), o.j6);
    EXPECT_EQ(table().J10.value.evaluate_at(point), o.j10);
  }
}

TEST(Igusa, J6DeterminedByThreeSextics) {
  const TransvectantBasis basis = TransvectantBasis::build();
  const auto d6 = basis.degree6();
  std::mt19937_64 rng(24);
  std::vector<std::vector<mpq_class>> rows;
  std::vector<mpq_class> rhs;
  for (int k = 0; k < 3; ++k) {
    const RationalSextic s = RationalSextic::random(rng);
    std::vector<mpq_class> row;
    for (const auto& b : d6) row.push_back(b.evaluate_at(s.as_binding()));
    rows.push_back(row);
    rhs.push_back(OracleJ::at(s).j6);
  }
  const auto mix = detail::solve_exact(rows, rhs, 3);
  ASSERT_TRUE(mix.has_value());
  EXPECT_TRUE(detail::combination(d6, *mix) == table().J6.value);
}

TEST(Igusa, InconsistentTargetIsReported) {
  const TransvectantBasis basis = TransvectantBasis::build();
  std::mt19937_64 rng(25);
  // A degree-6 quantity cannot be a combination of degree-4 invariants.
  EXPECT_THROW(detail::calibrate_by_oracle(
                   basis.degree4(), [](const RationalSextic& s) { return OracleJ::at(s).j6; }, rng, "bad"),
               CalibrationFailure);
}

// Res(f, f') / c6 over the integers, for f = sum c_i x^i.
mpq_class resultant_over_lead(const std::array<long, 7>& c) {
  std::vector<MultiPoly> f, df;
  for (int i = 0; i <= 6; ++i) f.push_back(MultiPoly::constant(Ring::Integers, c[i]));
  for (int i = 1; i <= 6; ++i) df.push_back(MultiPoly::constant(Ring::Integers, i * c[i]));
  const MultiPoly r = sylvester_resultant(f, df);
  mpq_class q(r.is_zero() ? mpz_class(0) : r.coef(0), c[6]);
  q.canonicalize();
  return q;
}

TEST(Igusa, J10IsDiscriminantMultiple) {
  std::mt19937_64 rng(26);
  std::uniform_int_distribution<long> coef(-6, 6);
  std::optional<mpq_class> kappa;
  int used = 0;
  while (used < 6) {
    std::array<long, 7> c;
    for (auto& x : c) x = coef(rng);
    if (c[6] == 0) continue;
    const mpq_class disc = resultant_over_lead(c);
    const mpq_class j10 = table().J10.value.evaluate_at(sextic_point(c));
    if (disc == 0) {
      EXPECT_EQ(j10, 0);
      continue;
    }
    const mpq_class ratio = j10 / disc;
    if (!kappa) kappa = ratio;
    EXPECT_EQ(ratio, *kappa);
    ++used;
  }
  EXPECT_EQ(resultant_over_lead({1, -2, 1, 0, 0, 0, 1}) * *kappa,
            table().J10.value.evaluate_at(sextic_point({1, -2, 1, 0, 0, 0, 1})));
}

// x1 -> x1 + t x2 (or x2 -> x2 + s x1) applied to f, re-expanded in c, then
// substituted into each body.
void expect_sl2_invariant(const Bindings& xs) {
  const MultiPoly f = universal_sextic().value().body;
  const auto cs = form_coefficients(substitute(f, xs), 6);
  Bindings cb;
  for (int i = 0; i <= 6; ++i) cb.emplace(c_var(i), cs[i]);
  for (const ScaledInvariant* j : table().all())
    EXPECT_EQ(substitute(j->value.body, cb), j->value.body) << j->name;
}

TEST(Igusa, BodiesInvariantUnderUpperUnipotent) {
  expect_sl2_invariant({{Var::x1, P("x1 + t*x2")}});
}

TEST(Igusa, BodiesInvariantUnderLowerUnipotent) {
  expect_sl2_invariant({{Var::x2, P("x2 + s*x1")}});
}

TEST(Igusa, BodyNotInvariantUnderScaling) {
  // x1 -> 2 x1 has determinant 2; J2 picks up 2^6.
  const MultiPoly f = universal_sextic().value().body;
  const auto cs = form_coefficients(substitute(f, {{Var::x1, P("2*x1")}}), 6);
  Bindings cb;
  for (int i = 0; i <= 6; ++i) cb.emplace(c_var(i), cs[i]);
  EXPECT_EQ(substitute(table().J2.value.body, cb), mpz_class(64) * table().J2.value.body);
}

}  // namespace
}  // namespace g2c2
