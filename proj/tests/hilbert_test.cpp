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

#include "g2c2/hilbert.hpp"

namespace g2c2 {
namespace {

// Number of (e, a, b, c, d) with e + 10a + 12b + 13c + 48d = k.
long lattice_points(long k) {
  if (k < 0) return 0;
  long n = 0;
  for (long d = 0; 48 * d <= k; ++d)
    for (long c = 0; 48 * d + 13 * c <= k; ++c)
      for (long b = 0; 48 * d + 13 * c + 12 * b <= k; ++b)
        for (long a = 0; 48 * d + 13 * c + 12 * b + 10 * a <= k; ++a) ++n;  // e takes up the rest
  return n;
}

TEST(TruncatedSeries, Arithmetic) {
  const TruncatedSeries x = TruncatedSeries::polynomial(6, {{0, 1}, {1, 2}});
  const TruncatedSeries y = TruncatedSeries::polynomial(6, {{0, 1}, {2, -1}});
  const TruncatedSeries p = x * y;
  EXPECT_EQ(p, TruncatedSeries::polynomial(6, {{0, 1}, {1, 2}, {2, -1}, {3, -2}}));
  EXPECT_EQ(p.divided_by(y), x);
  EXPECT_EQ(x.shifted(5), TruncatedSeries::polynomial(6, {{5, 1}, {6, 2}}));
  // 1/(1-t^2) = 1 + t^2 + t^4 + t^6
  EXPECT_EQ(TruncatedSeries::one(6).divided_by_one_minus(2),
            TruncatedSeries::polynomial(6, {{0, 1}, {2, 1}, {4, 1}, {6, 1}}));
  EXPECT_EQ(x - x, TruncatedSeries(6));
  EXPECT_THROW(x + TruncatedSeries(5), std::invalid_argument);
  EXPECT_THROW(x.divided_by(TruncatedSeries::polynomial(6, {{0, 2}})), std::invalid_argument);
}

TEST(Hilbert, SmallWeights) {
  const TruncatedSeries g = expand_G(60);
  EXPECT_EQ(g[0], 1);
  for (int k = 1; k <= 9; ++k) EXPECT_EQ(g[k], 1) << k;
  EXPECT_EQ(g[10], 2);
  EXPECT_EQ(g[11], 2);
  EXPECT_EQ(g[12], 3);
  EXPECT_EQ(g[13], 4);
  EXPECT_EQ(g[52], 37);
}

TEST(Hilbert, MatchesLatticeCount) {
  const TruncatedSeries g = expand_G(200);
  for (long k = 0; k <= 200; ++k) ASSERT_EQ(g[k], lattice_points(k) - lattice_points(k - 52)) << k;
  EXPECT_EQ(lattice_points(52), 38);
}

TEST(Hilbert, LongDivisionAgrees) {
  EXPECT_EQ(expand_G_by_long_division(400), expand_G(400));
}

TEST(Hilbert, BasisExamples) {
  using Basis = std::vector<std::array<unsigned, 4>>;
  EXPECT_EQ(monomial_basis_N(23), (Basis{{1, 0, 1, 0}}));
  EXPECT_TRUE(monomial_basis_N(11).empty());
  EXPECT_EQ(monomial_basis_N(12), (Basis{{0, 1, 0, 0}}));
  EXPECT_EQ(monomial_basis_N(0), (Basis{{0, 0, 0, 0}}));
  // 52 = 13 * 4 would need gamma = 4, which the relation removes.
  for (const auto& e : monomial_basis_N(52)) EXPECT_LE(e[2], 3u);
}

TEST(Hilbert, FirstDifferenceIsBasisSize) {
  const TruncatedSeries g = expand_G(300);
  for (std::size_t k = 1; k <= 300; ++k) ASSERT_EQ(g[k] - g[k - 1], monomial_basis_N(k).size()) << k;
}

TEST(Hilbert, StepTen) {
  const TruncatedSeries g = expand_G(300);
  for (long k = 10; k <= 300; ++k) {
    if (k % 12 <= 2) continue;
    const long c = c_of(k);
    ASSERT_EQ(g[k] - g[k - 10], c * (c + 1) / 2) << k;
  }
  EXPECT_EQ(c_of(11), 1);
  EXPECT_EQ(c_of(12), 2);
}

TEST(Hilbert, MonotoneAndPositive) {
  const TruncatedSeries g = expand_G(1000);
  for (std::size_t k = 1; k <= 1000; ++k) {
    ASSERT_GE(g[k], g[k - 1]) << k;
    ASSERT_GT(g[k], 0) << k;
  }
}

TEST(Hilbert, IdentitiesReport) {
  const SeriesReport rep = verify_series_identities(200);
  ASSERT_EQ(rep.checks.size(), 4u);
  for (const auto& c : rep.checks) EXPECT_TRUE(c.ok()) << c.id << " at " << c.first_violation.value_or(0);
  EXPECT_THROW(verify_series_identities(50), std::invalid_argument);
}

TEST(Hilbert, WrongPresentationFails) {
  RingPresentation bad;
  bad.relation_weight = 50;
  const TruncatedSeries g = expand_G(200, bad);
  EXPECT_NE(g, expand_G(200));
  EXPECT_FALSE(degree_identity_check(bad).ok());
}

TEST(Hilbert, DegreeIdentity) {
  const DegreeIdentity d = degree_identity_check();
  EXPECT_EQ(d.denominator_product, 74880);
  EXPECT_EQ(d.value, mpq_class(1, 1440));
  EXPECT_EQ(74880 / 52, 1440);
  EXPECT_TRUE(d.ok());
}

TEST(Hilbert, AsymptoticFitExact) {
  const AsymptoticFit fit = asymptotic_fit(10000);
  EXPECT_TRUE(fit.exact);
  EXPECT_EQ(fit.step, 3120u);
  // Fourth-order pole residue 52/74880, divided by 3!.
  EXPECT_EQ(fit.lambda, mpq_class(1, 1440) / 6);
  EXPECT_EQ(fit.closest, "1/8640");
}

TEST(Hilbert, AsymptoticFitShortSeries) {
  const AsymptoticFit fit = asymptotic_fit(3000);
  EXPECT_FALSE(fit.exact);
  EXPECT_EQ(fit.step % 12, 0u);
  EXPECT_EQ(fit.closest, "1/8640");
  EXPECT_LT(abs(fit.lambda - mpq_class(1, 8640)), mpq_class(1, 20000));
  EXPECT_THROW(asymptotic_fit(100), std::invalid_argument);
}

}  // namespace
}  // namespace g2c2
