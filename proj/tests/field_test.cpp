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
#include <set>

#include "g2c2/fqpoly.hpp"

namespace g2c2 {
namespace {

// Shift-and-add multiplication modulo an arbitrary degree-n polynomial.
std::uint32_t naive_mul(std::uint32_t x, std::uint32_t y, std::uint32_t modulus, unsigned n) {
  std::uint32_t r = 0;
  for (unsigned i = 0; i < n; ++i) {
    if ((y >> i) & 1) r ^= x;
    x <<= 1;
    if ((x >> n) & 1) x ^= modulus;
  }
  return r;
}

// Monic irreducibles of degree n over F2.
constexpr unsigned kIrreducibleCounts[] = {0, 2, 1, 2, 3, 6, 9, 18, 30, 56, 99, 186, 335};

TEST(Irreducible, CountsPerDegree) {
  for (unsigned n = 1; n < std::size(kIrreducibleCounts); ++n) {
    unsigned count = 0;
    for (std::uint32_t p = 1u << n; p < (2u << n); ++p) count += is_irreducible_f2(p);
    EXPECT_EQ(count, kIrreducibleCounts[n]) << "degree " << n;
  }
  EXPECT_FALSE(is_irreducible_f2(0));
  EXPECT_FALSE(is_irreducible_f2(1));
}

TEST(Irreducible, ModulusTable) {
  EXPECT_EQ(table_modulus(1), 0b11u);
  EXPECT_EQ(table_modulus(2), 0b111u);
  EXPECT_EQ(table_modulus(3), 0b1011u);
  EXPECT_EQ(table_modulus(4), 0b10011u);
  EXPECT_EQ(table_modulus(5), 0b100101u);
  EXPECT_EQ(table_modulus(6), 0b1011011u);
  EXPECT_EQ(table_modulus(7), 0b10000011u);
  EXPECT_EQ(table_modulus(8), 0b100011011u);
  for (unsigned n = 1; n <= BinaryField::kMaxDegree; ++n) {
    const BinaryField& f = BinaryField::get(n);
    EXPECT_EQ(f.degree(), n);
    EXPECT_TRUE(is_irreducible_f2(f.modulus())) << n;
    if (n > 8) {
      EXPECT_EQ(f.modulus(), smallest_irreducible(n));
    }
  }
}

TEST(Irreducible, RejectsBadModulus) {
  EXPECT_THROW(BinaryField(2, 0b101), VerificationFailure);  // (z+1)^2
  EXPECT_THROW(BinaryField(3, 0b111), VerificationFailure);  // wrong degree
  EXPECT_THROW(BinaryField::get(17), FieldTooLarge);
  EXPECT_THROW(BinaryField::get(0), FieldTooLarge);
}

TEST(BinaryField, F4Examples) {
  const BinaryField& f = BinaryField::get(2);
  const Fq z = 2;
  EXPECT_EQ(f.mul(z, f.add(z, 1)), 1u);
  EXPECT_EQ(f.mul(z, z), f.add(z, 1));
  for (Fq x = 0; x < 4; ++x) EXPECT_EQ(f.frobenius(f.frobenius(x)), x);
  EXPECT_EQ(f.trace(z), 1u);
  EXPECT_EQ(f.trace(1), 0u);
  EXPECT_EQ(f.to_string(3), "g+1");
  EXPECT_EQ(f.to_string(0), "0");
  EXPECT_THROW(f.inv(0), DivisionByZero);
}

TEST(BinaryField, MatchesShiftAndAdd) {
  std::mt19937_64 rng(31);
  for (unsigned n = 1; n <= BinaryField::kMaxDegree; ++n) {
    const BinaryField& f = BinaryField::get(n);
    for (int trial = 0; trial < 300; ++trial) {
      const Fq x = rng() % f.size(), y = rng() % f.size();
      ASSERT_EQ(f.mul(x, y), naive_mul(x, y, f.modulus(), n)) << n;
    }
  }
}

TEST(BinaryField, FieldLaws) {
  std::mt19937_64 rng(32);
  for (unsigned n = 1; n <= BinaryField::kMaxDegree; ++n) {
    const BinaryField& f = BinaryField::get(n);
    for (int trial = 0; trial < 200; ++trial) {
      const Fq x = rng() % f.size(), y = rng() % f.size(), z = rng() % f.size();
      ASSERT_EQ(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
      ASSERT_EQ(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
      ASSERT_EQ(f.sqrt(f.mul(x, x)), x);
      ASSERT_EQ(f.pow(x, f.size()), x);  // Frobenius^n is the identity
      ASSERT_LE(f.trace(x), 1u);
      ASSERT_EQ(f.trace(f.add(x, y)), f.trace(x) ^ f.trace(y));
      if (x != 0) {
        ASSERT_EQ(f.mul(x, f.inv(x)), 1u);
        ASSERT_EQ(f.div(y, x), f.mul(y, f.inv(x)));
        ASSERT_EQ(f.exp(f.log(x)), x);
      }
    }
    // Exactly half the field has trace 0.
    if (n <= 10) {
      unsigned zeros = 0;
      for (Fq x = 0; x < f.size(); ++x) zeros += f.trace(x) == 0;
      EXPECT_EQ(zeros, f.size() / 2) << n;
    }
  }
}

TEST(FieldEmbedding, IsHomomorphism) {
  for (auto [s, b] : std::vector<std::pair<unsigned, unsigned>>{{1, 4}, {2, 4}, {2, 8}, {4, 8}, {3, 6}, {2, 12}, {4, 16}}) {
    const BinaryField &small = BinaryField::get(s), &big = BinaryField::get(b);
    const FieldEmbedding e(small, big);
    std::set<Fq> image;
    for (Fq x = 0; x < small.size(); ++x) {
      image.insert(e(x));
      for (Fq y = 0; y < small.size(); ++y) {
        ASSERT_EQ(e(small.mul(x, y)), big.mul(e(x), e(y)));
        ASSERT_EQ(e(small.add(x, y)), big.add(e(x), e(y)));
      }
    }
    EXPECT_EQ(image.size(), small.size());
    EXPECT_EQ(e(1), 1u);
  }
  EXPECT_THROW(FieldEmbedding(BinaryField::get(2), BinaryField::get(3)), VerificationFailure);
}

FqPoly poly_from_index(const BinaryField& f, std::uint32_t idx, int len) {
  std::vector<Fq> c(len);
  for (auto& x : c) {
    x = idx % f.size();
    idx /= f.size();
  }
  return FqPoly(f, c);
}

TEST(FqPoly, DivisionIdentity) {
  const BinaryField& f = BinaryField::get(3);
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 300; ++trial) {
    const FqPoly p = poly_from_index(f, rng() % (1u << 21), 7), d = poly_from_index(f, rng() % (1u << 12), 4);
    if (d.is_zero()) {
      EXPECT_THROW(p.divmod(d), DivisionByZero);
      continue;
    }
    const auto [q, r] = p.divmod(d);
    ASSERT_EQ(q * d + r, p);
    ASSERT_LT(r.degree(), d.degree());
    const FqPoly g = gcd(p, d);
    ASSERT_TRUE((p % g).is_zero());
    ASSERT_TRUE((d % g).is_zero());
    ASSERT_EQ(g.leading(), 1u);
  }
}

TEST(FqPoly, DerivativeAndSquareRoot) {
  const BinaryField& f = BinaryField::get(2);
  const FqPoly p(f, {1, 2, 3, 1});  // x^3 + (g+1) x^2 + g x + 1
  EXPECT_EQ(p.derivative(), FqPoly(f, {2, 0, 1}));
  EXPECT_EQ((p * p).sqrt(), p);
  EXPECT_TRUE((p * p).derivative().is_zero());
  EXPECT_THROW(p.sqrt(), VerificationFailure);
  EXPECT_EQ(p.to_string(), "x^3 + (g+1)*x^2 + g*x + 1");
  EXPECT_EQ(p(0), 1u);
  EXPECT_EQ(p.reversed(3), FqPoly(f, {1, 3, 2, 1}));
}

// Distinct roots of p in the field that e maps into, by brute force.
unsigned brute_roots(const FqPoly& p, const FieldEmbedding& e) {
  const BinaryField& ext = e.target();
  const FqPoly q = p.mapped(e);
  unsigned n = 0;
  for (Fq x = 0; x < ext.size(); ++x) n += q(x) == 0;
  return n;
}

// Roots in the base field via gcd(p, x^q - x).
unsigned gcd_roots(const FqPoly& p) {
  const BinaryField& f = p.field();
  std::vector<Fq> xq(f.size() + 1, 0);
  xq[1] = 1;
  xq[f.size()] = 1;
  return static_cast<unsigned>(gcd(p, FqPoly(f, xq)).degree());
}

// A root of a polynomial of degree <= 6 has degree k <= 6 over the base
// field. With R(k) the roots in the degree-k extension, the roots of exact
// degree k number sum_{d|k} mu(k/d) R(d); their total is every distinct root
// in the algebraic closure, which must be the degree of the radical.
void check_roots(unsigned n) {
  const BinaryField& f = BinaryField::get(n);
  std::vector<FieldEmbedding> ext;
  for (unsigned k = 1; k <= 6; ++k) ext.emplace_back(f, BinaryField::get(n * k));
  std::uint32_t count = 1;
  for (int i = 0; i < 7; ++i) count *= f.size();
  for (std::uint32_t idx = 1; idx < count; ++idx) {
    const FqPoly p = poly_from_index(f, idx, 7);
    if (p.degree() < 1) continue;
    std::array<long, 7> r{};
    for (unsigned k = 1; k <= 6; ++k) r[k] = brute_roots(p, ext[k - 1]);
    const long closure = r[1] + (r[2] - r[1]) + (r[3] - r[1]) + (r[4] - r[2]) + (r[5] - r[1]) +
                         (r[6] - r[3] - r[2] + r[1]);
    ASSERT_EQ(radical(p).degree(), closure) << p.to_string();
    ASSERT_EQ(gcd_roots(p), r[1]) << p.to_string();
    ASSERT_TRUE((radical(p).pow(6) % p).is_zero()) << p.to_string();
  }
}

TEST(FqPoly, RootsAgreeWithBruteForceF2) { check_roots(1); }

TEST(FqPoly, RootsAgreeWithBruteForceF4) { check_roots(2); }

}  // namespace
}  // namespace g2c2
