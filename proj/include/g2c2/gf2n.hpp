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

#ifndef G2C2_GF2N_HPP
#define G2C2_GF2N_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "g2c2/errors.hpp"

namespace g2c2 {

/// Field element of F_{2^n} as a bit vector in the polynomial basis 1, g, g^2, ...
using Fq = std::uint32_t;

namespace detail {

inline int bit_degree(std::uint64_t p) {
  int d = -1;
  while (p) {
    p >>= 1;
    ++d;
  }
  return d;
}

/// Carry-less product reduced modulo `modulus`.
inline std::uint32_t clmul_mod(std::uint32_t x, std::uint32_t y, std::uint32_t modulus) {
  const int n = bit_degree(modulus);
  std::uint64_t acc = 0;
  for (int i = 0; y; ++i, y >>= 1)
    if (y & 1) acc ^= static_cast<std::uint64_t>(x) << i;
  for (int d = bit_degree(acc); d >= n; d = bit_degree(acc)) acc ^= static_cast<std::uint64_t>(modulus) << (d - n);
  return static_cast<std::uint32_t>(acc);
}

inline std::uint64_t poly_mod2(std::uint64_t p, std::uint64_t q) {
  const int dq = bit_degree(q);
  for (int d = bit_degree(p); d >= dq; d = bit_degree(p)) p ^= q << (d - dq);
  return p;
}

}  // namespace detail

/// True iff p (bit i = coefficient of z^i) is irreducible over F2, by trial
/// division with every polynomial of degree up to deg(p)/2.
inline bool is_irreducible_f2(std::uint32_t p) {
  const int n = detail::bit_degree(p);
  if (n < 1) return false;
  for (std::uint64_t q = 2; detail::bit_degree(q) <= n / 2; ++q)
    if (detail::poly_mod2(p, q) == 0) return false;
  return true;
}

/// Fixed moduli for F_{2^n}, 1 <= n <= 8.
inline std::uint32_t table_modulus(unsigned n) {
  static constexpr std::uint32_t kTable[] = {0,          0b11,        0b111,        0b1011,      0b10011,
                                             0b100101,   0b1011011,   0b10000011,   0b100011011};
  return n >= 1 && n <= 8 ? kTable[n] : 0;
}

/// Smallest irreducible polynomial of degree n over F2 (by integer value).
inline std::uint32_t smallest_irreducible(unsigned n) {
  for (std::uint32_t p = (1u << n) | 1u; p < (2u << n); p += 2)
    if (is_irreducible_f2(p)) return p;
  throw FieldTooLarge("no irreducible polynomial of degree " + std::to_string(n));
}

/// F_{2^n} for 1 <= n <= 16 with log/antilog tables.
class BinaryField {
 public:
  static constexpr unsigned kMaxDegree = 16;

  BinaryField(unsigned n, std::uint32_t modulus) : n_(n), modulus_(modulus) {
    if (n < 1 || n > kMaxDegree) throw FieldTooLarge("extension degree " + std::to_string(n) + " outside 1..16");
    if (detail::bit_degree(modulus) != static_cast<int>(n) || !is_irreducible_f2(modulus))
      throw VerificationFailure("field modulus is not irreducible of degree " + std::to_string(n));
    build_tables();
  }

  /// Shared instance: the fixed table modulus for n <= 8, the smallest
  /// irreducible above that.
  static const BinaryField& get(unsigned n) {
    static std::mutex mu;
    static std::map<unsigned, std::unique_ptr<BinaryField>> fields;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = fields[n];
    if (!slot) {
      if (n < 1 || n > kMaxDegree) throw FieldTooLarge("extension degree " + std::to_string(n) + " outside 1..16");
      slot = std::make_unique<BinaryField>(n, n <= 8 ? table_modulus(n) : smallest_irreducible(n));
    }
    return *slot;
  }

  unsigned degree() const { return n_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t size() const { return 1u << n_; }
  /// The class of z, a root of the modulus.
  Fq generator() const { return detail::clmul_mod(2, 1, modulus_); }

  Fq add(Fq x, Fq y) const { return x ^ y; }
  Fq mul(Fq x, Fq y) const {
    if (x == 0 || y == 0) return 0;
    const std::uint32_t s = log_[x] + log_[y];
    return exp_[s >= order() ? s - order() : s];
  }
  Fq inv(Fq x) const {
    if (x == 0) throw DivisionByZero("inverse of zero in F_2^" + std::to_string(n_));
    return exp_[log_[x] == 0 ? 0 : order() - log_[x]];
  }
  Fq div(Fq x, Fq y) const { return mul(x, inv(y)); }
  Fq pow(Fq x, std::uint64_t e) const {
    if (e == 0) return 1;
    if (x == 0) return 0;
    return exp_[(static_cast<std::uint64_t>(log_[x]) * (e % order())) % order()];
  }
  Fq frobenius(Fq x) const { return mul(x, x); }
  Fq sqrt(Fq x) const { return pow(x, std::uint64_t{1} << (n_ - 1)); }
  /// Absolute trace to F2, returned as 0 or 1.
  Fq trace(Fq x) const {
    Fq acc = 0, y = x;
    for (unsigned i = 0; i < n_; ++i) {
      acc ^= y;
      y = frobenius(y);
    }
    return acc;
  }

  /// Discrete log relative to the fixed primitive element; x must be nonzero.
  std::uint32_t log(Fq x) const { return log_[x]; }
  Fq exp(std::uint32_t k) const { return exp_[k % order()]; }
  std::uint32_t order() const { return size() - 1; }

  /// "0", "1", "g", "g^2+g+1", ...
  std::string to_string(Fq x) const {
    if (x == 0) return "0";
    std::string out;
    for (int i = static_cast<int>(n_) - 1; i >= 0; --i) {
      if (!((x >> i) & 1)) continue;
      if (!out.empty()) out += "+";
      out += i == 0 ? "1" : i == 1 ? "g" : "g^" + std::to_string(i);
    }
    return out;
  }

 private:
  void build_tables() {
    const std::uint32_t q1 = order();
    std::vector<std::uint32_t> primes;
    for (std::uint32_t m = q1, p = 2; m > 1; ++p) {
      if (p * p > m) p = m;
      if (m % p == 0) {
        primes.push_back(p);
        while (m % p == 0) m /= p;
      }
    }
    auto slow_pow = [&](Fq x, std::uint32_t e) {
      Fq r = 1;
      for (; e; e >>= 1, x = detail::clmul_mod(x, x, modulus_))
        if (e & 1) r = detail::clmul_mod(r, x, modulus_);
      return r;
    };
    Fq prim = 1;
    for (Fq cand = 1; cand < size(); ++cand) {
      bool ok = true;
      for (auto p : primes) ok = ok && slow_pow(cand, q1 / p) != 1;
      if (ok) {
        prim = cand;
        break;
      }
    }
    exp_.assign(q1, 0);
    log_.assign(size(), 0);
    Fq x = 1;
    for (std::uint32_t k = 0; k < q1; ++k) {
      exp_[k] = x;
      log_[x] = k;
      x = detail::clmul_mod(x, prim, modulus_);
    }
  }

  unsigned n_;
  std::uint32_t modulus_;
  std::vector<Fq> exp_;
  std::vector<std::uint32_t> log_;
};

/// Field embedding F_{2^n} -> F_{2^m} for n | m, sending g to the smallest
/// root of the small field's modulus.
class FieldEmbedding {
 public:
  FieldEmbedding(const BinaryField& small, const BinaryField& big) : small_(&small), big_(&big) {
    if (big.degree() % small.degree() != 0)
      throw VerificationFailure("F_2^" + std::to_string(small.degree()) + " does not embed in F_2^" +
                                std::to_string(big.degree()));
    Fq root = 0;
    bool found = false;
    for (Fq r = 0; r < big.size() && !found; ++r) {
      Fq acc = 0, pw = 1;
      for (unsigned i = 0; i <= small.degree(); ++i, pw = big.mul(pw, r))
        if ((small.modulus() >> i) & 1) acc ^= pw;
      if (acc == 0) {
        root = r;
        found = true;
      }
    }
    if (!found) throw VerificationFailure("modulus has no root in the extension field");
    image_.assign(small.size(), 0);
    std::vector<Fq> basis(small.degree());
    for (unsigned i = 0; i < small.degree(); ++i) basis[i] = big.pow(root, i);
    for (Fq x = 0; x < small.size(); ++x)
      for (unsigned i = 0; i < small.degree(); ++i)
        if ((x >> i) & 1) image_[x] ^= basis[i];
  }

  Fq operator()(Fq x) const { return image_.at(x); }
  const BinaryField& source() const { return *small_; }
  const BinaryField& target() const { return *big_; }

 private:
  const BinaryField* small_;
  const BinaryField* big_;
  std::vector<Fq> image_;
};

}  // namespace g2c2

#endif  // G2C2_GF2N_HPP
