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

#ifndef G2C2_ROOT_ORACLE_HPP
#define G2C2_ROOT_ORACLE_HPP

#include <gmpxx.h>

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "g2c2/multipoly.hpp"

namespace g2c2 {

/// A binary sextic leading * prod_j (x1 - r_j x2) with rational roots.
struct RationalSextic {
  std::array<mpq_class, 6> roots;
  mpq_class leading{1};

  /// c_i, the coefficient of x1^(6-i) x2^i.
  std::array<mpq_class, 7> coefficients() const {
    std::array<mpq_class, 7> e{};  // elementary symmetric functions
    e[0] = 1;
    for (const auto& r : roots)
      for (int k = 6; k >= 1; --k) e[k] += e[k - 1] * r;
    std::array<mpq_class, 7> c;
    for (int i = 0; i <= 6; ++i) c[i] = (i % 2 ? -leading : leading) * e[i];
    return c;
  }

  std::map<Var, mpq_class> as_binding() const {
    const auto c = coefficients();
    std::map<Var, mpq_class> out;
    for (int i = 0; i <= 6; ++i) out[c_var(i)] = c[i];
    return out;
  }

  /// Random sextic with pairwise distinct small rational roots.
  template <class Rng>
  static RationalSextic random(Rng& rng) {
    std::uniform_int_distribution<int> num(-12, 12), den(1, 4), lead(1, 7);
    RationalSextic s;
    for (int j = 0; j < 6; ++j) {
      while (true) {
        mpq_class r(num(rng), den(rng));
        r.canonicalize();
        bool fresh = true;
        for (int k = 0; k < j; ++k) fresh = fresh && s.roots[k] != r;
        if (fresh) {
          s.roots[j] = r;
          break;
        }
      }
    }
    s.leading = lead(rng) * ((rng() & 1) ? 1 : -1);
    return s;
  }
};

/// Classical root-difference expressions for the degree 2, 4, 6 and 10
/// invariants of a binary sextic.
inline mpq_class root_difference_oracle(std::string_view name,
                                        const std::array<mpq_class, 6>& roots,
                                        const mpq_class& leading) {
  auto d2 = [&](int i, int j) {
    mpq_class d = roots[i] - roots[j];
    return mpq_class(d * d);
  };
  auto triangle = [&](int i, int j, int k) { return mpq_class(d2(i, j) * d2(j, k) * d2(k, i)); };
  auto lead_pow = [&](unsigned e) {
    mpq_class r = 1;
    for (unsigned i = 0; i < e; ++i) r *= leading;
    return r;
  };

  if (name == "I10") {
    mpq_class prod = 1;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) prod *= d2(i, j);
    return lead_pow(10) * prod;
  }
  if (name == "I2") {
    // 15 perfect matchings of {0..5}.
    mpq_class sum = 0;
    for (int p = 1; p < 6; ++p) {
      std::vector<int> rest;
      for (int k = 1; k < 6; ++k)
        if (k != p) rest.push_back(k);
      for (int q = 1; q < 4; ++q) {
        std::vector<int> last;
        for (int k = 1; k < 4; ++k)
          if (k != q) last.push_back(rest[k]);
        sum += d2(0, p) * d2(rest[0], rest[q]) * d2(last[0], last[1]);
      }
    }
    return lead_pow(2) * sum;
  }
  // Splits of {0..5} into two triples; the triple containing 0 comes first.
  std::vector<std::pair<std::array<int, 3>, std::array<int, 3>>> splits;
  for (unsigned mask = 0; mask < 64; ++mask) {
    if (std::popcount(mask) != 3 || !(mask & 1)) continue;
    std::array<int, 3> t{}, u{};
    int nt = 0, nu = 0;
    for (int k = 0; k < 6; ++k) (mask >> k & 1 ? t[nt++] : u[nu++]) = k;
    splits.emplace_back(t, u);
  }
  if (name == "I4") {
    mpq_class sum = 0;
    for (const auto& [t, u] : splits)
      sum += triangle(t[0], t[1], t[2]) * triangle(u[0], u[1], u[2]);
    return lead_pow(4) * sum;
  }
  if (name == "I6") {
    mpq_class sum = 0;
    constexpr std::array<std::array<int, 3>, 6> perms = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (const auto& [t, u] : splits) {
      const mpq_class base = triangle(t[0], t[1], t[2]) * triangle(u[0], u[1], u[2]);
      for (const auto& p : perms)
        sum += base * d2(t[0], u[p[0]]) * d2(t[1], u[p[1]]) * d2(t[2], u[p[2]]);
    }
    return lead_pow(6) * sum;
  }
  throw std::invalid_argument("unknown oracle invariant");
}

/// Resultant of two univariate polynomials given by coefficient lists (index
/// = power of the variable, coefficients in a polynomial ring), computed as
/// the Sylvester determinant by a division-free expansion over column subsets.
inline MultiPoly sylvester_resultant(const std::vector<MultiPoly>& f,
                                     const std::vector<MultiPoly>& g) {
  const int m = static_cast<int>(f.size()) - 1;  // deg f
  const int n = static_cast<int>(g.size()) - 1;  // deg g
  const int size = m + n;
  if (size > 30) throw std::invalid_argument("Sylvester matrix too large");
  const Ring ring = f.front().ring();
  // Row r < n holds f shifted by r; row n + r holds g shifted by r. Columns
  // run from the highest power down.
  auto entry = [&](int row, int col) -> const MultiPoly* {
    const bool from_f = row < n;
    const int shift = from_f ? row : row - n;
    const auto& poly = from_f ? f : g;
    const int deg = from_f ? m : n;
    const int k = col - shift;
    if (k < 0 || k > deg) return nullptr;
    const MultiPoly& c = poly[deg - k];
    return c.is_zero() ? nullptr : &c;
  };
  std::map<std::uint32_t, MultiPoly> layer{{0u, MultiPoly::one(ring)}};
  for (int row = 0; row < size; ++row) {
    std::map<std::uint32_t, MultiPoly> next;
    for (const auto& [mask, val] : layer) {
      for (int col = 0; col < size; ++col) {
        if (mask >> col & 1) continue;
        const MultiPoly* e = entry(row, col);
        if (!e) continue;
        const int inversions = std::popcount(mask >> (col + 1));
        MultiPoly contrib = val * *e;
        if (inversions % 2) contrib = -contrib;
        auto [it, inserted] = next.try_emplace(mask | (1u << col), ring);
        it->second += contrib;
      }
    }
    layer = std::move(next);
  }
  auto it = layer.find((1u << size) - 1);
  return it == layer.end() ? MultiPoly(ring) : it->second;
}

}  // namespace g2c2

#endif  // G2C2_ROOT_ORACLE_HPP
