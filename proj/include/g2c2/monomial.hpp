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

#ifndef G2C2_MONOMIAL_HPP
#define G2C2_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "g2c2/errors.hpp"

namespace g2c2 {

/// The fixed variable universe, in canonical order.
enum class Var : std::uint8_t {
  a0, a1, a2, a3,
  b0, b1, b2, b3, b4, b5, b6,
  c0, c1, c2, c3, c4, c5, c6,
  x1, x2, t, s, m,
};

inline constexpr int kNumVars = 23;

inline constexpr std::array<std::string_view, kNumVars> kVarNames = {
    "a0", "a1", "a2", "a3", "b0", "b1", "b2", "b3", "b4", "b5", "b6", "c0",
    "c1", "c2", "c3", "c4", "c5", "c6", "x1", "x2", "t",  "s",  "m"};

constexpr int index(Var v) { return static_cast<int>(v); }
constexpr Var var_at(int i) { return static_cast<Var>(i); }
constexpr std::string_view name(Var v) { return kVarNames[index(v)]; }

constexpr Var a_var(int i) { return var_at(index(Var::a0) + i); }
constexpr Var b_var(int j) { return var_at(index(Var::b0) + j); }
constexpr Var c_var(int j) { return var_at(index(Var::c0) + j); }

constexpr bool is_a(Var v) { return v >= Var::a0 && v <= Var::a3; }
constexpr bool is_b(Var v) { return v >= Var::b0 && v <= Var::b6; }
constexpr bool is_c(Var v) { return v >= Var::c0 && v <= Var::c6; }

/// Subscript of a coefficient variable (a_i, b_j, c_j); 0 for the others.
constexpr int subscript(Var v) {
  if (is_a(v)) return index(v) - index(Var::a0);
  if (is_b(v)) return index(v) - index(Var::b0);
  if (is_c(v)) return index(v) - index(Var::c0);
  return 0;
}

inline std::optional<Var> parse_var(std::string_view s) {
  for (int i = 0; i < kNumVars; ++i)
    if (kVarNames[i] == s) return var_at(i);
  return std::nullopt;
}

/// Exponent vector over the variable universe, packed one byte per slot into
/// three 64-bit words. Slot 0 holds the total degree and slot k+1 the exponent
/// of variable k, most significant byte first, so comparing the words
/// lexicographically is graded-lex comparison with a0 > a1 > ... > m.
class Monomial {
 public:
  constexpr Monomial() = default;

  static Monomial of(Var v, unsigned e = 1) {
    Monomial r;
    r.set(v, e);
    return r;
  }

  unsigned exponent(Var v) const { return get_slot(index(v) + 1); }
  unsigned degree() const { return get_slot(0); }
  bool is_one() const { return w_[0] == 0 && w_[1] == 0 && w_[2] == 0; }

  /// Sets one exponent and keeps the degree slot consistent.
  void set(Var v, unsigned e) {
    const unsigned old = exponent(v);
    const unsigned deg = degree() - old + e;
    if (e > 255 || deg > 255) throw ExponentOverflow();
    put_slot(index(v) + 1, e);
    put_slot(0, deg);
  }

  friend Monomial operator*(const Monomial& x, const Monomial& y) {
    Monomial r;
    std::uint64_t carry = 0;
    for (int i = 0; i < 3; ++i) {
      const std::uint64_t s = x.w_[i] + y.w_[i];
      carry |= (x.w_[i] & y.w_[i]) | ((x.w_[i] | y.w_[i]) & ~s);
      r.w_[i] = s;
    }
    if (carry & kHighBits) return slow_mul(x, y);
    return r;
  }

  /// Every exponent of `*this` is at most the matching exponent of `other`.
  bool divides(const Monomial& other) const {
    for (int k = 1; k <= kNumVars; ++k)
      if (get_slot(k) > other.get_slot(k)) return false;
    return true;
  }

  /// other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const {
    Monomial r;
    for (int i = 0; i < 3; ++i) r.w_[i] = other.w_[i] - w_[i];
    return r;
  }

  Monomial pow(unsigned e) const {
    Monomial r;
    for (int k = 0; k <= kNumVars; ++k) {
      const unsigned x = get_slot(k) * e;
      if (x > 255) throw ExponentOverflow();
      r.put_slot(k, x);
    }
    return r;
  }

  /// Same monomial with variable v removed.
  Monomial without(Var v) const {
    Monomial r = *this;
    r.set(v, 0);
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& x, const Monomial& y) {
    return x.w_ <=> y.w_;
  }

  /// Pure lexicographic comparison ignoring the degree slot.
  static bool lex_greater(const Monomial& x, const Monomial& y) {
    const std::uint64_t mask = ~(std::uint64_t{0xFF} << 56);
    if ((x.w_[0] & mask) != (y.w_[0] & mask))
      return (x.w_[0] & mask) > (y.w_[0] & mask);
    if (x.w_[1] != y.w_[1]) return x.w_[1] > y.w_[1];
    return x.w_[2] > y.w_[2];
  }

  std::size_t hash() const {
    std::uint64_t h = w_[0] * 0x9E3779B97F4A7C15ULL;
    h ^= (w_[1] + 0x632BE59BD9B4E019ULL) * 0xC2B2AE3D27D4EB4FULL;
    h ^= (w_[2] + 0x85EBCA77C2B2AE63ULL) * 0x165667B19E3779F9ULL;
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
  }

  /// "a0^2*b3"; empty for the unit monomial.
  std::string to_string() const {
    std::string out;
    for (int k = 0; k < kNumVars; ++k) {
      const unsigned e = get_slot(k + 1);
      if (e == 0) continue;
      if (!out.empty()) out += '*';
      out += kVarNames[k];
      if (e > 1) out += '^' + std::to_string(e);
    }
    return out;
  }

 private:
  static constexpr std::uint64_t kHighBits = 0x8080808080808080ULL;

  unsigned get_slot(int k) const {
    return static_cast<unsigned>((w_[k / 8] >> (8 * (7 - k % 8))) & 0xFF);
  }
  void put_slot(int k, unsigned e) {
    const int shift = 8 * (7 - k % 8);
    w_[k / 8] = (w_[k / 8] & ~(std::uint64_t{0xFF} << shift)) |
                (std::uint64_t{e} << shift);
  }

  static Monomial slow_mul(const Monomial& x, const Monomial& y) {
    Monomial r;
    for (int k = 0; k <= kNumVars; ++k) {
      const unsigned e = x.get_slot(k) + y.get_slot(k);
      if (e > 255) throw ExponentOverflow();
      r.put_slot(k, e);
    }
    return r;
  }

  std::array<std::uint64_t, 3> w_{};
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace g2c2

#endif  // G2C2_MONOMIAL_HPP
