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

#ifndef G2C2_MULTIPOLY_HPP
#define G2C2_MULTIPOLY_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "g2c2/errors.hpp"
#include "g2c2/monomial.hpp"

namespace g2c2 {

enum class Ring { Integers, F2 };

class MultiPoly;

namespace detail {

/// Hash accumulator for building polynomials term by term. Over F2 adding a
/// monomial toggles it; over the integers coefficients are summed exactly.
class TermAccumulator {
 public:
  explicit TermAccumulator(Ring ring, std::size_t expected = 16) : ring_(ring) {
    std::size_t cap = 16;
    while (cap < 2 * expected) cap <<= 1;
    slots_.assign(cap, -1);
    mons_.reserve(expected);
    if (ring_ == Ring::Integers) coefs_.reserve(expected);
  }

  /// Adds c * m (c ignored over F2 except for its parity).
  void add(const Monomial& m, const mpz_class& c) {
    if (ring_ == Ring::F2) {
      if (mpz_odd_p(c.get_mpz_t())) toggle(m);
      return;
    }
    const std::size_t i = find_or_insert(m);
    mpz_add(coefs_[i].get_mpz_t(), coefs_[i].get_mpz_t(), c.get_mpz_t());
  }

  /// Adds c1 * c2 * m over the integers.
  void add_product(const Monomial& m, const mpz_class& c1, const mpz_class& c2) {
    const std::size_t i = find_or_insert(m);
    mpz_addmul(coefs_[i].get_mpz_t(), c1.get_mpz_t(), c2.get_mpz_t());
  }

  void toggle(const Monomial& m) {
    const std::size_t i = find_or_insert(m);
    parity_[i] ^= 1;
  }

  inline MultiPoly finish();

 private:
  std::size_t find_or_insert(const Monomial& m) {
    std::size_t mask = slots_.size() - 1;
    std::size_t h = m.hash() & mask;
    while (true) {
      const std::int64_t s = slots_[h];
      if (s < 0) break;
      if (mons_[static_cast<std::size_t>(s)] == m) return static_cast<std::size_t>(s);
      h = (h + 1) & mask;
    }
    const std::size_t idx = mons_.size();
    mons_.push_back(m);
    if (ring_ == Ring::Integers) coefs_.emplace_back(0);
    else parity_.push_back(0);
    slots_[h] = static_cast<std::int64_t>(idx);
    if (2 * mons_.size() > slots_.size()) grow();
    return idx;
  }

  void grow() {
    std::vector<std::int64_t> fresh(slots_.size() * 2, -1);
    const std::size_t mask = fresh.size() - 1;
    for (std::size_t i = 0; i < mons_.size(); ++i) {
      std::size_t h = mons_[i].hash() & mask;
      while (fresh[h] >= 0) h = (h + 1) & mask;
      fresh[h] = static_cast<std::int64_t>(i);
    }
    slots_ = std::move(fresh);
  }

  Ring ring_;
  std::vector<std::int64_t> slots_;
  std::vector<Monomial> mons_;
  std::vector<mpz_class> coefs_;
  std::vector<std::uint8_t> parity_;
};

}  // namespace detail

/// Exact sparse multivariate polynomial over Z or F2.
///
/// Terms are kept strictly descending in graded-lex order and no stored
/// coefficient is zero, so two polynomials are equal iff their term lists are.
/// Over F2 no coefficients are stored at all.
class MultiPoly {
 public:
  explicit MultiPoly(Ring ring = Ring::Integers) : ring_(ring) {}

  static MultiPoly constant(Ring ring, const mpz_class& c) {
    return monomial(ring, Monomial{}, c);
  }
  static MultiPoly one(Ring ring) { return constant(ring, 1); }

  static MultiPoly variable(Ring ring, Var v, unsigned e = 1) {
    return monomial(ring, Monomial::of(v, e));
  }

  static MultiPoly monomial(Ring ring, const Monomial& m, const mpz_class& c = 1) {
    MultiPoly p(ring);
    if (ring == Ring::F2) {
      if (mpz_odd_p(c.get_mpz_t())) p.mons_.push_back(m);
    } else if (c != 0) {
      p.mons_.push_back(m);
      p.coefs_.push_back(c);
    }
    return p;
  }

  /// Builds a polynomial from arbitrary (possibly repeated) terms.
  static MultiPoly from_terms(Ring ring,
                              const std::vector<std::pair<Monomial, mpz_class>>& terms) {
    detail::TermAccumulator acc(ring, terms.size());
    for (const auto& [m, c] : terms) acc.add(m, c);
    return acc.finish();
  }

  Ring ring() const { return ring_; }
  std::size_t size() const { return mons_.size(); }
  bool is_zero() const { return mons_.empty(); }
  bool is_one() const { return size() == 1 && mons_[0].is_one() && coef(0) == 1; }

  const std::vector<Monomial>& monomials() const { return mons_; }
  const Monomial& monomial_at(std::size_t i) const { return mons_[i]; }
  mpz_class coef(std::size_t i) const {
    return ring_ == Ring::F2 ? mpz_class(1) : coefs_[i];
  }
  /// Coefficient of m, zero if absent.
  mpz_class coefficient(const Monomial& m) const {
    auto it = std::lower_bound(mons_.begin(), mons_.end(), m, std::greater<>());
    if (it == mons_.end() || *it != m) return 0;
    return coef(static_cast<std::size_t>(it - mons_.begin()));
  }

  const Monomial& leading_monomial() const { return mons_.front(); }

  unsigned degree() const { return is_zero() ? 0 : mons_.front().degree(); }
  unsigned degree_in(Var v) const {
    unsigned d = 0;
    for (const auto& m : mons_) d = std::max(d, m.exponent(v));
    return d;
  }

  friend bool operator==(const MultiPoly& p, const MultiPoly& q) {
    return p.ring_ == q.ring_ && p.mons_ == q.mons_ && p.coefs_ == q.coefs_;
  }

  friend MultiPoly operator+(const MultiPoly& p, const MultiPoly& q) {
    return merge(p, q, false);
  }
  friend MultiPoly operator-(const MultiPoly& p, const MultiPoly& q) {
    return merge(p, q, true);
  }
  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& c : r.coefs_) c = -c;
    return r;
  }
  MultiPoly& operator+=(const MultiPoly& q) { return *this = *this + q; }
  MultiPoly& operator-=(const MultiPoly& q) { return *this = *this - q; }
  MultiPoly& operator*=(const MultiPoly& q) { return *this = *this * q; }

  friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
    if (p.ring_ != q.ring_) throw RingMismatch();
    if (p.is_zero() || q.is_zero()) return MultiPoly(p.ring_);
    const MultiPoly& big = p.size() >= q.size() ? p : q;
    const MultiPoly& small = p.size() >= q.size() ? q : p;
    if (small.size() == 1) return big.times_term(small.mons_[0], small.coef(0));
    detail::TermAccumulator acc(p.ring_, std::min<std::size_t>(big.size() * small.size(), 1u << 22));
    if (p.ring_ == Ring::F2) {
      for (const auto& ms : small.mons_)
        for (const auto& mb : big.mons_) acc.toggle(ms * mb);
    } else {
      for (std::size_t i = 0; i < small.size(); ++i)
        for (std::size_t j = 0; j < big.size(); ++j)
          acc.add_product(small.mons_[i] * big.mons_[j], small.coefs_[i], big.coefs_[j]);
    }
    return acc.finish();
  }

  friend MultiPoly operator*(const mpz_class& c, const MultiPoly& p) {
    return p.times_term(Monomial{}, c);
  }

  /// c * m * (*this)
  MultiPoly times_term(const Monomial& m, const mpz_class& c) const {
    MultiPoly r(ring_);
    if (ring_ == Ring::F2) {
      if (mpz_even_p(c.get_mpz_t())) return r;
      r.mons_.reserve(size());
      for (const auto& x : mons_) r.mons_.push_back(x * m);
      return r;
    }
    if (c == 0) return r;
    r.mons_.reserve(size());
    r.coefs_.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
      r.mons_.push_back(mons_[i] * m);
      r.coefs_.push_back(coefs_[i] * c);
    }
    return r;
  }

  MultiPoly pow(unsigned e) const {
    MultiPoly result = one(ring_);
    MultiPoly base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e > 0) base = base.square();
    }
    return result;
  }

  MultiPoly square() const {
    if (ring_ == Ring::F2) {
      // Frobenius: cross terms vanish and squaring preserves the order.
      MultiPoly r(ring_);
      r.mons_.reserve(size());
      for (const auto& m : mons_) r.mons_.push_back(m.pow(2));
      return r;
    }
    return *this * *this;
  }

  /// Reduces coefficients modulo 2.
  MultiPoly to_f2() const {
    if (ring_ == Ring::F2) return *this;
    MultiPoly r(Ring::F2);
    for (std::size_t i = 0; i < size(); ++i)
      if (mpz_odd_p(coefs_[i].get_mpz_t())) r.mons_.push_back(mons_[i]);
    return r;
  }

  /// Lifts an F2 polynomial to the integers with all coefficients 1.
  MultiPoly to_integers() const {
    if (ring_ == Ring::Integers) return *this;
    MultiPoly r(Ring::Integers);
    r.mons_ = mons_;
    r.coefs_.assign(size(), mpz_class(1));
    return r;
  }

  /// Coefficient of v^e viewed as a polynomial in v.
  MultiPoly stratum(Var v, unsigned e) const {
    MultiPoly r(ring_);
    for (std::size_t i = 0; i < size(); ++i) {
      if (mons_[i].exponent(v) != e) continue;
      r.mons_.push_back(mons_[i].without(v));
      if (ring_ == Ring::Integers) r.coefs_.push_back(coefs_[i]);
    }
    r.sort_terms();
    return r;
  }

  template <class F>
  void for_each_term(F&& f) const {
    for (std::size_t i = 0; i < size(); ++i) f(mons_[i], coef(i));
  }

 private:
  friend class detail::TermAccumulator;

  static MultiPoly merge(const MultiPoly& p, const MultiPoly& q, bool negate_q) {
    if (p.ring_ != q.ring_) throw RingMismatch();
    MultiPoly r(p.ring_);
    const bool z = p.ring_ == Ring::Integers;
    r.mons_.reserve(p.size() + q.size());
    if (z) r.coefs_.reserve(p.size() + q.size());
    std::size_t i = 0, j = 0;
    while (i < p.size() || j < q.size()) {
      if (j == q.size() || (i < p.size() && p.mons_[i] > q.mons_[j])) {
        r.mons_.push_back(p.mons_[i]);
        if (z) r.coefs_.push_back(p.coefs_[i]);
        ++i;
      } else if (i == p.size() || q.mons_[j] > p.mons_[i]) {
        r.mons_.push_back(q.mons_[j]);
        if (z) r.coefs_.push_back(negate_q ? mpz_class(-q.coefs_[j]) : q.coefs_[j]);
        ++j;
      } else {
        if (z) {
          mpz_class c = negate_q ? mpz_class(p.coefs_[i] - q.coefs_[j])
                                 : mpz_class(p.coefs_[i] + q.coefs_[j]);
          if (c != 0) {
            r.mons_.push_back(p.mons_[i]);
            r.coefs_.push_back(std::move(c));
          }
        }
        ++i;
        ++j;
      }
    }
    return r;
  }

  void sort_terms() {
    std::vector<std::size_t> order(size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return mons_[x] > mons_[y]; });
    std::vector<Monomial> m;
    m.reserve(size());
    for (auto k : order) m.push_back(mons_[k]);
    if (ring_ == Ring::Integers) {
      std::vector<mpz_class> c;
      c.reserve(size());
      for (auto k : order) c.push_back(std::move(coefs_[k]));
      coefs_ = std::move(c);
    }
    mons_ = std::move(m);
  }

  Ring ring_;
  std::vector<Monomial> mons_;
  std::vector<mpz_class> coefs_;
};

MultiPoly detail::TermAccumulator::finish() {
  MultiPoly r(ring_);
  std::vector<std::size_t> keep;
  keep.reserve(mons_.size());
  for (std::size_t i = 0; i < mons_.size(); ++i) {
    if (ring_ == Ring::F2 ? parity_[i] != 0 : coefs_[i] != 0) keep.push_back(i);
  }
  std::sort(keep.begin(), keep.end(),
            [&](std::size_t x, std::size_t y) { return mons_[x] > mons_[y]; });
  r.mons_.reserve(keep.size());
  for (auto k : keep) r.mons_.push_back(mons_[k]);
  if (ring_ == Ring::Integers) {
    r.coefs_.reserve(keep.size());
    for (auto k : keep) r.coefs_.push_back(std::move(coefs_[k]));
  }
  return r;
}

inline MultiPoly var(Ring ring, Var v, unsigned e = 1) {
  return MultiPoly::variable(ring, v, e);
}

}  // namespace g2c2

#endif  // G2C2_MULTIPOLY_HPP
