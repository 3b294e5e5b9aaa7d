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

#ifndef G2C2_POLY_OPS_HPP
#define G2C2_POLY_OPS_HPP

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "g2c2/multipoly.hpp"

namespace g2c2 {

/// Images of variables for simultaneous substitution; unbound variables map to
/// themselves.
using Bindings = std::map<Var, MultiPoly>;

namespace detail {

class Substituter {
 public:
  Substituter(Ring ring, const Bindings& bindings) : ring_(ring) {
    for (const auto& [v, img] : bindings) {
      if (img.ring() != ring) throw RingMismatch();
      images_[index(v)] = img;
    }
  }

  MultiPoly run(const MultiPoly& p) {
    if (p.is_zero()) return MultiPoly(ring_);
    order_.resize(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) order_[i] = i;
    src_ = &p;
    std::sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
      return Monomial::lex_greater(p.monomial_at(x), p.monomial_at(y));
    });
    return expand(0, order_.size(), 0);
  }

 private:
  // Terms order_[lo..hi) agree on the exponents of variables < k.
  MultiPoly expand(std::size_t lo, std::size_t hi, int k) {
    while (k < kNumVars) {
      const Var v = var_at(k);
      if (src_->monomial_at(order_[lo]).exponent(v) != 0 ||
          src_->monomial_at(order_[hi - 1]).exponent(v) != 0)
        break;
      ++k;
    }
    if (k == kNumVars) return MultiPoly::constant(ring_, src_->coef(order_[lo]));
    const Var v = var_at(k);
    MultiPoly result(ring_);
    std::size_t i = lo;
    while (i < hi) {
      const unsigned e = src_->monomial_at(order_[i]).exponent(v);
      std::size_t j = i;
      while (j < hi && src_->monomial_at(order_[j]).exponent(v) == e) ++j;
      MultiPoly inner = expand(i, j, k + 1);
      if (e > 0) inner = images_[k] ? inner * power(k, e)
                                    : inner.times_term(Monomial::of(v, e), 1);
      result += inner;
      i = j;
    }
    return result;
  }

  const MultiPoly& power(int k, unsigned e) {
    auto& cache = powers_[k];
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    MultiPoly value = e == 1 ? *images_[k] : images_[k]->pow(e);
    return cache.emplace(e, std::move(value)).first->second;
  }

  Ring ring_;
  std::array<std::optional<MultiPoly>, kNumVars> images_;
  std::array<std::map<unsigned, MultiPoly>, kNumVars> powers_;
  std::vector<std::size_t> order_;
  const MultiPoly* src_ = nullptr;
};

}  // namespace detail

/// Simultaneous substitution v -> bindings[v]; a ring homomorphism.
inline MultiPoly substitute(const MultiPoly& p, const Bindings& bindings) {
  detail::Substituter sub(p.ring(), bindings);
  return sub.run(p);
}

/// Returns r with q * r == p, or throws NotDivisible.
inline MultiPoly exact_divide(const MultiPoly& p, const MultiPoly& q) {
  if (p.ring() != q.ring()) throw RingMismatch();
  if (q.is_zero()) throw ZeroPolynomial("exact_divide: divisor is zero");
  const Ring ring = p.ring();
  const bool f2 = ring == Ring::F2;
  std::map<Monomial, mpz_class, std::greater<>> rem;
  p.for_each_term([&](const Monomial& m, const mpz_class& c) { rem.emplace(m, c); });
  const Monomial lq = q.leading_monomial();
  const mpz_class cq = q.coef(0);
  std::vector<std::pair<Monomial, mpz_class>> quotient;
  while (!rem.empty()) {
    const auto [lm, lc] = *rem.begin();
    if (!lq.divides(lm))
      throw NotDivisible("leading term " + lm.to_string() + " not divisible");
    if (!f2 && !mpz_divisible_p(lc.get_mpz_t(), cq.get_mpz_t()))
      throw NotDivisible("leading coefficient not divisible");
    const Monomial tm = lq.quotient_of(lm);
    const mpz_class tc = f2 ? mpz_class(1) : mpz_class(lc / cq);
    quotient.emplace_back(tm, tc);
    q.for_each_term([&](const Monomial& m, const mpz_class& c) {
      const Monomial prod = m * tm;
      auto it = rem.find(prod);
      if (f2) {
        if (it == rem.end()) rem.emplace(prod, 1);
        else rem.erase(it);
        return;
      }
      if (it == rem.end()) {
        rem.emplace(prod, -(c * tc));
      } else {
        it->second -= c * tc;
        if (it->second == 0) rem.erase(it);
      }
    });
  }
  return MultiPoly::from_terms(ring, quotient);
}

inline MultiPoly partial_derivative(const MultiPoly& p, Var v) {
  std::vector<std::pair<Monomial, mpz_class>> terms;
  p.for_each_term([&](const Monomial& m, const mpz_class& c) {
    const unsigned e = m.exponent(v);
    if (e == 0) return;
    Monomial d = m;
    d.set(v, e - 1);
    terms.emplace_back(d, c * e);
  });
  return MultiPoly::from_terms(p.ring(), terms);
}

/// Minimum 2-adic valuation over all coefficients.
inline unsigned content_2adic(const MultiPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("content_2adic of zero");
  if (p.ring() == Ring::F2) return 0;
  unsigned v = std::numeric_limits<unsigned>::max();
  for (std::size_t i = 0; i < p.size(); ++i)
    v = std::min<unsigned>(v, static_cast<unsigned>(mpz_scan1(p.coef(i).get_mpz_t(), 0)));
  return v;
}

/// Divides by the full power of 2 in the content and reduces modulo 2.
inline MultiPoly divide_pow2_and_reduce(const MultiPoly& p) {
  const unsigned v = content_2adic(p);
  if (p.ring() == Ring::F2) return p;
  std::vector<std::pair<Monomial, mpz_class>> terms;
  p.for_each_term([&](const Monomial& m, const mpz_class& c) {
    if (mpz_tstbit(c.get_mpz_t(), v)) terms.emplace_back(m, 1);
  });
  return MultiPoly::from_terms(Ring::F2, terms);
}

/// gcd of the coefficients (positive); zero for the zero polynomial.
inline mpz_class integer_content(const MultiPoly& p) {
  mpz_class g = 0;
  p.for_each_term([&](const Monomial&, const mpz_class& c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  });
  return g;
}

/// Divides every coefficient by d, which must divide all of them.
inline MultiPoly divide_coefficients(const MultiPoly& p, const mpz_class& d) {
  std::vector<std::pair<Monomial, mpz_class>> terms;
  terms.reserve(p.size());
  p.for_each_term([&](const Monomial& m, const mpz_class& c) {
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
      throw NotDivisible("coefficient not divisible by " + d.get_str());
    terms.emplace_back(m, mpz_class(c / d));
  });
  return MultiPoly::from_terms(p.ring(), terms);
}

/// Evaluates at rational values; unlisted variables evaluate to zero.
inline mpq_class evaluate(const MultiPoly& p, const std::map<Var, mpq_class>& values) {
  mpq_class total = 0;
  std::array<std::vector<mpq_class>, kNumVars> powers;
  for (const auto& [v, x] : values) powers[index(v)].push_back(1);
  p.for_each_term([&](const Monomial& m, const mpz_class& c) {
    mpq_class term = c;
    for (int k = 0; k < kNumVars && term != 0; ++k) {
      const unsigned e = m.exponent(var_at(k));
      if (e == 0) continue;
      auto it = values.find(var_at(k));
      if (it == values.end()) {
        term = 0;
        break;
      }
      auto& pw = powers[k];
      while (pw.size() <= e) pw.push_back(pw.back() * it->second);
      term *= pw[e];
    }
    total += term;
  });
  return total;
}

}  // namespace g2c2

#endif  // G2C2_POLY_OPS_HPP
