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

#ifndef G2C2_BINARY_FORM_HPP
#define G2C2_BINARY_FORM_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

#include "g2c2/poly_ops.hpp"
#include "g2c2/scaled.hpp"

namespace g2c2 {

/// Homogeneous form of a fixed degree in x1, x2 whose coefficients are
/// polynomials in the remaining variables, carried with a rational scale.
class BinaryForm {
 public:
  BinaryForm(unsigned degree, ScaledPoly value) : degree_(degree), value_(std::move(value)) {
    for (const auto& m : value_.body.monomials())
      if (m.exponent(Var::x1) + m.exponent(Var::x2) != degree_)
        throw std::invalid_argument("binary form is not homogeneous of degree " +
                                    std::to_string(degree_));
  }
  BinaryForm(unsigned degree, MultiPoly poly) : BinaryForm(degree, ScaledPoly(std::move(poly))) {}

  /// sum_i coeffs[i] * x1^(d-i) * x2^i
  static BinaryForm from_coefficients(const std::vector<MultiPoly>& coeffs) {
    const unsigned d = static_cast<unsigned>(coeffs.size()) - 1;
    MultiPoly p(Ring::Integers);
    for (unsigned i = 0; i <= d; ++i) {
      Monomial m;
      m.set(Var::x1, d - i);
      m.set(Var::x2, i);
      p += coeffs[i].times_term(m, 1);
    }
    return BinaryForm(d, std::move(p));
  }

  unsigned degree() const { return degree_; }
  const ScaledPoly& value() const { return value_; }

  /// Coefficient of x1^(d-i) x2^i (including the scale).
  ScaledPoly coefficient(unsigned i) const {
    std::vector<std::pair<Monomial, mpz_class>> terms;
    value_.body.for_each_term([&](const Monomial& m, const mpz_class& c) {
      if (m.exponent(Var::x2) == i) terms.emplace_back(m.without(Var::x1).without(Var::x2), c);
    });
    return ScaledPoly(MultiPoly::from_terms(Ring::Integers, terms), value_.scale);
  }

 private:
  unsigned degree_;
  ScaledPoly value_;
};

namespace detail {

inline mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline MultiPoly mixed_derivative(MultiPoly p, unsigned d1, unsigned d2) {
  for (unsigned i = 0; i < d1; ++i) p = partial_derivative(p, Var::x1);
  for (unsigned i = 0; i < d2; ++i) p = partial_derivative(p, Var::x2);
  return p;
}

}  // namespace detail

/// k-th transvectant (f, g)_k via the Cayley Omega process, normalized by
/// (m-k)!(n-k)!/(m! n!). The sum is formed over the integers and the
/// normalization is folded into the scale.
inline BinaryForm transvectant(const BinaryForm& f, const BinaryForm& g, unsigned k) {
  const unsigned m = f.degree(), n = g.degree();
  if (k > m || k > n) throw std::invalid_argument("transvectant order exceeds form degree");
  MultiPoly sum(Ring::Integers);
  for (unsigned i = 0; i <= k; ++i) {
    MultiPoly term = detail::mixed_derivative(f.value().body, k - i, i) *
                     detail::mixed_derivative(g.value().body, i, k - i);
    mpz_class c = detail::binomial(k, i);
    if (i % 2 == 1) c = -c;
    sum += c * term;
  }
  mpq_class norm(detail::factorial(m - k) * detail::factorial(n - k),
                 detail::factorial(m) * detail::factorial(n));
  norm.canonicalize();
  return BinaryForm(m + n - 2 * k, ScaledPoly(std::move(sum), norm * f.value().scale * g.value().scale));
}

}  // namespace g2c2

#endif  // G2C2_BINARY_FORM_HPP
