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

#ifndef G2C2_SCALED_HPP
#define G2C2_SCALED_HPP

#include <gmpxx.h>

#include <string>

#include "g2c2/multipoly.hpp"
#include "g2c2/poly_ops.hpp"

namespace g2c2 {

/// Exact rational constant; mpq_class keeps numerator and denominator coprime.
using RationalConstant = mpq_class;

/// 2-adic valuation of a nonzero rational.
inline long two_adic_valuation(const RationalConstant& q) {
  return static_cast<long>(mpz_scan1(q.get_num_mpz_t(), 0)) -
         static_cast<long>(mpz_scan1(q.get_den_mpz_t(), 0));
}

/// "±p/q·2^e" with p, q odd and positive.
inline std::string format_scale(const RationalConstant& q) {
  if (q == 0) return "+0/1·2^0";
  const long e = two_adic_valuation(q);
  mpz_class num = abs(q.get_num());
  mpz_class den = q.get_den();
  mpz_fdiv_q_2exp(num.get_mpz_t(), num.get_mpz_t(), mpz_scan1(num.get_mpz_t(), 0));
  mpz_fdiv_q_2exp(den.get_mpz_t(), den.get_mpz_t(), mpz_scan1(den.get_mpz_t(), 0));
  return std::string(q < 0 ? "-" : "+") + num.get_str() + "/" + den.get_str() + "·2^" +
         std::to_string(e);
}

/// A rational multiple of an integral polynomial: value = scale * body.
///
/// Normal form: body primitive (coefficient gcd 1) and scale > 0, so the
/// representation of a nonzero value is unique. Zero is body 0, scale 1.
struct ScaledPoly {
  MultiPoly body{Ring::Integers};
  RationalConstant scale{1};

  ScaledPoly() = default;
  ScaledPoly(MultiPoly b, RationalConstant s) : body(std::move(b)), scale(std::move(s)) {
    normalize();
  }
  explicit ScaledPoly(MultiPoly b) : ScaledPoly(std::move(b), 1) {}

  bool is_zero() const { return body.is_zero(); }

  /// The scaled polynomial with rational coefficients, as num/den integral
  /// parts; used for coefficient-level comparisons.
  RationalConstant coefficient(const Monomial& m) const { return scale * mpq_class(body.coefficient(m)); }

  friend ScaledPoly operator*(const ScaledPoly& x, const ScaledPoly& y) {
    return ScaledPoly(x.body * y.body, x.scale * y.scale);
  }
  friend ScaledPoly operator*(const RationalConstant& q, const ScaledPoly& x) {
    return ScaledPoly(x.body, q * x.scale);
  }
  friend ScaledPoly operator+(const ScaledPoly& x, const ScaledPoly& y) { return combine(x, y, 1); }
  friend ScaledPoly operator-(const ScaledPoly& x, const ScaledPoly& y) { return combine(x, y, -1); }
  friend bool operator==(const ScaledPoly& x, const ScaledPoly& y) {
    return x.body == y.body && x.scale == y.scale;
  }

  ScaledPoly pow(unsigned e) const {
    mpq_class s;
    mpz_pow_ui(s.get_num_mpz_t(), scale.get_num_mpz_t(), e);
    mpz_pow_ui(s.get_den_mpz_t(), scale.get_den_mpz_t(), e);
    return ScaledPoly(body.pow(e), s);
  }

  mpq_class evaluate_at(const std::map<Var, mpq_class>& values) const {
    return scale * g2c2::evaluate(body, values);
  }

 private:
  static ScaledPoly combine(const ScaledPoly& x, const ScaledPoly& y, int sign) {
    if (x.is_zero()) return sign > 0 ? y : mpq_class(-1) * y;
    if (y.is_zero()) return x;
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), x.scale.get_den_mpz_t(), y.scale.get_den_mpz_t());
    const mpz_class nx = x.scale.get_num() * (l / x.scale.get_den());
    mpz_class ny = y.scale.get_num() * (l / y.scale.get_den());
    if (sign < 0) ny = -ny;
    return ScaledPoly(nx * x.body + ny * y.body, mpq_class(1, l));
  }

  void normalize() {
    if (body.ring() != Ring::Integers) throw RingMismatch();
    scale.canonicalize();
    if (body.is_zero() || scale == 0) {
      body = MultiPoly(Ring::Integers);
      scale = 1;
      return;
    }
    const mpz_class g = integer_content(body);
    if (g != 1) body = divide_coefficients(body, g);
    scale *= g;
    if (scale < 0) {
      scale = -scale;
      body = -body;
    }
  }
};

}  // namespace g2c2

#endif  // G2C2_SCALED_HPP
