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

#ifndef G2C2_FQPOLY_HPP
#define G2C2_FQPOLY_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "g2c2/gf2n.hpp"

namespace g2c2 {

/// Univariate polynomial over F_{2^n}; coefficient i multiplies x^i and the
/// leading stored coefficient is nonzero.
class FqPoly {
 public:
  explicit FqPoly(const BinaryField& f) : f_(&f) {}
  FqPoly(const BinaryField& f, std::vector<Fq> coeffs) : f_(&f), c_(std::move(coeffs)) { trim(); }

  static FqPoly constant(const BinaryField& f, Fq c) { return FqPoly(f, {c}); }
  static FqPoly x(const BinaryField& f) { return FqPoly(f, {0, 1}); }

  const BinaryField& field() const { return *f_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient of x^i (zero beyond the degree).
  Fq operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<Fq>& coefficients() const { return c_; }
  Fq leading() const { return c_.empty() ? 0 : c_.back(); }

  friend bool operator==(const FqPoly& p, const FqPoly& q) { return p.f_ == q.f_ && p.c_ == q.c_; }

  friend FqPoly operator+(const FqPoly& p, const FqPoly& q) {
    std::vector<Fq> r(std::max(p.c_.size(), q.c_.size()), 0);
    for (std::size_t i = 0; i < p.c_.size(); ++i) r[i] ^= p.c_[i];
    for (std::size_t i = 0; i < q.c_.size(); ++i) r[i] ^= q.c_[i];
    return FqPoly(*p.f_, std::move(r));
  }
  friend FqPoly operator*(const FqPoly& p, const FqPoly& q) {
    if (p.is_zero() || q.is_zero()) return FqPoly(*p.f_);
    std::vector<Fq> r(p.c_.size() + q.c_.size() - 1, 0);
    for (std::size_t i = 0; i < p.c_.size(); ++i)
      for (std::size_t j = 0; j < q.c_.size(); ++j) r[i + j] ^= p.f_->mul(p.c_[i], q.c_[j]);
    return FqPoly(*p.f_, std::move(r));
  }
  FqPoly scaled(Fq s) const {
    std::vector<Fq> r(c_);
    for (auto& c : r) c = f_->mul(c, s);
    return FqPoly(*f_, std::move(r));
  }
  FqPoly pow(unsigned e) const {
    FqPoly r = constant(*f_, 1), b = *this;
    for (; e; e >>= 1, b = b * b)
      if (e & 1) r = r * b;
    return r;
  }

  /// Quotient and remainder; throws DivisionByZero for a zero divisor.
  std::pair<FqPoly, FqPoly> divmod(const FqPoly& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<Fq> rem(c_), quo(c_.size() >= d.c_.size() ? c_.size() - d.c_.size() + 1 : 0, 0);
    const Fq lead_inv = f_->inv(d.leading());
    for (int k = degree(); k >= d.degree(); --k) {
      const Fq coef = f_->mul(rem[k], lead_inv);
      if (coef == 0) continue;
      quo[k - d.degree()] = coef;
      for (int j = 0; j <= d.degree(); ++j) rem[k - d.degree() + j] ^= f_->mul(coef, d.c_[j]);
    }
    return {FqPoly(*f_, std::move(quo)), FqPoly(*f_, std::move(rem))};
  }
  FqPoly operator/(const FqPoly& d) const { return divmod(d).first; }
  FqPoly operator%(const FqPoly& d) const { return divmod(d).second; }

  FqPoly monic() const { return is_zero() ? *this : scaled(f_->inv(leading())); }

  FqPoly derivative() const {
    std::vector<Fq> r(c_.size() > 1 ? c_.size() - 1 : 0, 0);
    for (std::size_t i = 1; i < c_.size(); i += 2) r[i - 1] = c_[i];
    return FqPoly(*f_, std::move(r));
  }

  /// p with p^2 == *this; requires all odd coefficients to vanish.
  FqPoly sqrt() const {
    std::vector<Fq> r((c_.size() + 1) / 2, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i % 2 == 1 && c_[i] != 0) throw VerificationFailure("polynomial is not a square");
      if (i % 2 == 0) r[i / 2] = f_->sqrt(c_[i]);
    }
    return FqPoly(*f_, std::move(r));
  }

  Fq operator()(Fq x) const {
    Fq acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = f_->mul(acc, x) ^ *it;
    return acc;
  }

  /// The form of degree d with these coefficients, pulled back along
  /// x1 -> alpha x1 + beta x2, x2 -> gamma x1 + delta x2 and dehomogenized at x1 = 1:
  /// sum c_i (alpha + beta x)^(d-i) (gamma + delta x)^i.
  FqPoly transform_form(unsigned d, Fq alpha, Fq beta, Fq gamma, Fq delta) const {
    const FqPoly u(*f_, {alpha, beta}), w(*f_, {gamma, delta});
    FqPoly r(*f_);
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0)
        r = r + (u.pow(d - static_cast<unsigned>(i)) * w.pow(static_cast<unsigned>(i))).scaled(c_[i]);
    return r;
  }

  /// Coefficients reversed as a form of degree d: x^d p(1/x).
  FqPoly reversed(unsigned d) const {
    std::vector<Fq> r(d + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[d - i] = c_[i];
    return FqPoly(*f_, std::move(r));
  }

  /// Image under a field embedding.
  FqPoly mapped(const FieldEmbedding& e) const {
    std::vector<Fq> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = e(c_[i]);
    return FqPoly(e.target(), std::move(r));
  }

  /// "x^3 + g*x + g+1" style, with compound coefficients parenthesized; zero is "0".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      if (c_[i] == 0) continue;
      if (!out.empty()) out += " + ";
      const std::string c = f_->to_string(c_[i]);
      const bool compound = c.find('+') != std::string::npos;
      const std::string mon = i == 0 ? "" : i == 1 ? "x" : "x^" + std::to_string(i);
      if (mon.empty())
        out += compound ? "(" + c + ")" : c;
      else if (c_[i] == 1)
        out += mon;
      else
        out += (compound ? "(" + c + ")" : c) + "*" + mon;
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  const BinaryField* f_;
  std::vector<Fq> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
inline FqPoly gcd(FqPoly p, FqPoly q) {
  while (!q.is_zero()) {
    FqPoly r = p % q;
    p = std::move(q);
    q = std::move(r);
  }
  return p.monic();
}

/// Monic product of the distinct irreducible factors of p (p nonzero).
inline FqPoly radical(const FqPoly& p) {
  if (p.degree() <= 0) return FqPoly::constant(p.field(), 1);
  const FqPoly d = p.derivative();
  if (d.is_zero()) return radical(p.sqrt());
  const FqPoly g = gcd(p, d);
  // Irreducible factors of p whose multiplicity is odd.
  const FqPoly odd = (p / g).monic();
  const FqPoly rest = radical(g);
  return (odd * rest / gcd(odd, rest)).monic();
}

}  // namespace g2c2

#endif  // G2C2_FQPOLY_HPP
