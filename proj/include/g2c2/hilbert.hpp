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

#ifndef G2C2_HILBERT_HPP
#define G2C2_HILBERT_HPP

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace g2c2 {

/// Power series with exact integer coefficients, truncated after t^order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order) : c_(order + 1) {}

  /// The polynomial sum coeffs[i] t^i, truncated.
  static TruncatedSeries polynomial(std::size_t order, const std::vector<std::pair<std::size_t, long>>& terms) {
    TruncatedSeries s(order);
    for (const auto& [e, c] : terms)
      if (e <= order) s.c_[e] += c;
    return s;
  }
  static TruncatedSeries one(std::size_t order) { return polynomial(order, {{0, 1}}); }

  std::size_t order() const { return c_.size() - 1; }
  const mpz_class& operator[](std::size_t k) const { return c_.at(k); }
  const std::vector<mpz_class>& coefficients() const { return c_; }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  friend TruncatedSeries operator+(TruncatedSeries x, const TruncatedSeries& y) {
    x.check(y);
    for (std::size_t k = 0; k < x.c_.size(); ++k) x.c_[k] += y.c_[k];
    return x;
  }
  friend TruncatedSeries operator-(TruncatedSeries x, const TruncatedSeries& y) {
    x.check(y);
    for (std::size_t k = 0; k < x.c_.size(); ++k) x.c_[k] -= y.c_[k];
    return x;
  }
  TruncatedSeries operator-() const { return TruncatedSeries(order()) - *this; }

  friend TruncatedSeries operator*(const TruncatedSeries& x, const TruncatedSeries& y) {
    x.check(y);
    TruncatedSeries r(x.order());
    const std::size_t n = x.c_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (x.c_[i] == 0) continue;
      for (std::size_t j = 0; i + j < n; ++j)
        if (y.c_[j] != 0) mpz_addmul(r.c_[i + j].get_mpz_t(), x.c_[i].get_mpz_t(), y.c_[j].get_mpz_t());
    }
    return r;
  }

  /// Multiplication by t^d.
  TruncatedSeries shifted(std::size_t d) const {
    TruncatedSeries r(order());
    for (std::size_t k = d; k < c_.size(); ++k) r.c_[k] = c_[k - d];
    return r;
  }

  /// Division by 1 - t^d, i.e. strided prefix sums.
  TruncatedSeries divided_by_one_minus(std::size_t d) const {
    TruncatedSeries r = *this;
    for (std::size_t k = d; k < c_.size(); ++k) r.c_[k] += r.c_[k - d];
    return r;
  }

  /// Exact long division by a series whose constant term is +1 or -1.
  TruncatedSeries divided_by(const TruncatedSeries& den) const {
    check(den);
    const mpz_class& d0 = den.c_[0];
    if (d0 != 1 && d0 != -1) throw std::invalid_argument("series divisor must have unit constant term");
    TruncatedSeries q(order());
    for (std::size_t k = 0; k < c_.size(); ++k) {
      mpz_class acc = c_[k];
      for (std::size_t j = 1; j <= k; ++j)
        if (den.c_[j] != 0) mpz_submul(acc.get_mpz_t(), den.c_[j].get_mpz_t(), q.c_[k - j].get_mpz_t());
      q.c_[k] = d0 == 1 ? acc : mpz_class(-acc);
    }
    return q;
  }

 private:
  void check(const TruncatedSeries& y) const {
    if (y.c_.size() != c_.size()) throw std::invalid_argument("series orders differ");
  }

  std::vector<mpz_class> c_;
};

/// Generator weights and relation weight of the ring presentation.
struct RingPresentation {
  std::array<unsigned, 5> generator_weights = {1, 10, 12, 13, 48};
  unsigned relation_weight = 52;
};

/// G = (1 - t^52) / ((1-t)(1-t^10)(1-t^12)(1-t^13)(1-t^48)) to order n.
inline TruncatedSeries expand_G(std::size_t n, const RingPresentation& ring = {}) {
  TruncatedSeries g = TruncatedSeries::polynomial(n, {{0, 1}, {ring.relation_weight, -1}});
  for (unsigned d : ring.generator_weights) g = g.divided_by_one_minus(d);
  return g;
}

/// The same series, dividing by the multiplied-out denominator instead.
inline TruncatedSeries expand_G_by_long_division(std::size_t n, const RingPresentation& ring = {}) {
  TruncatedSeries den = TruncatedSeries::one(n);
  for (unsigned d : ring.generator_weights) den = den * TruncatedSeries::polynomial(n, {{0, 1}, {d, -1}});
  return TruncatedSeries::polynomial(n, {{0, 1}, {ring.relation_weight, -1}}).divided_by(den);
}

/// Exponents (alpha, beta, gamma, delta) with 10 alpha + 12 beta + 13 gamma + 48 delta = k
/// and gamma <= 3, in lexicographic order.
inline std::vector<std::array<unsigned, 4>> monomial_basis_N(unsigned k) {
  std::vector<std::array<unsigned, 4>> out;
  for (unsigned a = 0; 10 * a <= k; ++a)
    for (unsigned b = 0; 10 * a + 12 * b <= k; ++b)
      for (unsigned c = 0; c <= 3 && 10 * a + 12 * b + 13 * c <= k; ++c) {
        const unsigned rest = k - 10 * a - 12 * b - 13 * c;
        if (rest % 48 == 0) out.push_back({a, b, c, rest / 48});
      }
  return out;
}

/// floor(k/12) + 1
inline long c_of(long k) { return k / 12 + 1; }

struct SeriesCheck {
  std::string id;
  std::string statement;
  std::optional<std::size_t> first_violation;  // index of the first failing coefficient
  bool ok() const { return !first_violation; }
};

struct SeriesReport {
  std::size_t order = 0;
  std::vector<SeriesCheck> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok()) return false;
    return true;
  }
};

inline std::optional<std::size_t> first_difference(const TruncatedSeries& x, const TruncatedSeries& y) {
  for (std::size_t k = 0; k <= x.order(); ++k)
    if (x[k] != y[k]) return k;
  return std::nullopt;
}

inline SeriesReport verify_series_identities(std::size_t n = 200) {
  if (n < 100) throw std::invalid_argument("series identities need order >= 100");
  SeriesReport rep;
  rep.order = n;
  const TruncatedSeries g = expand_G(n);

  {
    const TruncatedSeries lhs =
        g - g.shifted(10) -
        TruncatedSeries::one(n).divided_by_one_minus(1).divided_by_one_minus(12).divided_by_one_minus(12);
    const TruncatedSeries num =
        -TruncatedSeries::polynomial(n, {{26, 1}, {25, 1}, {24, 1}, {13, 1}, {12, 1}, {0, 1}}).shifted(12);
    const TruncatedSeries den = TruncatedSeries::polynomial(n, {{60, 1}, {48, -1}, {12, -1}, {0, 1}});
    rep.checks.push_back({"rational-function",
                          "G - t^10 G - 1/((1-t)(1-t^12)^2) = -t^12 (t^26+t^25+t^24+t^13+t^12+1)/(t^60-t^48-t^12+1)",
                          first_difference(lhs, num.divided_by(den))});
  }
  {
    SeriesCheck c{"step-10", "r(k) - r(k-10) = c(k)(c(k)+1)/2 for k not 0,1,2 mod 12", std::nullopt};
    for (std::size_t k = 10; k <= n && !c.first_violation; ++k) {
      if (k % 12 <= 2) continue;
      const long ck = c_of(static_cast<long>(k));
      if (g[k] - g[k - 10] != ck * (ck + 1) / 2) c.first_violation = k;
    }
    rep.checks.push_back(c);
  }
  {
    SeriesCheck c{"step-1", "r(k) - r(k-1) = |N_k|", std::nullopt};
    for (std::size_t k = 1; k <= n && !c.first_violation; ++k)
      if (g[k] - g[k - 1] != monomial_basis_N(static_cast<unsigned>(k)).size()) c.first_violation = k;
    rep.checks.push_back(c);
  }
  {
    SeriesCheck c{"small-weights", "r(1..9) = 1, r(10) = 2, r(11) = 2, r(12) = 3, r(13) = 4", std::nullopt};
    const std::array<long, 14> expected = {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 3, 4};
    for (std::size_t k = 1; k < expected.size() && !c.first_violation; ++k)
      if (g[k] != expected[k]) c.first_violation = k;
    rep.checks.push_back(c);
  }
  return rep;
}

struct DegreeIdentity {
  mpz_class denominator_product;  // 1*10*12*13*48
  mpq_class value;                // 52 / product
  bool ok() const { return value == mpq_class(1, 1440); }
};

inline DegreeIdentity degree_identity_check(const RingPresentation& ring = {}) {
  DegreeIdentity d;
  d.denominator_product = 1;
  for (unsigned w : ring.generator_weights) d.denominator_product *= w;
  d.value = mpq_class(mpz_class(ring.relation_weight), d.denominator_product);
  d.value.canonicalize();
  return d;
}

struct AsymptoticFit {
  std::size_t order = 0;
  std::size_t step = 0;
  bool exact = false;  // step is a full period, so the third difference is exact
  mpq_class lambda;    // estimate of the k^3 coefficient
  std::string closest;  // "1/8640" or "1/1080"
};

/// Estimates lambda in r(k) = lambda k^3 + O(k^2) from the third difference
/// r(3h) - 3 r(2h) + 3 r(h) - r(0) = 6 lambda h^3. r is a quasi-polynomial
/// whose lower coefficients have period P = lcm of the generator weights, so
/// the estimate is exact once h = P fits (order >= 3P); otherwise h is the
/// largest multiple of 12 that fits and the result is an approximation.
inline AsymptoticFit asymptotic_fit(std::size_t n = 10000, const RingPresentation& ring = {}) {
  if (n < 2000) throw std::invalid_argument("asymptotic fit needs order >= 2000");
  std::size_t period = 1;
  for (unsigned w : ring.generator_weights) period = std::lcm(period, static_cast<std::size_t>(w));
  AsymptoticFit fit;
  fit.order = n;
  fit.exact = 3 * period <= n;
  fit.step = fit.exact ? period : (n / 3) / 12 * 12;
  const TruncatedSeries g = expand_G(n, ring);
  const std::size_t h = fit.step;
  const mpz_class diff = g[3 * h] - 3 * g[2 * h] + 3 * g[h] - g[0];
  const mpz_class hz = h;
  fit.lambda = mpq_class(diff, 6 * hz * hz * hz);
  fit.lambda.canonicalize();
  const mpq_class d1 = abs(fit.lambda - mpq_class(1, 8640)), d2 = abs(fit.lambda - mpq_class(1, 1080));
  fit.closest = d1 <= d2 ? "1/8640" : "1/1080";
  return fit;
}

}  // namespace g2c2

#endif  // G2C2_HILBERT_HPP
