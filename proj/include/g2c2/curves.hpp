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

#ifndef G2C2_CURVES_HPP
#define G2C2_CURVES_HPP

#include <nlohmann/json.hpp>

#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "g2c2/char2.hpp"
#include "g2c2/fqpoly.hpp"

namespace g2c2 {

/// y^2 + a(x) y = b(x) over F_{2^n}, with a != 0 of degree <= 3 and b of
/// degree <= 6. The affine coordinate is x = x2/x1; x1 = 0 is infinity.
class Genus2Curve {
 public:
  Genus2Curve(FqPoly a, FqPoly b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.is_zero()) throw ZeroCubic();
    if (&a_.field() != &b_.field()) throw std::invalid_argument("a and b live over different fields");
    if (a_.degree() > 3) throw std::invalid_argument("a has degree above 3");
    if (b_.degree() > 6) throw std::invalid_argument("b has degree above 6");
  }

  const BinaryField& field() const { return a_.field(); }
  const FqPoly& a() const { return a_; }
  const FqPoly& b() const { return b_; }

  /// a0..a3, b0..b6 in the order used by the invariant polynomials.
  std::array<Fq, 11> coefficient_vector() const {
    std::array<Fq, 11> v{};
    for (int i = 0; i <= 3; ++i) v[i] = a_[i];
    for (int j = 0; j <= 6; ++j) v[4 + j] = b_[j];
    return v;
  }

  friend bool operator==(const Genus2Curve& x, const Genus2Curve& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

 private:
  FqPoly a_, b_;
};

/// Affine chart: gcd(a, a'^2 b + b'^2) = 1. Chart at infinity (reversed
/// coefficients, x' = 0): a3 != 0 or a2^2 b6 + b5^2 != 0.
inline bool is_smooth(const Genus2Curve& c) {
  const BinaryField& f = c.field();
  const FqPoly da = c.a().derivative(), db = c.b().derivative();
  const FqPoly h = da * da * c.b() + db * db;
  if (gcd(c.a(), h).degree() > 0) return false;
  if (c.a()[3] != 0) return true;
  return (f.mul(f.mul(c.a()[2], c.a()[2]), c.b()[6]) ^ f.mul(c.b()[5], c.b()[5])) != 0;
}

/// Number of distinct zeros of the cubic form a on the projective line, minus one.
inline int two_rank(const Genus2Curve& c) {
  const int affine = radical(c.a()).degree();
  return affine + (c.a().degree() < 3 ? 1 : 0) - 1;
}

/// Matrix (alpha beta; gamma delta) acting on (x1, x2) together with a
/// translation cubic v.
struct GroupElement {
  Fq alpha = 1, beta = 0, gamma = 0, delta = 1;
  std::optional<FqPoly> v;

  Fq det(const BinaryField& f) const { return f.mul(alpha, delta) ^ f.mul(beta, gamma); }
};

/// a -> det^-1 a o M, b -> det^-2 b o M, then b -> b + v^2 + a v.
inline Genus2Curve act(const GroupElement& g, const Genus2Curve& c) {
  const BinaryField& f = c.field();
  const Fq d = g.det(f);
  if (d == 0) throw SingularMatrix();
  const Fq di = f.inv(d);
  const FqPoly a = c.a().transform_form(3, g.alpha, g.beta, g.gamma, g.delta).scaled(di);
  FqPoly b = c.b().transform_form(6, g.alpha, g.beta, g.gamma, g.delta).scaled(f.mul(di, di));
  if (g.v) b = b + *g.v * *g.v + a * *g.v;
  return Genus2Curve(a, b);
}

/// A polynomial over F2 in a0..a3, b0..b6 flattened for repeated evaluation
/// over a binary field.
class CompiledPoly {
 public:
  using Exps = std::array<std::uint8_t, 11>;

  CompiledPoly() = default;
  explicit CompiledPoly(const MultiPoly& p) {
    for (const auto& m : p.monomials()) {
      Exps e{};
      for (int i = 0; i <= 3; ++i) e[i] = static_cast<std::uint8_t>(m.exponent(a_var(i)));
      for (int j = 0; j <= 6; ++j) e[4 + j] = static_cast<std::uint8_t>(m.exponent(b_var(j)));
      terms_.push_back({1, e});
    }
  }

  std::size_t size() const { return terms_.size(); }

  Fq evaluate(const BinaryField& f, const std::array<Fq, 11>& values) const {
    std::array<std::uint32_t, 11> logs{};
    std::uint32_t zero_mask = 0;
    for (int k = 0; k < 11; ++k) {
      if (values[k] == 0)
        zero_mask |= 1u << k;
      else
        logs[k] = f.log(values[k]);
    }
    Fq acc = 0;
    for (const auto& [coef, e] : terms_) {
      std::uint64_t s = 0;
      bool zero = false;
      for (int k = 0; k < 11 && !zero; ++k) {
        if (!e[k]) continue;
        if (zero_mask >> k & 1) zero = true;
        s += static_cast<std::uint64_t>(logs[k]) * e[k];
      }
      if (!zero) acc ^= f.mul(coef, f.exp(static_cast<std::uint32_t>(s % f.order())));
    }
    return acc;
  }

  /// Substitutes values for a0..a3 and merges the remaining b-monomials.
  CompiledPoly specialize_a(const BinaryField& f, const std::array<Fq, 4>& a) const {
    std::map<Exps, Fq> merged;
    std::array<Fq, 11> vals{};
    for (int i = 0; i < 4; ++i) vals[i] = a[i];
    for (const auto& [coef, e] : terms_) {
      Fq c = coef;
      for (int i = 0; i < 4 && c; ++i)
        if (e[i]) c = f.mul(c, f.pow(a[i], e[i]));
      if (!c) continue;
      Exps rest = e;
      for (int i = 0; i < 4; ++i) rest[i] = 0;
      merged[rest] ^= c;
    }
    CompiledPoly out;
    for (const auto& [e, c] : merged)
      if (c) out.terms_.push_back({c, e});
    return out;
  }

 private:
  std::vector<std::pair<Fq, Exps>> terms_;
};

/// The K-invariants compiled for evaluation at concrete curves.
class CurveInvariants {
 public:
  struct Entry {
    std::string name;
    unsigned weight;
    CompiledPoly poly;
  };

  explicit CurveInvariants(const KTable& k) {
    for (const auto* r : k.all()) entries_.push_back({r->name, r->weight, CompiledPoly(r->body)});
  }

  const std::vector<Entry>& entries() const { return entries_; }
  const Entry& entry(const std::string& name) const {
    for (const auto& e : entries_)
      if (e.name == name) return e;
    throw std::out_of_range("unknown invariant " + name);
  }

  /// Values in table order (increasing weight).
  std::vector<std::pair<std::string, Fq>> evaluate(const Genus2Curve& c) const {
    std::vector<std::pair<std::string, Fq>> out;
    const auto vals = c.coefficient_vector();
    for (const auto& e : entries_) out.emplace_back(e.name, e.poly.evaluate(c.field(), vals));
    return out;
  }

 private:
  std::vector<Entry> entries_;
};

/// Number of points of the smooth model over F_{2^{nm}}: affine points of
/// y^2 + a y = b plus the points over x' = 0 of the reversed chart.
inline long count_points(const Genus2Curve& c, unsigned m = 1) {
  const BinaryField& base = c.field();
  const unsigned nm = base.degree() * m;
  if (m == 0 || nm > BinaryField::kMaxDegree)
    throw FieldTooLarge("point count over F_2^" + std::to_string(nm) + " exceeds F_2^16");
  if (!is_smooth(c)) throw NotSmooth();
  const BinaryField& ext = BinaryField::get(nm);
  const FieldEmbedding emb(base, ext);
  const FqPoly a = c.a().mapped(emb), b = c.b().mapped(emb);
  // Over a point with A = a(x), B = b(x): one point if A = 0, else two or
  // none according to the trace of B / A^2.
  auto fibre = [&](Fq av, Fq bv) -> long {
    if (av == 0) return 1;
    return ext.trace(ext.div(bv, ext.mul(av, av))) == 0 ? 2 : 0;
  };
  long n = fibre(a[3], b[6]);
  for (Fq x = 0; x < ext.size(); ++x) n += fibre(a(x), b(x));
  return n;
}

/// L(t) = 1 + a1 t + a2 t^2 + q a1 t^3 + q^2 t^4 with coefficients low to high.
using LPolynomial = std::array<long long, 5>;

inline LPolynomial l_polynomial(const Genus2Curve& c) {
  if (!is_smooth(c)) throw NotSmooth();
  const long long q = 1ll << c.field().degree();
  const long long n1 = count_points(c, 1), n2 = count_points(c, 2);
  const long long a1 = n1 - q - 1;
  // Power sums of the Frobenius eigenvalues: p1 = -a1, p2 = q^2 + 1 - N2;
  // a2 = e2 = (p1^2 - p2) / 2.
  const long long p2 = q * q + 1 - n2;
  const long long twice_a2 = a1 * a1 - p2;
  if (twice_a2 % 2 != 0) throw VerificationFailure("point counts are inconsistent with a genus-2 L-polynomial");
  return {1, a1, twice_a2 / 2, q * a1, q * q};
}

/// Degree of L mod 2.
inline int two_rank_from_L(const LPolynomial& l) {
  for (int k = 4; k >= 0; --k)
    if (l[k] % 2 != 0) return k;
  return 0;
}

inline int two_rank_from_L(const Genus2Curve& c) { return two_rank_from_L(l_polynomial(c)); }

inline std::string l_polynomial_to_string(const LPolynomial& l) {
  std::string out;
  for (int k = 0; k < 5; ++k) {
    if (l[k] == 0) continue;
    const long long mag = l[k] < 0 ? -l[k] : l[k];
    if (out.empty())
      out += l[k] < 0 ? "-" : "";
    else
      out += l[k] < 0 ? " - " : " + ";
    const std::string mon = k == 0 ? "" : k == 1 ? "t" : "t^" + std::to_string(k);
    if (mon.empty() || mag != 1) out += std::to_string(mag);
    if (!mon.empty()) out += (mag != 1 ? "*" : "") + mon;
  }
  return out.empty() ? "0" : out;
}

template <class Rng>
Fq random_element(const BinaryField& f, Rng& rng) {
  return std::uniform_int_distribution<Fq>(0, f.size() - 1)(rng);
}

template <class Rng>
Fq random_nonzero(const BinaryField& f, Rng& rng) {
  return std::uniform_int_distribution<Fq>(1, f.size() - 1)(rng);
}

template <class Rng>
GroupElement random_group_element(const BinaryField& f, Rng& rng) {
  GroupElement g;
  do {
    g.alpha = random_element(f, rng);
    g.beta = random_element(f, rng);
    g.gamma = random_element(f, rng);
    g.delta = random_element(f, rng);
  } while (g.det(f) == 0);
  std::vector<Fq> v(4);
  for (auto& x : v) x = random_element(f, rng);
  g.v = FqPoly(f, v);
  return g;
}

template <class Rng>
Genus2Curve random_curve(const BinaryField& f, Rng& rng) {
  std::vector<Fq> a(4), b(7);
  do {
    for (auto& x : a) x = random_element(f, rng);
  } while (a == std::vector<Fq>(4, 0));
  for (auto& x : b) x = random_element(f, rng);
  return Genus2Curve(FqPoly(f, a), FqPoly(f, b));
}

template <class Rng>
Genus2Curve random_smooth_curve(const BinaryField& f, Rng& rng) {
  for (;;) {
    Genus2Curve c = random_curve(f, rng);
    if (is_smooth(c)) return c;
  }
}

namespace detail {

/// Polynomials in x over F_{2^n} with field constants written in g:
/// sums, products, nonnegative integer powers, parentheses, integer literals
/// (taken mod 2).
class CurveParser {
 public:
  CurveParser(std::string_view text, const BinaryField& f) : s_(text), f_(f) {}

  FqPoly parse() {
    FqPoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  FqPoly expr() {
    FqPoly acc = term();
    for (;;) {
      skip_ws();
      if (peek() == '+' || peek() == '-') {
        ++pos_;
        acc = acc + term();  // subtraction is addition in characteristic 2
      } else {
        return acc;
      }
    }
  }

  FqPoly term() {
    FqPoly acc = factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (peek() == '(' || peek() == 'x' || peek() == 'g') {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  FqPoly factor() {
    FqPoly base = primary();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    return base.pow(static_cast<unsigned>(integer()));
  }

  FqPoly primary() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      FqPoly p = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    if (c == 'x') {
      ++pos_;
      return FqPoly::x(f_);
    }
    if (c == 'g') {
      ++pos_;
      return FqPoly::constant(f_, f_.generator());
    }
    if (c == '-' || c == '+') {
      ++pos_;
      return primary();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return FqPoly::constant(f_, integer() % 2);
    fail(c ? "unexpected character" : "unexpected end of input");
  }

  unsigned long integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 6) fail("integer too large");
    return std::stoul(std::string(s_.substr(start, pos_ - start)));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  std::string_view s_;
  const BinaryField& f_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline FqPoly parse_fq_poly(std::string_view text, const BinaryField& f) {
  return detail::CurveParser(text, f).parse();
}

/// Parses a curve from the a and b polynomials; degree violations become ParseError.
inline Genus2Curve parse_curve(std::string_view a, std::string_view b, const BinaryField& f) {
  FqPoly pa = parse_fq_poly(a, f), pb = parse_fq_poly(b, f);
  if (pa.is_zero()) throw ParseError("a(x) must be nonzero");
  if (pa.degree() > 3) throw ParseError("a(x) must have degree at most 3");
  if (pb.degree() > 6) throw ParseError("b(x) must have degree at most 6");
  return Genus2Curve(std::move(pa), std::move(pb));
}

/// {"n", "a", "b", "smooth", "two_rank", "invariants", "L"}; field elements are
/// bit vectors written as integers, coefficients listed from x^0 upward.
inline nlohmann::ordered_json curve_record(const Genus2Curve& c, const CurveInvariants& inv) {
  nlohmann::ordered_json j;
  j["n"] = c.field().degree();
  nlohmann::ordered_json a = nlohmann::ordered_json::array(), b = nlohmann::ordered_json::array();
  for (int i = 0; i <= 3; ++i) a.push_back(c.a()[i]);
  for (int i = 0; i <= 6; ++i) b.push_back(c.b()[i]);
  j["a"] = a;
  j["b"] = b;
  const bool smooth = is_smooth(c);
  j["smooth"] = smooth;
  j["two_rank"] = two_rank(c);
  nlohmann::ordered_json values = nlohmann::ordered_json::object();
  for (const auto& [name, v] : inv.evaluate(c)) values[name] = v;
  j["invariants"] = values;
  if (smooth) {
    const LPolynomial l = l_polynomial(c);
    j["L"] = std::vector<long long>(l.begin(), l.end());
  } else {
    j["L"] = nullptr;
  }
  return j;
}

/// Outcome of classifying every (a, b) over a small field.
struct EnumerationReport {
  unsigned n = 0;
  std::uint64_t pairs = 0;
  std::uint64_t smooth = 0;
  /// (two_rank, K1 value, K10 != 0) -> number of smooth curves
  std::map<std::tuple<int, Fq, bool>, std::uint64_t> buckets;
  std::uint64_t k1_rank_violations = 0;     // K1 == 0 disagrees with two_rank <= 1
  std::uint64_t l_rank_violations = 0;      // two_rank != degree of L mod 2
  std::uint64_t k10_zero_on_smooth = 0;     // smooth curves with K10 == 0
  std::uint64_t k10_nonzero_singular = 0;   // singular curves with K10 != 0
  std::uint64_t rank2_even_a1 = 0;          // 2-rank-2 curves with even a1
  std::vector<nlohmann::ordered_json> examples;  // first few violating curves

  bool ok() const { return k1_rank_violations == 0 && l_rank_violations == 0; }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["pairs"] = pairs;
    j["smooth"] = smooth;
    nlohmann::ordered_json b = nlohmann::ordered_json::array();
    for (const auto& [key, count] : buckets)
      b.push_back({{"two_rank", std::get<0>(key)},
                   {"K1", std::get<1>(key)},
                   {"K10_nonzero", std::get<2>(key)},
                   {"count", count}});
    j["buckets"] = b;
    j["violations"] = {{"K1_zero_iff_two_rank_le_1", k1_rank_violations},
                       {"two_rank_equals_L_mod_2_degree", l_rank_violations},
                       {"K10_zero_on_smooth", k10_zero_on_smooth}};
    j["observations"] = {{"K10_nonzero_on_singular", k10_nonzero_singular},
                         {"two_rank_2_with_even_a1", rank2_even_a1}};
    j["examples"] = examples;
    return j;
  }
};

/// Exhaustive classification over F_{2^n}, n <= 2. `progress` is called
/// with the number of a-polynomials done and the total.
template <class Progress>
EnumerationReport enumerate_curves(const BinaryField& f, const CurveInvariants& inv, Progress&& progress) {
  if (f.degree() > 2) throw FieldTooLarge("exhaustive enumeration is limited to F_2 and F_4");
  EnumerationReport rep;
  rep.n = f.degree();
  const std::uint32_t q = f.size();
  const std::uint32_t a_total = q * q * q * q, b_total = a_total * q * q * q;
  const CompiledPoly& k10 = inv.entry("K10").poly;
  const CompiledPoly& k1 = inv.entry("K1").poly;
  for (std::uint32_t ai = 1; ai < a_total; ++ai) {
    std::array<Fq, 4> av{};
    std::vector<Fq> acoef(4);
    for (std::uint32_t i = 0, r = ai; i < 4; ++i, r /= q) acoef[i] = av[i] = r % q;
    const FqPoly a(f, acoef);
    std::array<Fq, 11> vals{};
    for (int i = 0; i < 4; ++i) vals[i] = av[i];
    const Fq k1v = k1.evaluate(f, vals);
    const CompiledPoly k10b = k10.specialize_a(f, av);
    for (std::uint32_t bi = 0; bi < b_total; ++bi) {
      std::vector<Fq> bcoef(7);
      std::uint32_t r = bi;
      for (int j = 0; j < 7; ++j, r /= q) bcoef[j] = r % q;
      const Genus2Curve c(a, FqPoly(f, bcoef));
      ++rep.pairs;
      for (int j = 0; j < 7; ++j) vals[4 + j] = bcoef[j];
      const bool k10_nonzero = k10b.evaluate(f, vals) != 0;
      if (!is_smooth(c)) {
        rep.k10_nonzero_singular += k10_nonzero;
        continue;
      }
      ++rep.smooth;
      const int rank = two_rank(c);
      const LPolynomial l = l_polynomial(c);
      ++rep.buckets[{rank, k1v, k10_nonzero}];
      bool bad = false;
      if ((k1v == 0) != (rank <= 1)) ++rep.k1_rank_violations, bad = true;
      if (rank != two_rank_from_L(l)) ++rep.l_rank_violations, bad = true;
      if (!k10_nonzero) ++rep.k10_zero_on_smooth, bad = true;
      if (rank == 2 && l[1] % 2 == 0) ++rep.rank2_even_a1;
      if (bad && rep.examples.size() < 10) rep.examples.push_back(curve_record(c, inv));
    }
    progress(ai, a_total - 1);
  }
  return rep;
}

inline EnumerationReport enumerate_curves(const BinaryField& f, const CurveInvariants& inv) {
  return enumerate_curves(f, inv, [](std::uint32_t, std::uint32_t) {});
}

}  // namespace g2c2

#endif  // G2C2_CURVES_HPP
