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

#ifndef G2C2_VERIFY_HPP
#define G2C2_VERIFY_HPP

#include <nlohmann/json.hpp>

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "g2c2/anchors.hpp"
#include "g2c2/curves.hpp"
#include "g2c2/hilbert.hpp"
#include "g2c2/invariance.hpp"
#include "g2c2/poly_io.hpp"
#include "g2c2/relations.hpp"

namespace g2c2 {

struct CheckResult {
  std::string id;
  std::string anchor;  // the expected statement
  bool pass = false;
  std::string detail;
  bool informational = false;  // reported but never fails the suite
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass && !c.informational) return false;
    return true;
  }

  void add(std::string id, std::string anchor, bool pass, std::string detail = {}) {
    checks.push_back({std::move(id), std::move(anchor), pass, std::move(detail), false});
  }
  void info(std::string id, std::string anchor, std::string detail) {
    checks.push_back({std::move(id), std::move(anchor), true, std::move(detail), true});
  }
  void append(const VerifyReport& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

  std::string to_text() const {
    std::ostringstream out;
    for (const auto& c : checks) {
      out << (c.informational ? "INFO" : c.pass ? "PASS" : "FAIL") << "  " << c.id << "  [" << c.anchor << "]";
      if (!c.detail.empty()) out << "  " << c.detail;
      out << "\n";
    }
    out << suite << ": " << (ok() ? "all checks passed" : "FAILED") << "\n";
    return out.str();
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["ok"] = ok();
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks)
      j["checks"].push_back({{"id", c.id},
                             {"anchor", c.anchor},
                             {"pass", c.pass},
                             {"informational", c.informational},
                             {"detail", c.detail}});
    return j;
  }
};

/// "0" for the zero polynomial, otherwise the term count and leading monomial.
inline std::string residual_summary(const MultiPoly& r) {
  if (r.is_zero()) return "residual 0";
  return "residual has " + std::to_string(r.size()) + " terms, leading " + r.leading_monomial().to_string();
}

inline VerifyReport verify_invariants(const IgusaTable& j, const KTable& k, unsigned independence_weight = 20) {
  VerifyReport rep;
  rep.suite = "invariants";
  const auto f2 = [](const char* s) { return parse_poly(s, Ring::F2); };

  rep.add("J2.formula", "J2 = 2^-2 (-120 c0c6 + 20 c1c5 - 8 c2c4 + 3 c3^2)", j.J2.value == j2_anchor());
  {
    const Monomial m1 = Monomial::of(Var::c0, 2) * Monomial::of(Var::c6, 2);
    const Monomial m2 = Monomial::of(Var::c0) * Monomial::of(Var::c1) * Monomial::of(Var::c5) * Monomial::of(Var::c6);
    mpq_class e1(anchors::kJ4LeadNumerators[0], anchors::kJ4LeadDenominator);
    mpq_class e2(anchors::kJ4LeadNumerators[1], anchors::kJ4LeadDenominator);
    e1.canonicalize();
    e2.canonicalize();
    const mpq_class g1 = j.J4.value.coefficient(m1), g2 = j.J4.value.coefficient(m2);
    rep.add("J4.leading", "J4 = 2^-7 (2640 c0^2c6^2 - 880 c0c1c5c6 + ...)", g1 == e1 && g2 == e2,
            "coefficients " + g1.get_str() + ", " + g2.get_str());
  }
  {
    const ScaledPoly rel = j.J4.value.pow(2) - j.J2.value * j.J6.value + mpq_class(4) * j.J8.value;
    rep.add("J.quadratic", "J4^2 - J2 J6 + 4 J8 = 0", rel.body.is_zero(),
            rel.body.is_zero() ? "residual 0" : std::to_string(rel.body.size()) + " terms");
  }

  const MultiPoly k1sq = k.K1.body.square();
  rep.add("K1", std::string("K1 = ") + anchors::kK1, k.K1.body == f2(anchors::kK1));
  rep.add("K2", "reduce(J2) = K1^2", reduce_invariant(j.J2) == k1sq && k.K2.body == k1sq,
          residual_summary(reduce_invariant(j.J2) + k1sq));
  rep.add("K3", "K3 = K4 / K1 equals the displayed 8-term polynomial", k.K3.body == f2(anchors::kK3),
          residual_summary(k.K3.body + f2(anchors::kK3)));
  rep.add("K4", "K4 = K1 K3", k.K4.body == k.K1.body * k.K3.body,
          "source " + std::to_string(k.k4_combination.x) + "*J2^2 + " + std::to_string(k.k4_combination.y) + "*J4");
  {
    const auto& c = k.j6_combination;
    rep.add("J6", "J6 reduces to K3^2", k.j6_reduction == k.K3.body.square(),
            "combination " + std::to_string(c.x) + "*J2^3 + " + std::to_string(c.y) + "*J2*J4 + " +
                std::to_string(c.z) + "*J6");
  }
  {
    bool ok = k.K8.body.degree_in(Var::b3) == 8;
    for (int i = 0; i < 4; ++i) ok = ok && k.K8.body.stratum(Var::b3, 8 - i) == f2(anchors::kK8Strata[i]);
    rep.add("K8.strata", "K8 = b3^8 + K1^2 b3^6 + K1 (a0^2a3^2+a0a2^3+a1^3a3+a1^2a2^2) b3^5 + ...", ok);
  }
  {
    bool ok = k.K10.body.degree_in(Var::b3) == 6;
    for (int i = 0; i < 3; ++i) ok = ok && k.K10.body.stratum(Var::b3, 6 - i) == f2(anchors::kK10Strata[i]);
    rep.add("K10.strata", "K10 = b3^6 (a0a3)^4 + b3^5 (...) + b3^4 (...) + ...", ok);
  }
  rep.add("K12.stratum", "K12 = (a0^2a3^2+a0a1a2a3+a0a2^3+a1^3a3)^4 b3^4 + ...",
          k.K12.body.degree_in(Var::b3) == 4 && k.K12.body.stratum(Var::b3, 4) == f2(anchors::kK12TopStratum));

  const auto gens = invariance_generators();
  for (const auto* r : k.all()) {
    std::string failed;
    for (const auto& res : check_invariance(*r, gens))
      if (!res.residual.is_zero()) failed += (failed.empty() ? "" : "; ") + res.generator + ": " + residual_summary(res.residual);
    rep.add("invariance." + r->name, r->name + " is fixed by the seven generators", failed.empty(), failed);
    const IsobarityResult iso = check_isobarity(*r);
    rep.add("isobarity." + r->name, "a-degree + 2 b-degree = 2n and weight = 3n",
            iso.bi_isobaric && iso.weighted_isobaric,
            iso.bi_isobaric && iso.weighted_isobaric ? "" : "first violation " + iso.first_violation.to_string());
  }

  const RelationsReport rel = verify_relations(k, independence_weight);
  for (const auto& r : rel.identities) rep.add("relation." + r.id, r.statement, r.ok(), residual_summary(r.residual));
  rep.add("independence", "K1^e K3^f K8^g K10^h of weight <= " + std::to_string(independence_weight) + " independent",
          rel.independence.ok(),
          "rank " + std::to_string(rel.independence.rank) + " of " + std::to_string(rel.independence.monomials));
  return rep;
}

inline VerifyReport verify_hilbert(std::size_t order = 200, std::size_t fit_order = 10000) {
  VerifyReport rep;
  rep.suite = "hilbert";
  const SeriesReport s = verify_series_identities(order);
  for (const auto& c : s.checks)
    rep.add("series." + c.id, c.statement, c.ok(),
            c.ok() ? "holds to order " + std::to_string(order) : "first violation at k = " + std::to_string(*c.first_violation));
  const TruncatedSeries g = expand_G(order);
  rep.add("series.long-division", "factored and multiplied-out denominators give the same series",
          g == expand_G_by_long_division(order));
  {
    bool mono = true, pos = g[0] > 0;
    for (std::size_t k = 1; k <= order; ++k) {
      mono = mono && g[k] >= g[k - 1];
      pos = pos && g[k] > 0;
    }
    rep.add("series.monotone", "r(k) > 0 and nondecreasing", mono && pos);
  }
  rep.add("series.r52", "r(52) = 37", order >= 52 && g[52] == 37, "r(52) = " + g[std::min<std::size_t>(52, order)].get_str());
  {
    const DegreeIdentity d = degree_identity_check();
    rep.add("degree", "52 / (1*10*12*13*48) = 1/1440", d.ok(),
            "product " + d.denominator_product.get_str() + ", value " + d.value.get_str());
  }
  {
    const AsymptoticFit fit = asymptotic_fit(fit_order);
    std::string detail = "lambda = " + fit.lambda.get_str() + (fit.exact ? " (exact" : " (approximate") +
                         ", step " + std::to_string(fit.step) + "); closest to " + fit.closest;
    if (fit.lambda != mpq_class(1, 1080)) detail += "; differs from the stated 1/1080";
    rep.info("asymptotic", "r(k) = lambda k^3 + O(k^2), candidates 1/8640 and 1/1080", detail);
  }
  return rep;
}

/// Curve-level checks: the y^2 + y = x^5 example, exhaustive classification
/// over F2, and `samples` random (curve, group element) pairs per field over
/// F2, F4 and F16.
inline VerifyReport verify_curves(const KTable& k, std::uint64_t seed = 7, unsigned samples = 1000) {
  VerifyReport rep;
  rep.suite = "curves";
  const CurveInvariants inv(k);
  const BinaryField& f2 = BinaryField::get(1);
  {
    const Genus2Curve c = parse_curve("1", "x^5", f2);
    const bool smooth = is_smooth(c);
    const bool ok = smooth && two_rank(c) == 0 && count_points(c, 1) == 3 && count_points(c, 2) == 5 &&
                    l_polynomial(c) == LPolynomial{1, 0, 0, 0, 4};
    rep.add("example.y2+y=x5", "smooth, 2-rank 0, N1 = 3, N2 = 5, L = 1 + 4t^4", ok,
            smooth ? "L = " + l_polynomial_to_string(l_polynomial(c)) : "not smooth");
  }
  {
    const EnumerationReport e = enumerate_curves(f2, inv);
    const std::string counts = std::to_string(e.smooth) + " smooth of " + std::to_string(e.pairs);
    rep.add("F2.K1-rank", "K1 = 0 iff 2-rank <= 1", e.k1_rank_violations == 0,
            std::to_string(e.k1_rank_violations) + " violations; " + counts);
    rep.add("F2.L-rank", "2-rank = deg(L mod 2)", e.l_rank_violations == 0,
            std::to_string(e.l_rank_violations) + " violations");
    rep.add("F2.K10", "K10 != 0 on every smooth curve", e.k10_zero_on_smooth == 0,
            std::to_string(e.k10_zero_on_smooth) + " smooth curves with K10 = 0; " +
                std::to_string(e.k10_nonzero_singular) + " singular curves with K10 != 0");
  }
  std::mt19937_64 rng(seed);
  for (unsigned n : {1u, 2u, 4u}) {
    const BinaryField& f = BinaryField::get(n);
    const std::string tag = "F" + std::to_string(f.size());
    unsigned inv_bad = 0, smooth_bad = 0, rank_bad = 0, count_bad = 0, smooth_seen = 0;
    for (unsigned i = 0; i < samples; ++i) {
      const Genus2Curve c = random_curve(f, rng);
      const GroupElement g = random_group_element(f, rng);
      const Genus2Curve gc = act(g, c);
      const Fq d = g.det(f);
      const auto before = inv.evaluate(c), after = inv.evaluate(gc);
      for (std::size_t e = 0; e < before.size(); ++e)
        if (after[e].second != f.mul(f.pow(d, inv.entries()[e].weight), before[e].second)) {
          ++inv_bad;
          break;
        }
      const bool s = is_smooth(c);
      if (s != is_smooth(gc)) ++smooth_bad;
      if (!s) continue;
      ++smooth_seen;
      if (two_rank(c) != two_rank(gc)) ++rank_bad;
      if (count_points(c, 1) != count_points(gc, 1) || count_points(c, 2) != count_points(gc, 2)) ++count_bad;
    }
    const std::string n_str = std::to_string(samples) + " pairs";
    rep.add(tag + ".act.invariants", "K_n(g.c) = det(g)^n K_n(c)", inv_bad == 0, std::to_string(inv_bad) + " failures in " + n_str);
    rep.add(tag + ".act.smooth", "smoothness is preserved", smooth_bad == 0, std::to_string(smooth_bad) + " failures in " + n_str);
    rep.add(tag + ".act.two-rank", "2-rank is preserved", rank_bad == 0,
            std::to_string(rank_bad) + " failures in " + std::to_string(smooth_seen) + " smooth pairs");
    rep.add(tag + ".act.points", "N1 and N2 are preserved", count_bad == 0,
            std::to_string(count_bad) + " failures in " + std::to_string(smooth_seen) + " smooth pairs");
  }
  {
    const BinaryField& f4 = BinaryField::get(2);
    unsigned bad = 0;
    for (unsigned i = 0; i < samples; ++i) {
      const Genus2Curve c = random_smooth_curve(f4, rng);
      if (two_rank(c) != two_rank_from_L(c)) ++bad;
    }
    rep.add("F4.L-rank", "2-rank = deg(L mod 2) on random smooth curves", bad == 0,
            std::to_string(bad) + " failures in " + std::to_string(samples));
  }
  return rep;
}

}  // namespace g2c2

#endif  // G2C2_VERIFY_HPP
