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

#ifndef G2C2_IGUSA_HPP
#define G2C2_IGUSA_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "g2c2/binary_form.hpp"
#include "g2c2/poly_io.hpp"
#include "g2c2/root_oracle.hpp"
#include "g2c2/scaled.hpp"

namespace g2c2 {

/// An even-degree invariant of the universal binary sextic in c0..c6.
struct ScaledInvariant {
  std::string name;
  unsigned degree = 0;  // degree in the c-variables
  ScaledPoly value;
};

/// f = sum_i c_i x1^(6-i) x2^i
inline BinaryForm universal_sextic() {
  std::vector<MultiPoly> coeffs;
  for (int i = 0; i <= 6; ++i) coeffs.push_back(var(Ring::Integers, c_var(i)));
  return BinaryForm::from_coefficients(coeffs);
}

/// The displayed weight-2 anchor 2^-2 (-120 c0c6 + 20 c1c5 - 8 c2c4 + 3 c3^2).
inline ScaledPoly j2_anchor() {
  return ScaledPoly(parse_poly("-120*c0*c6 + 20*c1*c5 - 8*c2*c4 + 3*c3^2", Ring::Integers),
                    mpq_class(1, 4));
}

/// Transvectant invariants A, B, C, D of degrees 2, 4, 6, 10 built from
/// i = (f,f)_4, Delta = (i,i)_2 and the quadratic covariants y1, y2, y3.
struct TransvectantBasis {
  ScaledPoly A, B, C, D;

  static TransvectantBasis build() {
    const BinaryForm f = universal_sextic();
    const BinaryForm i = transvectant(f, f, 4);
    const BinaryForm delta = transvectant(i, i, 2);
    const BinaryForm y1 = transvectant(f, i, 4);
    const BinaryForm y2 = transvectant(i, y1, 2);
    const BinaryForm y3 = transvectant(i, y2, 2);
    return {transvectant(f, f, 6).value(), transvectant(i, i, 4).value(),
            transvectant(i, delta, 4).value(), transvectant(y3, y1, 2).value()};
  }

  std::vector<ScaledPoly> degree2() const { return {A}; }
  std::vector<ScaledPoly> degree4() const { return {A.pow(2), B}; }
  std::vector<ScaledPoly> degree6() const { return {A.pow(3), A * B, C}; }
  std::vector<ScaledPoly> degree10() const {
    return {A.pow(5), A.pow(3) * B, A.pow(2) * C, A * B.pow(2), B * C, D};
  }
};

namespace detail {

/// Exact least-squares-free solve of rows * x = rhs. Returns nullopt when the
/// rows do not determine x uniquely; throws when they are inconsistent.
inline std::optional<std::vector<mpq_class>> solve_exact(std::vector<std::vector<mpq_class>> rows,
                                                         std::vector<mpq_class> rhs,
                                                         std::size_t unknowns) {
  const std::size_t n_rows = rows.size();
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < unknowns && rank < n_rows; ++col) {
    std::size_t piv = rank;
    while (piv < n_rows && rows[piv][col] == 0) ++piv;
    if (piv == n_rows) continue;
    std::swap(rows[piv], rows[rank]);
    std::swap(rhs[piv], rhs[rank]);
    for (std::size_t r = 0; r < n_rows; ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const mpq_class factor = rows[r][col] / rows[rank][col];
      for (std::size_t k = col; k < unknowns; ++k) rows[r][k] -= factor * rows[rank][k];
      rhs[r] -= factor * rhs[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < n_rows; ++r)
    if (rhs[r] != 0) throw CalibrationFailure("inconsistent calibration system");
  if (rank < unknowns) return std::nullopt;
  std::vector<mpq_class> x(unknowns);
  for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = rhs[r] / rows[r][pivot_col[r]];
  return x;
}

inline ScaledPoly combination(const std::vector<ScaledPoly>& basis, const std::vector<mpq_class>& mix) {
  ScaledPoly out;
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (mix[k] != 0) out = out + mix[k] * basis[k];
  return out;
}

/// Solves for the mixing coefficients that make the combination of `basis`
/// agree with `target` on random rational sextics, adding sextics until the
/// solution is unique, then re-verifies on two fresh ones.
/// `rows`/`rhs` may carry coefficient anchors; they stay in the system, so an
/// oracle that contradicts them is reported as a CalibrationFailure.
template <class Target>
ScaledPoly calibrate_by_oracle(const std::vector<ScaledPoly>& basis, Target&& target,
                               std::mt19937_64& rng, const std::string& what,
                               std::vector<std::vector<mpq_class>> rows = {},
                               std::vector<mpq_class> rhs = {}) {
  std::optional<std::vector<mpq_class>> mix;
  if (rows.size() >= basis.size()) mix = solve_exact(rows, rhs, basis.size());
  while (!mix) {
    if (rows.size() > 4 * basis.size() + 8)
      throw CalibrationFailure(what + ": transvectant basis does not determine the invariant");
    const RationalSextic s = RationalSextic::random(rng);
    const auto point = s.as_binding();
    std::vector<mpq_class> row;
    for (const auto& b : basis) row.push_back(b.evaluate_at(point));
    rows.push_back(std::move(row));
    rhs.push_back(target(s));
    if (rows.size() >= basis.size()) mix = solve_exact(rows, rhs, basis.size());
  }
  ScaledPoly result = combination(basis, *mix);
  for (int k = 0; k < 2; ++k) {
    const RationalSextic s = RationalSextic::random(rng);
    if (result.evaluate_at(s.as_binding()) != target(s))
      throw CalibrationFailure(what + ": fresh-sextic verification failed");
  }
  return result;
}

}  // namespace detail

/// Igusa invariants of the universal sextic: J2, J4, J6, J8, J10 and the
/// auxiliary I4 = J2^2 - 24 J4.
struct IgusaTable {
  ScaledInvariant J2, J4, J6, J8, J10, I4;

  const ScaledInvariant& operator[](const std::string& name) const {
    if (name == "J2") return J2;
    if (name == "J4") return J4;
    if (name == "J6") return J6;
    if (name == "J8") return J8;
    if (name == "J10") return J10;
    if (name == "I4") return I4;
    throw std::out_of_range("unknown Igusa invariant " + name);
  }
  std::vector<const ScaledInvariant*> all() const { return {&J2, &J4, &J6, &J8, &J10, &I4}; }
};

/// Igusa's J-normalizations expressed through the root-difference oracle.
struct OracleJ {
  mpq_class j2, j4, j6, j10;

  static OracleJ at(const RationalSextic& s) {
    OracleJ o;
    const mpq_class i2 = root_difference_oracle("I2", s.roots, s.leading);
    const mpq_class i4 = root_difference_oracle("I4", s.roots, s.leading);
    const mpq_class i6 = root_difference_oracle("I6", s.roots, s.leading);
    const mpq_class i10 = root_difference_oracle("I10", s.roots, s.leading);
    o.j2 = i2 / 8;
    o.j4 = (4 * o.j2 * o.j2 - i4) / 96;
    o.j6 = (8 * o.j2 * o.j2 * o.j2 - 160 * o.j2 * o.j4 - i6) / 576;
    o.j10 = i10 / 4096;
    return o;
  }
};

/// Builds the J-invariants from transvectants and calibrates the mixing
/// coefficients: J2 against its displayed formula, J4 against the two
/// displayed leading coefficients, J6 and J10 against the oracle; J8 from the
/// quadratic relation J4^2 - J2 J6 + 4 J8 = 0.
inline IgusaTable build_igusa_invariants(std::uint64_t seed = 20240601) {
  const TransvectantBasis basis = TransvectantBasis::build();
  std::mt19937_64 rng(seed);

  // J2 = lambda * A, pinned by the c3^2 coefficient and checked in full.
  const ScaledPoly anchor2 = j2_anchor();
  const Monomial c3sq = Monomial::of(Var::c3, 2);
  const mpq_class a_c3 = basis.A.coefficient(c3sq);
  if (a_c3 == 0) throw CalibrationFailure("A has no c3^2 term");
  const ScaledPoly j2 = mpq_class(anchor2.coefficient(c3sq) / a_c3) * basis.A;
  if (!(j2 == anchor2)) throw CalibrationFailure("J2 does not match its displayed formula");

  // J4 = alpha A^2 + beta B. Both candidates have c0^2c6^2 : c0c1c5c6 = 3 : -1,
  // so the leading string 2^-7 (2640 c0^2c6^2 - 880 c0c1c5c6 + ...) is a single
  // constraint; the oracle supplies the rest.
  const auto d4 = basis.degree4();
  Monomial m1 = Monomial::of(Var::c0, 2) * Monomial::of(Var::c6, 2);
  Monomial m2 = Monomial::of(Var::c0) * Monomial::of(Var::c1) * Monomial::of(Var::c5) *
                Monomial::of(Var::c6);
  std::vector<std::vector<mpq_class>> rows = {{d4[0].coefficient(m1), d4[1].coefficient(m1)},
                                              {d4[0].coefficient(m2), d4[1].coefficient(m2)}};
  std::vector<mpq_class> rhs = {mpq_class(2640, 128), mpq_class(-880, 128)};
  for (auto& r : rhs) r.canonicalize();
  const ScaledPoly j4 = detail::calibrate_by_oracle(
      d4, [](const RationalSextic& s) { return OracleJ::at(s).j4; }, rng, "J4", rows, rhs);
  if (j4.coefficient(m1) != rhs[0] || j4.coefficient(m2) != rhs[1])
    throw CalibrationFailure("J4 does not start with its displayed leading string");

  const ScaledPoly j6 = detail::calibrate_by_oracle(
      basis.degree6(), [](const RationalSextic& s) { return OracleJ::at(s).j6; }, rng, "J6");
  const ScaledPoly j8 = mpq_class(1, 4) * (j2 * j6 - j4.pow(2));
  const ScaledPoly j10 = detail::calibrate_by_oracle(
      basis.degree10(), [](const RationalSextic& s) { return OracleJ::at(s).j10; }, rng, "J10");
  const ScaledPoly i4 = j2.pow(2) - mpq_class(24) * j4;

  return IgusaTable{{"J2", 2, j2},  {"J4", 4, j4},   {"J6", 6, j6},
                    {"J8", 8, j8}, {"J10", 10, j10}, {"I4", 4, i4}};
}

}  // namespace g2c2

#endif  // G2C2_IGUSA_HPP
