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

#ifndef G2C2_POLY_IO_HPP
#define G2C2_POLY_IO_HPP

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "g2c2/multipoly.hpp"

namespace g2c2 {

inline std::string_view ring_name(Ring r) { return r == Ring::F2 ? "F2" : "Z"; }

/// Canonical text form: terms in descending graded-lex order joined by " + ",
/// each "coef*var^e*...", with a unit coefficient omitted.
inline std::string to_text(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += " + ";
    const Monomial& m = p.monomial_at(i);
    const mpz_class c = p.coef(i);
    if (m.is_one()) {
      out += c.get_str();
    } else if (c == 1) {
      out += m.to_string();
    } else if (c == -1) {
      out += '-' + m.to_string();
    } else {
      out += c.get_str() + '*' + m.to_string();
    }
  }
  return out;
}

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view src, Ring ring) : src_(src), ring_(ring) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  MultiPoly expr() {
    MultiPoly acc(ring_);
    bool first = true;
    while (true) {
      skip_ws();
      bool negate = false;
      if (peek() == '+' || peek() == '-') {
        negate = peek() == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      MultiPoly t = term();
      acc = negate ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }

  MultiPoly term() {
    skip_ws();
    bool negate = false;
    while (peek() == '-' || peek() == '+') {
      negate ^= peek() == '-';
      ++pos_;
      skip_ws();
    }
    MultiPoly acc = factor();
    while (true) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      acc = acc * factor();
    }
    return negate ? -acc : acc;
  }

  MultiPoly factor() {
    MultiPoly base = primary();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(src_.substr(start, pos_ - start)))));
    }
    return base;
  }

  MultiPoly primary() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      return MultiPoly::constant(ring_, mpz_class(std::string(src_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
      const auto v = parse_var(src_.substr(start, pos_ - start));
      if (!v) fail("unknown variable '" + std::string(src_.substr(start, pos_ - start)) + "'");
      return MultiPoly::variable(ring_, *v);
    }
    fail("unexpected character");
    return MultiPoly(ring_);
  }

  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_));
  }

  std::string_view src_;
  Ring ring_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses sums of products of integers, variables, powers and parentheses.
/// Accepts everything to_text produces.
inline MultiPoly parse_poly(std::string_view text, Ring ring) {
  return detail::PolyParser(text, ring).parse();
}

inline nlohmann::ordered_json to_json(const MultiPoly& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  p.for_each_term([&](const Monomial& m, const mpz_class& c) {
    nlohmann::ordered_json exps = nlohmann::ordered_json::object();
    for (int k = 0; k < kNumVars; ++k)
      if (const unsigned e = m.exponent(var_at(k)); e > 0) exps[std::string(kVarNames[k])] = e;
    terms.push_back({{"coef", c.get_str()}, {"exps", std::move(exps)}});
  });
  return {{"ring", ring_name(p.ring())}, {"terms", std::move(terms)}};
}

template <class Json>
MultiPoly poly_from_json(const Json& j) {
  const std::string r = j.at("ring").template get<std::string>();
  if (r != "F2" && r != "Z") throw ParseError("unknown ring '" + r + "'");
  const Ring ring = r == "F2" ? Ring::F2 : Ring::Integers;
  std::vector<std::pair<Monomial, mpz_class>> terms;
  for (const auto& t : j.at("terms")) {
    Monomial m;
    for (const auto& [name, e] : t.at("exps").items()) {
      const auto v = parse_var(name);
      if (!v) throw ParseError("unknown variable '" + name + "'");
      m.set(*v, e.template get<unsigned>());
    }
    terms.emplace_back(m, mpz_class(t.at("coef").template get<std::string>()));
  }
  return MultiPoly::from_terms(ring, terms);
}

}  // namespace g2c2

#endif  // G2C2_POLY_IO_HPP
