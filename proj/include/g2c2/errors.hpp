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

#ifndef G2C2_ERRORS_HPP
#define G2C2_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace g2c2 {

/// Operands of a binary polynomial operation live in different rings.
struct RingMismatch : std::invalid_argument {
  RingMismatch() : std::invalid_argument("polynomial ring mismatch") {}
};

struct NotDivisible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroPolynomial : std::domain_error {
  using std::domain_error::domain_error;
};

struct ExponentOverflow : std::overflow_error {
  ExponentOverflow() : std::overflow_error("monomial exponent exceeds 255") {}
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The transvectant basis could not be calibrated against the anchors.
struct CalibrationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A reduction produced zero, which means the scale bookkeeping is wrong.
struct ZeroAfterSubstitution : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero in finite field") {}
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

struct ZeroCubic : std::invalid_argument {
  ZeroCubic() : std::invalid_argument("curve cubic a(x) is zero") {}
};

struct SingularMatrix : std::invalid_argument {
  SingularMatrix() : std::invalid_argument("group element has zero determinant") {}
};

struct NotSmooth : std::invalid_argument {
  NotSmooth() : std::invalid_argument("curve is not smooth") {}
};

struct FieldTooLarge : std::invalid_argument {
  FieldTooLarge() : std::invalid_argument("extension field degree exceeds 16") {}
  explicit FieldTooLarge(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace g2c2

#endif  // G2C2_ERRORS_HPP
