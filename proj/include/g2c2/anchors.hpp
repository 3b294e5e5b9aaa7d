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

#ifndef G2C2_ANCHORS_HPP
#define G2C2_ANCHORS_HPP

// Published expansions that the computed tables are checked against.

namespace g2c2::anchors {

inline constexpr const char* kK1 = "a0*a3 + a1*a2";

inline constexpr const char* kK3 =
    "(a0*a3+a1*a2)*b3^2"
    " + (a0^2*a3^2+a0*a2^3+a1^3*a3+a1^2*a2^2)*b3"
    " + (a0*a3+a1*a2)*a1^2*b4"
    " + (a0*a3+a1*a2)*a2^2*b2"
    " + (a0^2*a1*a3+a0^2*a2^2+a0*a1^2*a2+a1^4)*b5"
    " + (a0*a2*a3^2+a3^2*a1^2+a1*a2^2*a3+a2^4)*b1"
    " + (a0*a3+a1*a2)*a0^2*b6"
    " + (a0*a3+a1*a2)*a3^2*b0";

/// Coefficients of b3^8, b3^7, b3^6, b3^5 in K8.
inline constexpr const char* kK8Strata[] = {
    "1",
    "0",
    "(a0*a3+a1*a2)^2",
    "(a0*a3+a1*a2)*(a0^2*a3^2+a0*a2^3+a1^3*a3+a1^2*a2^2)",
};

/// Coefficients of b3^6, b3^5, b3^4 in K10.
inline constexpr const char* kK10Strata[] = {
    "(a0*a3)^4",
    "a0^5*a3^5+a0^4*a1*a2*a3^4+a0^4*a2^3*a3^3+a0^3*a1^3*a3^4",
    "a0^6*a3^6+a0^5*a1*a2*a3^5+a0^4*a1^2*a2^2*a3^4+a0^3*a1^3*a2^3*a3^3"
    "+a0^6*a3^4*b6+a0^5*a1*a3^4*b5+a0^5*a2^2*a3^3*b5+a0^4*a1^2*a3^4*b4"
    "+a0^4*a1*a2^3*a3^2*b5+a0^4*a2^6*b6+a0^4*a2^5*a3*b5+a0^4*a2^4*a3^2*b4"
    "+a0^4*a2^2*a3^4*b2+a0^4*a2*a3^5*b1+a0^4*a3^6*b0+a0^3*a1^2*a3^5*b1"
    "+a0^2*a1^4*a3^4*b2+a0^2*a1^3*a2*a3^4*b1+a0*a1^5*a3^4*b1+a1^6*a3^4*b0"
    "+a0^4*a2^4*b5^2+a1^4*a3^4*b1^2",
};

/// Coefficient of b3^4 in K12.
inline constexpr const char* kK12TopStratum = "(a0^2*a3^2+a0*a1*a2*a3+a0*a2^3+a1^3*a3)^4";

/// J4's leading coefficients: 2^-7 * 2640 at c0^2 c6^2 and 2^-7 * -880 at c0 c1 c5 c6.
inline constexpr long kJ4LeadNumerators[] = {2640, -880};
inline constexpr long kJ4LeadDenominator = 128;

}  // namespace g2c2::anchors

#endif  // G2C2_ANCHORS_HPP
