// Copyright 2026 The hybridec Authors
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

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace hybridec {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Renders p/q (or p when q == 1).
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& text);

/// Univariate polynomial with exact rational coefficients; coeff(d) is the
/// coefficient of z^d. Trailing zeros are trimmed so equality is structural.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);
  RationalPolynomial(std::initializer_list<Rational> coeffs);

  /// Exact conversion of each double (every finite double is a dyadic rational).
  static RationalPolynomial from_doubles(const std::vector<double>& values);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(std::size_t d) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficients 0..n inclusive, zero-padded.
  std::vector<Rational> padded(std::size_t n) const;
  std::vector<double> to_doubles(std::size_t n) const;

  RationalPolynomial& operator+=(const RationalPolynomial& other);
  RationalPolynomial& operator*=(const Rational& s);
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) {
    return a += b;
  }
  bool operator==(const RationalPolynomial&) const = default;

  RationalPolynomial pow(unsigned e) const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// scale * sum_d p_d (1 - z)^d (1 + (q^2 - 1) z)^(n - d), the expanded form of
/// scale * (1 + (q^2-1) z)^n p((1 - z) / (1 + (q^2 - 1) z)). Throws when
/// degree(p) > n.
RationalPolynomial poly_substitute_macwilliams(const RationalPolynomial& p, unsigned n, unsigned q,
                                               const Rational& scale);

}  // namespace hybridec
