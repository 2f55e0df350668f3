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

#include "hybridec/rational_poly.h"

#include <algorithm>
#include <cmath>

#include "hybridec/error.h"

namespace hybridec {

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw Error(ErrorCode::kMalformedDocument, "not a rational: '" + text + "'");
  }
}

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

RationalPolynomial::RationalPolynomial(std::initializer_list<Rational> coeffs)
    : coeffs_(coeffs) {
  trim();
}

RationalPolynomial RationalPolynomial::from_doubles(const std::vector<double>& values) {
  std::vector<Rational> c;
  c.reserve(values.size());
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kOutOfRange, "RationalPolynomial: non-finite coefficient");
    }
    // frexp gives v = m * 2^e with m in [0.5, 1); scaling m by 2^53 is exact.
    int e = 0;
    const double m = std::frexp(v, &e);
    const auto mant = static_cast<long long>(std::ldexp(m, 53));
    Rational r(mant);
    e -= 53;
    const BigInt two_pow = BigInt(1) << std::abs(e);
    c.push_back(e >= 0 ? Rational(r * two_pow) : Rational(r / two_pow));
  }
  return RationalPolynomial(std::move(c));
}

Rational RationalPolynomial::coeff(std::size_t d) const {
  return d < coeffs_.size() ? coeffs_[d] : Rational(0);
}

std::vector<Rational> RationalPolynomial::padded(std::size_t n) const {
  std::vector<Rational> out(n + 1);
  for (std::size_t d = 0; d <= n; ++d) out[d] = coeff(d);
  return out;
}

std::vector<double> RationalPolynomial::to_doubles(std::size_t n) const {
  std::vector<double> out(n + 1);
  for (std::size_t d = 0; d <= n; ++d) out[d] = static_cast<double>(coeff(d));
  return out;
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t d = 0; d < other.coeffs_.size(); ++d) coeffs_[d] += other.coeffs_[d];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::pow(unsigned e) const {
  RationalPolynomial result{Rational(1)};
  for (unsigned i = 0; i < e; ++i) result = result * *this;
  return result;
}

RationalPolynomial poly_substitute_macwilliams(const RationalPolynomial& p, unsigned n, unsigned q,
                                               const Rational& scale) {
  if (p.degree() > static_cast<int>(n)) {
    throw Error(ErrorCode::kOutOfRange, "poly_substitute_macwilliams: degree " +
                                            std::to_string(p.degree()) + " exceeds n = " +
                                            std::to_string(n));
  }
  const RationalPolynomial down{Rational(1), Rational(-1)};
  const RationalPolynomial up{Rational(1), Rational(static_cast<long long>(q) * q - 1)};
  RationalPolynomial sum;
  for (unsigned d = 0; d <= n; ++d) {
    const Rational c = p.coeff(d);
    if (c == 0) continue;
    RationalPolynomial term = down.pow(d) * up.pow(n - d);
    term *= c;
    sum += term;
  }
  sum *= scale;
  return sum;
}

}  // namespace hybridec
