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

#include "hybridec/error_basis.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "hybridec/error.h"

namespace hybridec {
namespace {

// w^t with exact values on the quarter turns so q = 2 and q = 4 realizations
// carry no rounding noise.
Complex root_of_unity(unsigned t, unsigned q) {
  t %= q;
  if ((4 * t) % q == 0) {
    switch ((4 * t) / q) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  return std::polar(1.0, 2.0 * std::numbers::pi * t / q);
}

std::vector<Complex> roots_table(unsigned q) {
  std::vector<Complex> table(q);
  for (unsigned t = 0; t < q; ++t) table[t] = root_of_unity(t, q);
  return table;
}

std::vector<unsigned> parse_exponents(std::string_view text, unsigned q) {
  std::vector<unsigned> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string token(text.substr(pos, end - pos));
    if (token.empty()) throw Error(ErrorCode::kMalformedDocument, "empty exponent in error string");
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || v >= q) {
      throw Error(ErrorCode::kMalformedDocument,
                  "bad exponent '" + token + "' for q = " + std::to_string(q));
    }
    out.push_back(static_cast<unsigned>(v));
    pos = end + 1;
  }
  return out;
}

void combinations(std::size_t n, std::size_t d, std::vector<std::size_t>& current, std::size_t start,
                  std::vector<std::vector<std::size_t>>& out) {
  if (current.size() == d) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = start; i + (d - current.size()) <= n; ++i) {
    current.push_back(i);
    combinations(n, d, current, i + 1, out);
    current.pop_back();
  }
}

}  // namespace

std::size_t ambient_dim(unsigned q, std::size_t n) {
  std::size_t dim = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (dim > std::numeric_limits<std::size_t>::max() / q) {
      throw Error(ErrorCode::kGuardExceeded, "q^n overflows");
    }
    dim *= q;
  }
  return dim;
}

PauliElement::PauliElement(unsigned q, std::vector<unsigned> xvec, std::vector<unsigned> zvec)
    : q_(q), x_(std::move(xvec)), z_(std::move(zvec)) {
  if (q_ < 2) throw Error(ErrorCode::kOutOfRange, "PauliElement: q must be >= 2");
  if (x_.empty() || x_.size() != z_.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "PauliElement: x and z must have equal length >= 1");
  }
  for (std::size_t i = 0; i < x_.size(); ++i) {
    if (x_[i] >= q_ || z_[i] >= q_) {
      throw Error(ErrorCode::kOutOfRange, "PauliElement: exponent out of [0, q)");
    }
  }
}

PauliElement PauliElement::identity(unsigned q, std::size_t n) {
  return PauliElement(q, std::vector<unsigned>(n, 0), std::vector<unsigned>(n, 0));
}

PauliElement PauliElement::parse(std::string_view text, unsigned q) {
  if (text.starts_with("x:")) {
    const auto semi = text.find(";z:");
    if (semi == std::string_view::npos) {
      throw Error(ErrorCode::kMalformedDocument, "expected 'x:...;z:...', got '" +
                                                     std::string(text) + "'");
    }
    auto x = parse_exponents(text.substr(2, semi - 2), q);
    auto z = parse_exponents(text.substr(semi + 3), q);
    if (x.size() != z.size()) {
      throw Error(ErrorCode::kMalformedDocument, "x and z exponent lists differ in length");
    }
    return PauliElement(q, std::move(x), std::move(z));
  }
  if (q != 2) {
    throw Error(ErrorCode::kMalformedDocument,
                "letter form is only defined for q = 2; use 'x:...;z:...'");
  }
  if (text.empty()) throw Error(ErrorCode::kMalformedDocument, "empty error string");
  std::vector<unsigned> x, z;
  for (char c : text) {
    switch (c) {
      case 'I': x.push_back(0); z.push_back(0); break;
      case 'X': x.push_back(1); z.push_back(0); break;
      case 'Y': x.push_back(1); z.push_back(1); break;
      case 'Z': x.push_back(0); z.push_back(1); break;
      default:
        throw Error(ErrorCode::kMalformedDocument,
                    "bad Pauli letter '" + std::string(1, c) + "' in '" + std::string(text) + "'");
    }
  }
  return PauliElement(2, std::move(x), std::move(z));
}

bool PauliElement::is_identity() const { return weight(*this) == 0; }

std::string PauliElement::to_string() const {
  if (q_ == 2) {
    std::string s;
    for (std::size_t i = 0; i < n(); ++i) s += "IZXY"[2 * x_[i] + z_[i]];
    return s;
  }
  std::ostringstream os;
  os << "x:";
  for (std::size_t i = 0; i < n(); ++i) os << (i ? "," : "") << x_[i];
  os << ";z:";
  for (std::size_t i = 0; i < n(); ++i) os << (i ? "," : "") << z_[i];
  return os.str();
}

std::size_t weight(const PauliElement& e) {
  std::size_t w = 0;
  for (std::size_t i = 0; i < e.n(); ++i) {
    if (e.xvec()[i] != 0 || e.zvec()[i] != 0) ++w;
  }
  return w;
}

namespace {

// For source basis index j: target index and phase exponent of E|j>.
template <typename Fn>
void for_each_image(const PauliElement& e, Fn&& fn) {
  const unsigned q = e.q();
  const std::size_t n = e.n();
  const std::size_t dim = ambient_dim(q, n);
  std::vector<unsigned> digits(n, 0);
  for (std::size_t j = 0; j < dim; ++j) {
    std::size_t target = 0;
    unsigned phase = 0;
    for (std::size_t i = 0; i < n; ++i) {
      target = target * q + (digits[i] + e.xvec()[i]) % q;
      phase = (phase + e.zvec()[i] * digits[i]) % q;
    }
    fn(j, target, phase);
    // increment big-endian digit counter
    for (std::size_t i = n; i-- > 0;) {
      if (++digits[i] < q) break;
      digits[i] = 0;
    }
  }
}

}  // namespace

CMatrix realize(const PauliElement& e) {
  const std::size_t dim = ambient_dim(e.q(), e.n());
  const auto roots = roots_table(e.q());
  CMatrix m(dim, dim);
  for_each_image(e, [&](std::size_t j, std::size_t target, unsigned phase) {
    m(target, j) = roots[phase];
  });
  return m;
}

CVector apply_to_state(const PauliElement& e, std::span<const Complex> v) {
  const std::size_t dim = ambient_dim(e.q(), e.n());
  if (v.size() != dim) {
    throw Error(ErrorCode::kDimensionMismatch,
                "apply_to_state: state has dimension " + std::to_string(v.size()) +
                    ", expected " + std::to_string(dim));
  }
  const auto roots = roots_table(e.q());
  CVector out(dim);
  for_each_image(e, [&](std::size_t j, std::size_t target, unsigned phase) {
    out[target] = phase == 0 ? v[j] : roots[phase] * v[j];
  });
  return out;
}

PauliElement compose_adjoint_left(const PauliElement& f, const PauliElement& e) {
  if (f.q() != e.q() || f.n() != e.n()) {
    throw Error(ErrorCode::kDimensionMismatch, "compose_adjoint_left: shape mismatch");
  }
  const unsigned q = e.q();
  std::vector<unsigned> x(e.n()), z(e.n());
  for (std::size_t i = 0; i < e.n(); ++i) {
    x[i] = (e.xvec()[i] + q - f.xvec()[i]) % q;
    z[i] = (e.zvec()[i] + q - f.zvec()[i]) % q;
  }
  return PauliElement(q, std::move(x), std::move(z));
}

WeightedPauliSet::WeightedPauliSet(unsigned q, std::size_t n, std::size_t d)
    : q_(q), n_(n), d_(d), per_support_(1) {
  if (q < 2 || n < 1) throw Error(ErrorCode::kOutOfRange, "enumerate_weight: need q >= 2, n >= 1");
  if (d > n) {
    throw Error(ErrorCode::kOutOfRange, "enumerate_weight: weight " + std::to_string(d) +
                                            " outside [0, " + std::to_string(n) + "]");
  }
  for (std::size_t i = 0; i < d; ++i) per_support_ *= static_cast<std::size_t>(q) * q - 1;
  std::vector<std::size_t> current;
  combinations(n, d, current, 0, supports_);
}

PauliElement WeightedPauliSet::operator[](std::size_t index) const {
  if (index >= size()) throw Error(ErrorCode::kOutOfRange, "WeightedPauliSet: index out of range");
  const auto& support = supports_[index / per_support_];
  std::size_t rest = index % per_support_;
  const std::size_t radix = static_cast<std::size_t>(q_) * q_ - 1;
  std::vector<unsigned> x(n_, 0), z(n_, 0);
  for (std::size_t k = d_; k-- > 0;) {
    const std::size_t pair = rest % radix + 1;  // skip (0, 0)
    rest /= radix;
    x[support[k]] = static_cast<unsigned>(pair / q_);
    z[support[k]] = static_cast<unsigned>(pair % q_);
  }
  return PauliElement(q_, std::move(x), std::move(z));
}

WeightedPauliSet enumerate_weight(unsigned q, std::size_t n, std::size_t d) {
  return WeightedPauliSet(q, n, d);
}

}  // namespace hybridec
