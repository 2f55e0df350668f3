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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hybridec/linalg.h"

namespace hybridec {

/// Element of the shift/clock error basis on n q-level systems,
///   X^{x_1} Z^{z_1} (x) ... (x) X^{x_n} Z^{z_n},
/// with X|j> = |j+1 mod q>, Z|j> = w^j |j>, w = exp(2 pi i / q).
/// No symmetrizing phase: for q = 2 the element x=1, z=1 realizes XZ = -iY.
class PauliElement {
 public:
  PauliElement(unsigned q, std::vector<unsigned> xvec, std::vector<unsigned> zvec);
  static PauliElement identity(unsigned q, std::size_t n);

  /// "IXYZ" (q = 2 only) or "x:a1,...,an;z:b1,...,bn".
  static PauliElement parse(std::string_view text, unsigned q);

  unsigned q() const { return q_; }
  std::size_t n() const { return x_.size(); }
  const std::vector<unsigned>& xvec() const { return x_; }
  const std::vector<unsigned>& zvec() const { return z_; }

  bool is_identity() const;
  /// Letter form for q = 2, exponent form otherwise.
  std::string to_string() const;

  bool operator==(const PauliElement&) const = default;

 private:
  unsigned q_;
  std::vector<unsigned> x_;
  std::vector<unsigned> z_;
};

std::size_t weight(const PauliElement& e);

/// Dense q^n x q^n unitary. Basis index is the big-endian digit string.
CMatrix realize(const PauliElement& e);

/// realize(e) * v in O(q^n) as a phase-decorated index permutation.
CVector apply_to_state(const PauliElement& e, std::span<const Complex> v);

/// Basis element g with realize(f)^* realize(e) = c * realize(g), |c| = 1.
PauliElement compose_adjoint_left(const PauliElement& f, const PauliElement& e);

/// All weight-d elements in a fixed order: support sets in lexicographic
/// order, then per-position (x, z) pairs in lexicographic order with the first
/// support position most significant. Elements are produced on demand.
class WeightedPauliSet {
 public:
  WeightedPauliSet(unsigned q, std::size_t n, std::size_t d);

  unsigned q() const { return q_; }
  std::size_t n() const { return n_; }
  std::size_t d() const { return d_; }
  /// C(n, d) * (q^2 - 1)^d
  std::size_t size() const { return supports_.size() * per_support_; }
  PauliElement operator[](std::size_t index) const;

 private:
  unsigned q_;
  std::size_t n_;
  std::size_t d_;
  std::size_t per_support_;
  std::vector<std::vector<std::size_t>> supports_;
};

WeightedPauliSet enumerate_weight(unsigned q, std::size_t n, std::size_t d);

/// q^n with overflow detection.
std::size_t ambient_dim(unsigned q, std::size_t n);

}  // namespace hybridec
