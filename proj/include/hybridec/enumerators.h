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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hybridec/code_model.h"
#include "hybridec/detection.h"
#include "hybridec/rational_poly.h"

namespace hybridec {

enum class DistributionKind { kA, kB, kAPerp, kC };
const char* distribution_name(DistributionKind kind);

/// Weight distribution indexed by weight d. `values` may be shorter than
/// n + 1 when the computation was truncated at a maximum weight.
struct WeightDistribution {
  DistributionKind kind = DistributionKind::kA;
  std::vector<double> values;
  /// Present when every value snapped to a rational with the kind's denominator.
  std::optional<std::vector<Rational>> exact_values;

  bool exact() const { return exact_values.has_value(); }
  double operator[](std::size_t d) const { return values.at(d); }
};

/// Snaps each value to round(v * den) / den when within 1e-6; all-or-nothing.
std::optional<std::vector<Rational>> snap_to_rationals(const std::vector<double>& values,
                                                       const BigInt& denominator);

enum class EnumeratorMode {
  /// Frame blocks <frame|E|frame>; the default.
  kSimplified,
  /// Dense projector products P_b E P_a, kept for cross-validation.
  kDefinitional,
};

struct EnumeratorOptions {
  EnumeratorMode mode = EnumeratorMode::kSimplified;
  unsigned jobs = 1;
  /// Restrict to weights 0..max_weight. Required when q^{2n} > 4^8.
  std::optional<std::size_t> max_weight;
  /// Optional unit scalar attached to each basis element's realization.
  std::function<Complex(const PauliElement&)> phase;
};

struct Distributions {
  WeightDistribution A;
  WeightDistribution B;
  WeightDistribution A_perp;
  /// Direct off-diagonal sum.
  WeightDistribution C;
  bool complete = true;  // false when truncated by max_weight
};

/// One pass over the error basis computing all four distributions.
Distributions compute_distributions(const HybridCode& code, const EnumeratorOptions& options = {});

WeightDistribution weights_A(const HybridCode& code,
                             EnumeratorMode mode = EnumeratorMode::kSimplified);
WeightDistribution weights_B(const HybridCode& code,
                             EnumeratorMode mode = EnumeratorMode::kSimplified);
WeightDistribution weights_A_perp(const HybridCode& code);

enum class CMode { kDirect, kDifference };
WeightDistribution weights_C(const HybridCode& code, CMode mode = CMode::kDirect);

/// (K / q^n) (1 + (q^2-1) z)^n A((1 - z) / (1 + (q^2-1) z)), evaluated exactly.
/// Uses the snapped values of A when present, the exact binary value of each
/// double otherwise.
WeightDistribution macwilliams_of_A(const WeightDistribution& A, std::size_t K, std::size_t n,
                                    unsigned q);
WeightDistribution macwilliams_of_A(const HybridCode& code);

/// Smallest d >= 1 with |A_d - B_d| > tol, or n + 1 if there is none.
std::size_t min_detection_weight(const WeightDistribution& A, const WeightDistribution& B,
                                 double tol = kMatrixTol);
std::size_t min_detection_weight(const HybridCode& code, double tol = kMatrixTol);

struct IdentityRow {
  std::size_t d = 0;
  double A = 0, B = 0, A_perp = 0, A_perp_transform = 0, C = 0;
  bool weights_equal = false;   // |A_d - B_d| <= tol
  bool all_detectable = false;  // exhaustive check over weight-d basis elements
};

struct IdentityReport {
  Distributions distributions;
  WeightDistribution A_perp_transform;
  /// max_d |A_perp(trace) - A_perp(transform of A)|
  double macwilliams_residual = 0.0;
  /// max_d |B_d - A_perp_d - C_d|
  double additivity_residual = 0.0;
  bool c_nonneg_ok = true;
  /// C_d <= tol for every d below the detection distance.
  bool c_zero_below_distance = true;
  /// Whether B equals the transform of A, i.e. the unrelaxed identity holds.
  bool usual_macwilliams_holds = false;
  /// Weight equality agrees with exhaustive detectability for every d.
  bool detectability_equivalence_ok = true;
  std::size_t detection_distance = 0;
  std::vector<IdentityRow> rows;
};

IdentityReport verify_identities(const HybridCode& code, double tol = kMatrixTol,
                                 unsigned jobs = 1);

/// Full enumeration needs q^{2n} <= 4^8 elements.
bool within_full_enumeration_guard(unsigned q, std::size_t n);

}  // namespace hybridec
