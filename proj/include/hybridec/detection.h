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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hybridec/code_model.h"
#include "hybridec/error_basis.h"
#include "hybridec/linalg.h"

namespace hybridec {

/// An error is either a basis element (applied in O(q^n)) or a dense operator.
using ErrorOperator = std::variant<PauliElement, CMatrix>;

CVector apply_error(const ErrorOperator& error, std::span<const Complex> v);
std::string error_label(const ErrorOperator& error);

/// K x K blocks <frame_j^(b)| E |frame_i^(a)>; blocks[b * M + a](j, i).
/// Never forms P_b E P_a.
std::vector<CMatrix> block_elements(const HybridCode& code, const ErrorOperator& error);

/// 1-based (b, a) block pair.
struct BlockPair {
  std::size_t b;
  std::size_t a;
  bool operator==(const BlockPair&) const = default;
};

struct DetectabilityReport {
  std::string error;
  bool detectable = false;
  /// lambda_{E,a} for a = 1..M; empty when not detectable.
  std::vector<Complex> lambdas;
  double max_offdiag_violation = 0.0;
  double max_diag_violation = 0.0;
  /// First failing block pair, scanning a then b.
  std::optional<BlockPair> witness;
};

DetectabilityReport detectability(const HybridCode& code, const ErrorOperator& error,
                                  double tol = kMatrixTol);

struct WeightDetectability {
  std::size_t weight = 0;
  std::size_t checked = 0;
  std::size_t failures = 0;
  bool all_detectable = true;
  /// The first failures in enumeration order, at most the requested limit.
  std::vector<DetectabilityReport> counterexamples;
};

WeightDetectability all_detectable_of_weight(const HybridCode& code, std::size_t d,
                                             double tol = kMatrixTol, unsigned jobs = 1,
                                             std::size_t counterexample_limit = 8);

struct CorrectabilityReport {
  bool correctable = true;
  /// The criterion is stated for sets containing the identity.
  bool contains_identity = false;
  /// (F, E) such that F^* E is not detectable.
  std::optional<std::pair<PauliElement, PauliElement>> witness;
  std::optional<DetectabilityReport> witness_report;
};

/// Checks detectability of F^* E for every ordered pair, F outer, E inner.
CorrectabilityReport is_correctable_set(const HybridCode& code,
                                        const std::vector<PauliElement>& errors,
                                        double tol = kMatrixTol);

struct DimensionFormula {
  std::int64_t hybrid_dim;   // q^{2n} - (MK)^2 + M
  std::int64_t quantum_dim;  // q^{2n} - (MK)^2 + 1
};

DimensionFormula detectable_dimension_formula(std::size_t n, std::size_t K, std::size_t M,
                                              unsigned q);

/// q^{2n} minus the rank of the linear conditions defining detectability.
/// Guarded to q^n <= 16.
std::int64_t detectable_dimension_numeric(const HybridCode& code, double tol = kMatrixTol);

struct OperatorSystemDecomposition {
  CMatrix real_part;  // A = (E + E^*) / 2
  CMatrix imag_part;  // B = i (E^* - E) / 2
  double real_norm = 0.0;
  double imag_norm = 0.0;
  /// ||A|| I, ||A|| I - A, ||B|| I, ||B|| I - B
  std::array<CMatrix, 4> parts;
  /// E = sum_k coefficients[k] * parts[k], coefficients (1, -1, i, -i).
  std::array<Complex, 4> coefficients;
  std::array<bool, 4> part_detectable{};
  std::array<bool, 4> part_positive{};
  double recombination_error = 0.0;
};

/// Throws kNotDetectable if E is not detectable.
OperatorSystemDecomposition operator_system_decompose(const HybridCode& code, const CMatrix& error,
                                                      double tol = kMatrixTol);

struct MeasurementOutcome {
  /// 1..M for a message, 0 for the error flag.
  std::size_t label = 0;
  double probability = 0.0;
  /// Empty when probability < 1e-15.
  CVector post_state;

  bool is_error_flag() const { return label == 0; }
};

/// outcomes[0] is the error flag, outcomes[m] message m.
std::vector<MeasurementOutcome> measure(const HybridCode& code, std::span<const Complex> state);

struct TransmissionTally {
  std::size_t message = 0;
  std::size_t trials = 0;
  /// counts[0] is the error flag, counts[m] message m.
  std::vector<std::size_t> counts;
  std::vector<double> probabilities;
  std::size_t wrong_message_count = 0;
  /// |<encode(m, phi)|post_m>|^2, absent when outcome m has probability ~0.
  std::optional<double> fidelity;
};

TransmissionTally simulate_transmission(const HybridCode& code, std::size_t m,
                                        std::span<const Complex> phi, const ErrorOperator& error,
                                        std::size_t trials, std::uint64_t seed);

}  // namespace hybridec
