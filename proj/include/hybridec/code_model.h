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
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hybridec/error_basis.h"
#include "hybridec/linalg.h"

namespace hybridec {

/// One quantum code C_m, stored as an orthonormal frame of K vectors in C^(q^n).
struct CodeBlock {
  std::vector<CVector> frame;

  std::size_t K() const { return frame.size(); }
  bool operator==(const CodeBlock&) const = default;
};

/// ((n, K:M))_q hybrid code: M mutually orthogonal K-dimensional blocks.
///
/// The constructor checks shapes only (equal K, ambient dimension q^n,
/// finite entries, MK <= q^n). Orthonormality is checked by validate(), so
/// a malformed code can still be loaded and reported on.
class HybridCode {
 public:
  HybridCode(unsigned q, std::size_t n, std::vector<CodeBlock> blocks);

  unsigned q() const { return q_; }
  std::size_t n() const { return n_; }
  std::size_t K() const { return blocks_.front().K(); }
  std::size_t M() const { return blocks_.size(); }
  std::size_t dim() const { return dim_; }

  /// 0-based block index.
  const CodeBlock& block(std::size_t index) const { return blocks_.at(index); }
  const std::vector<CodeBlock>& blocks() const { return blocks_; }

 private:
  unsigned q_;
  std::size_t n_;
  std::size_t dim_;
  std::vector<CodeBlock> blocks_;
};

struct Violation {
  enum class Kind { kFrameNotOrthonormal, kBlocksNotOrthogonal };
  Kind kind;
  /// 1-based block indices; b == a for frame violations.
  std::size_t a;
  std::size_t b;
  double magnitude;

  std::string describe() const;
};

struct ValidationReport {
  bool ok = true;
  double max_gram_deviation = 0.0;
  double max_cross_overlap = 0.0;
  std::vector<Violation> violations;
};

ValidationReport validate(const HybridCode& code, double tol);

/// sum_i v_i v_i^*
CMatrix projector(const CodeBlock& block);

struct ProjectorSet {
  std::vector<CMatrix> blocks;  // P_1 .. P_M
  CMatrix error;                // P_eps = I - sum_m P_m
};

/// Throws kInvariantViolation naming the offending (a, b) pair.
ProjectorSet build_projector_set(const HybridCode& code, double tol = kMatrixTol);

/// sum_i phi_i frame_i^(m), with m in [1, M] and |phi| = 1.
CVector encode(const HybridCode& code, std::size_t m, std::span<const Complex> phi);

/// Hermitian Pauli operator with a sign; q = 2 only. Y is the Hermitian Y.
struct SignedPauli {
  int sign = 1;
  PauliElement op;
};

struct StabilizerSpec {
  std::size_t n = 0;
  std::vector<SignedPauli> generators;
  std::vector<PauliElement> classical_ops;
};

/// Signed letter string, e.g. "-XZZXI" or "+ZZ".
SignedPauli parse_signed_pauli(std::string_view text);

/// K = 2^(n-r-c), M = 2^c. The block for sign vector s is the range of
/// prod_i (I + g_i)/2 prod_j (I + s_j h_j)/2, blocks ordered by s read as a
/// binary number (+1 -> 0, first classical op most significant).
HybridCode from_stabilizer(const StabilizerSpec& spec);

/// Either an explicit frame code or a stabilizer description.
using CodeDocument = std::variant<HybridCode, StabilizerSpec>;

/// Frames within 1e-6 of orthonormal are re-orthonormalized; frames further
/// off are kept verbatim so validate() can report them.
CodeDocument parse_code_file(std::string_view text);

/// parse_code_file followed by from_stabilizer where needed.
HybridCode load_code(std::string_view text);

std::string serialize_code(const HybridCode& code);

}  // namespace hybridec
