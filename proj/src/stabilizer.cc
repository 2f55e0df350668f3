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

#include <cmath>

#include "hybridec/code_model.h"
#include "hybridec/error.h"
#include "hybridec/kernels.h"

namespace hybridec {
namespace {

constexpr std::size_t kMaxStabilizerQubits = 12;

int symplectic_product(const PauliElement& a, const PauliElement& b) {
  unsigned s = 0;
  for (std::size_t i = 0; i < a.n(); ++i) s += a.xvec()[i] * b.zvec()[i] + a.zvec()[i] * b.xvec()[i];
  return static_cast<int>(s % 2);
}

std::size_t gf2_rank(std::vector<std::vector<unsigned>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r][c] != 0) {
        for (std::size_t k = 0; k < cols; ++k) rows[r][k] ^= rows[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

// v <- (v + s g v) / 2 where g is the Hermitian Pauli for `op`.
void apply_half_projector(const PauliElement& op, int sign, CVector& v) {
  std::size_t ny = 0;
  for (std::size_t i = 0; i < op.n(); ++i) ny += op.xvec()[i] & op.zvec()[i];
  // Y = i XZ, so the Hermitian operator is i^{ny} times the realization.
  static constexpr Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const Complex factor = static_cast<double>(sign) * kIPow[ny % 4];
  const CVector gv = apply_to_state(op, v);
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = 0.5 * (v[k] + factor * gv[k]);
}

void check_spec(const StabilizerSpec& spec) {
  if (spec.n < 1) throw Error(ErrorCode::kInvalidStabilizer, "stabilizer: n must be >= 1");
  if (spec.n > kMaxStabilizerQubits) {
    throw Error(ErrorCode::kGuardExceeded, "stabilizer: n > " +
                                               std::to_string(kMaxStabilizerQubits) +
                                               " is beyond the dense-state guard");
  }
  std::vector<const PauliElement*> all;
  for (const auto& g : spec.generators) all.push_back(&g.op);
  for (const auto& h : spec.classical_ops) all.push_back(&h);
  for (const auto* p : all) {
    if (p->q() != 2 || p->n() != spec.n) {
      throw Error(ErrorCode::kInvalidStabilizer,
                  "stabilizer: operator " + p->to_string() + " is not a q=2 string of length " +
                      std::to_string(spec.n));
    }
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (symplectic_product(*all[i], *all[j]) != 0) {
        throw Error(ErrorCode::kInvalidStabilizer, "stabilizer: " + all[i]->to_string() + " and " +
                                                       all[j]->to_string() + " do not commute");
      }
    }
  }
  if (all.size() > spec.n) {
    throw Error(ErrorCode::kInvalidStabilizer,
                "stabilizer: r + c exceeds n, so K would be 0");
  }
  std::vector<std::vector<unsigned>> rows;
  for (const auto* p : all) {
    std::vector<unsigned> row = p->xvec();
    row.insert(row.end(), p->zvec().begin(), p->zvec().end());
    rows.push_back(std::move(row));
  }
  if (gf2_rank(rows) != all.size()) {
    throw Error(ErrorCode::kInvalidStabilizer,
                "stabilizer: generators and classical operators are not independent");
  }
}

}  // namespace

SignedPauli parse_signed_pauli(std::string_view text) {
  int sign = 1;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    sign = text.front() == '-' ? -1 : 1;
    text.remove_prefix(1);
  }
  return {sign, PauliElement::parse(text, 2)};
}

HybridCode from_stabilizer(const StabilizerSpec& spec) {
  check_spec(spec);
  const std::size_t r = spec.generators.size();
  const std::size_t c = spec.classical_ops.size();
  const std::size_t dim = std::size_t{1} << spec.n;
  const std::size_t K = std::size_t{1} << (spec.n - r - c);
  const std::size_t M = std::size_t{1} << c;
  const auto& kern = kernels::active();

  std::vector<CodeBlock> blocks;
  blocks.reserve(M);
  for (std::size_t index = 0; index < M; ++index) {
    CodeBlock block;
    // Project computational basis states and keep an orthonormal basis of
    // the images until K independent vectors are found.
    for (std::size_t j = 0; j < dim && block.K() < K; ++j) {
      CVector v(dim);
      v[j] = 1.0;
      for (const auto& g : spec.generators) apply_half_projector(g.op, g.sign, v);
      for (std::size_t t = 0; t < c; ++t) {
        const int sign = ((index >> (c - 1 - t)) & 1U) ? -1 : 1;
        apply_half_projector(spec.classical_ops[t], sign, v);
      }
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& b : block.frame) {
          kern.caxpy(-kern.cdot(b.data(), v.data(), dim), b.data(), v.data(), dim);
        }
      }
      const double nrm = std::sqrt(kern.norm_sq(v.data(), dim));
      if (nrm < 1e-8) continue;
      for (auto& x : v) x /= nrm;
      block.frame.push_back(std::move(v));
    }
    if (block.K() != K) {
      throw Error(ErrorCode::kInvalidStabilizer,
                  "stabilizer: block " + std::to_string(index + 1) + " has dimension " +
                      std::to_string(block.K()) + ", expected " + std::to_string(K));
    }
    blocks.push_back(std::move(block));
  }
  return HybridCode(2, spec.n, std::move(blocks));
}

}  // namespace hybridec
