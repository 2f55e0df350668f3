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

#include "hybridec/code_model.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hybridec/error.h"

namespace hybridec {

HybridCode::HybridCode(unsigned q, std::size_t n, std::vector<CodeBlock> blocks)
    : q_(q), n_(n), blocks_(std::move(blocks)) {
  if (q_ < 2 || n_ < 1) throw Error(ErrorCode::kOutOfRange, "HybridCode: need q >= 2 and n >= 1");
  dim_ = ambient_dim(q_, n_);
  if (blocks_.empty()) throw Error(ErrorCode::kInconsistentDimensions, "HybridCode: M must be >= 1");
  const std::size_t K = blocks_.front().K();
  if (K == 0) throw Error(ErrorCode::kInconsistentDimensions, "HybridCode: K must be >= 1");
  for (std::size_t m = 0; m < blocks_.size(); ++m) {
    if (blocks_[m].K() != K) {
      throw Error(ErrorCode::kInconsistentDimensions,
                  "HybridCode: block " + std::to_string(m + 1) + " has " +
                      std::to_string(blocks_[m].K()) + " vectors, expected K = " +
                      std::to_string(K));
    }
    for (const auto& v : blocks_[m].frame) {
      if (v.size() != dim_) {
        throw Error(ErrorCode::kInconsistentDimensions,
                    "HybridCode: vector of dimension " + std::to_string(v.size()) +
                        " in block " + std::to_string(m + 1) + ", expected q^n = " +
                        std::to_string(dim_));
      }
      for (const auto& x : v) {
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
          throw Error(ErrorCode::kMalformedDocument, "HybridCode: non-finite amplitude");
        }
      }
    }
  }
  if (blocks_.size() * K > dim_) {
    throw Error(ErrorCode::kInconsistentDimensions, "HybridCode: M*K exceeds q^n");
  }
}

std::string Violation::describe() const {
  std::ostringstream os;
  if (kind == Kind::kFrameNotOrthonormal) {
    os << "block " << a << " frame is not orthonormal (Gram deviation " << magnitude << ")";
  } else {
    os << "blocks " << a << " and " << b << " are not orthogonal (overlap " << magnitude << ")";
  }
  return os.str();
}

ValidationReport validate(const HybridCode& code, double tol) {
  ValidationReport report;
  const std::size_t K = code.K();
  for (std::size_t a = 0; a < code.M(); ++a) {
    const auto& fa = code.block(a).frame;
    double gram_dev = 0.0;
    for (std::size_t i = 0; i < K; ++i) {
      for (std::size_t j = 0; j < K; ++j) {
        const Complex g = inner(fa[i], fa[j]);
        gram_dev = std::max(gram_dev, std::abs(g - Complex(i == j ? 1.0 : 0.0)));
      }
    }
    report.max_gram_deviation = std::max(report.max_gram_deviation, gram_dev);
    if (gram_dev > tol) {
      report.violations.push_back({Violation::Kind::kFrameNotOrthonormal, a + 1, a + 1, gram_dev});
    }
    for (std::size_t b = a + 1; b < code.M(); ++b) {
      const auto& fb = code.block(b).frame;
      double overlap = 0.0;
      for (const auto& u : fa) {
        for (const auto& v : fb) overlap = std::max(overlap, std::abs(inner(u, v)));
      }
      report.max_cross_overlap = std::max(report.max_cross_overlap, overlap);
      if (overlap > tol) {
        report.violations.push_back({Violation::Kind::kBlocksNotOrthogonal, a + 1, b + 1, overlap});
      }
    }
  }
  report.ok = report.violations.empty();
  return report;
}

CMatrix projector(const CodeBlock& block) {
  const std::size_t dim = block.frame.front().size();
  CMatrix p(dim, dim);
  for (const auto& v : block.frame) p += CMatrix::outer(v, v);
  return p;
}

ProjectorSet build_projector_set(const HybridCode& code, double tol) {
  ProjectorSet set;
  set.error = CMatrix::identity(code.dim());
  for (std::size_t a = 0; a < code.M(); ++a) {
    CMatrix p = projector(code.block(a));
    const double herm = max_abs_diff(p, adjoint(p));
    const double idem = max_abs_diff(mat_mul(p, p), p);
    if (herm > tol || idem > tol) {
      throw Error(ErrorCode::kInvariantViolation,
                  "projector P_" + std::to_string(a + 1) + " is not an orthogonal projector (" +
                      "hermiticity " + std::to_string(herm) + ", idempotence " +
                      std::to_string(idem) + ")");
    }
    set.error -= p;
    set.blocks.push_back(std::move(p));
  }
  for (std::size_t a = 0; a < code.M(); ++a) {
    for (std::size_t b = 0; b < code.M(); ++b) {
      if (a == b) continue;
      const double cross = max_abs(mat_mul(set.blocks[b], set.blocks[a]));
      if (cross > tol) {
        throw Error(ErrorCode::kInvariantViolation,
                    "P_" + std::to_string(b + 1) + " P_" + std::to_string(a + 1) +
                        " != 0 (max entry " + std::to_string(cross) + ")");
      }
    }
  }
  return set;
}

CVector encode(const HybridCode& code, std::size_t m, std::span<const Complex> phi) {
  if (m < 1 || m > code.M()) {
    throw Error(ErrorCode::kOutOfRange, "encode: message " + std::to_string(m) +
                                            " outside [1, " + std::to_string(code.M()) + "]");
  }
  if (phi.size() != code.K()) {
    throw Error(ErrorCode::kDimensionMismatch, "encode: logical state has dimension " +
                                                   std::to_string(phi.size()) + ", expected K = " +
                                                   std::to_string(code.K()));
  }
  if (std::abs(norm(phi) - 1.0) > 1e-10) {
    throw Error(ErrorCode::kNonUnitState, "encode: logical state is not a unit vector");
  }
  CVector out(code.dim());
  const auto& frame = code.block(m - 1).frame;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += phi[i] * frame[i][k];
  }
  return out;
}

}  // namespace hybridec
