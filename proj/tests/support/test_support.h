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

// Fixtures, random code generators and dense brute-force oracles shared by the
// unit and acceptance tests. The oracles here deliberately avoid the library's
// fast paths: single-qudit matrices are written out by hand and combined with
// a naive Kronecker loop, and every trace is taken of an explicitly formed
// product.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "hybridec/code_model.h"
#include "hybridec/error_basis.h"
#include "hybridec/linalg.h"

namespace hybridec::testing {

inline CVector basis_vector(std::size_t dim, std::size_t index) {
  CVector v(dim);
  v[index] = 1.0;
  return v;
}

/// ((1, 1:2))_2 with C1 = span|0>, C2 = span|1>.
inline HybridCode fixture_t1() {
  return HybridCode(2, 1, {CodeBlock{{basis_vector(2, 0)}}, CodeBlock{{basis_vector(2, 1)}}});
}

/// ((2, 1:2))_2 with C1 = span|00>, C2 = span|11>.
inline HybridCode fixture_t3() {
  return HybridCode(2, 2, {CodeBlock{{basis_vector(4, 0)}}, CodeBlock{{basis_vector(4, 3)}}});
}

inline StabilizerSpec five_qubit_spec() {
  StabilizerSpec spec;
  spec.n = 5;
  for (const char* g : {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}) {
    spec.generators.push_back(parse_signed_pauli(g));
  }
  return spec;
}

/// [[5,1,3]] as a ((5, 2:1))_2 code.
inline HybridCode fixture_f5() { return from_stabilizer(five_qubit_spec()); }

inline Complex random_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  const double re = g(rng);
  const double im = g(rng);
  return {re, im};
}

inline CVector random_vector(std::size_t dim, std::mt19937_64& rng) {
  CVector v(dim);
  for (auto& x : v) x = random_complex(rng);
  return v;
}

inline CVector random_unit_vector(std::size_t dim, std::mt19937_64& rng) {
  CVector v = random_vector(dim, rng);
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  for (auto& x : v) x /= std::sqrt(s);
  return v;
}

inline CMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  CMatrix m(rows, cols);
  for (auto& x : m.entries()) x = random_complex(rng);
  return m;
}

/// Gaussian frames orthonormalized jointly, then cut into M blocks of K.
inline HybridCode random_frame_code(unsigned q, std::size_t n, std::size_t K, std::size_t M,
                                    std::mt19937_64& rng) {
  const std::size_t dim = ambient_dim(q, n);
  std::vector<CVector> raw;
  for (std::size_t k = 0; k < K * M; ++k) raw.push_back(random_vector(dim, rng));
  const auto ortho = orthonormalize(raw, 1e-8);
  std::vector<CodeBlock> blocks(M);
  for (std::size_t k = 0; k < K * M; ++k) blocks[k / K].frame.push_back(ortho.at(k));
  return HybridCode(q, n, std::move(blocks));
}

inline PauliElement random_pauli(unsigned q, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> digit(0, q - 1);
  std::vector<unsigned> x(n), z(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = digit(rng);
    z[i] = digit(rng);
  }
  return PauliElement(q, std::move(x), std::move(z));
}

/// Rejection-samples r stabilizer generators and c classical operators until
/// from_stabilizer accepts them. Gives codes that detect some low-weight
/// errors, unlike generic random frames.
inline HybridCode random_stabilizer_code(std::size_t n, std::size_t r, std::size_t c,
                                         std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 1);
  for (;;) {
    StabilizerSpec spec;
    spec.n = n;
    for (std::size_t i = 0; i < r; ++i) {
      spec.generators.push_back({coin(rng) ? 1 : -1, random_pauli(2, n, rng)});
    }
    for (std::size_t j = 0; j < c; ++j) spec.classical_ops.push_back(random_pauli(2, n, rng));
    try {
      return from_stabilizer(spec);
    } catch (const std::exception&) {
    }
  }
}

/// Single-qudit shift and clock written out entry by entry.
inline CMatrix oracle_shift(unsigned q) {
  CMatrix m(q, q);
  for (unsigned j = 0; j < q; ++j) m((j + 1) % q, j) = 1.0;
  return m;
}

inline CMatrix oracle_clock(unsigned q) {
  CMatrix m(q, q);
  for (unsigned j = 0; j < q; ++j) m(j, j) = std::polar(1.0, 2.0 * std::numbers::pi * j / q);
  return m;
}

inline CMatrix oracle_mul(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  }
  return out;
}

inline CMatrix oracle_kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t r = 0; r < out.rows(); ++r) {
    for (std::size_t c = 0; c < out.cols(); ++c) {
      out(r, c) = a(r / b.rows(), c / b.cols()) * b(r % b.rows(), c % b.cols());
    }
  }
  return out;
}

inline CMatrix oracle_power(const CMatrix& m, unsigned e) {
  CMatrix out = CMatrix::identity(m.rows());
  for (unsigned k = 0; k < e; ++k) out = oracle_mul(out, m);
  return out;
}

/// Dense realization of a basis element built without realize().
inline CMatrix oracle_dense(const PauliElement& e) {
  CMatrix out = CMatrix::identity(1);
  const CMatrix x = oracle_shift(e.q());
  const CMatrix z = oracle_clock(e.q());
  for (std::size_t i = 0; i < e.n(); ++i) {
    out = oracle_kron(out, oracle_mul(oracle_power(x, e.xvec()[i]), oracle_power(z, e.zvec()[i])));
  }
  return out;
}

inline CMatrix oracle_projector(const CodeBlock& block) {
  const std::size_t dim = block.frame.front().size();
  CMatrix p(dim, dim);
  for (const auto& v : block.frame) {
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) p(r, c) += v[r] * std::conj(v[c]);
    }
  }
  return p;
}

inline CMatrix oracle_adjoint(const CMatrix& a) {
  CMatrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = std::conj(a(r, c));
  }
  return out;
}

inline Complex oracle_trace(const CMatrix& a) {
  Complex t = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

struct OracleEnumerators {
  std::vector<double> A, B, A_perp, C;
};

/// Literal transcription of the defining sums over the whole error basis.
inline OracleEnumerators oracle_enumerators(const HybridCode& code) {
  const std::size_t n = code.n();
  const double K = static_cast<double>(code.K());
  const double M = static_cast<double>(code.M());
  std::vector<CMatrix> proj;
  for (const auto& b : code.blocks()) proj.push_back(oracle_projector(b));
  OracleEnumerators out{std::vector<double>(n + 1), std::vector<double>(n + 1),
                        std::vector<double>(n + 1), std::vector<double>(n + 1)};
  for (std::size_t d = 0; d <= n; ++d) {
    const auto set = enumerate_weight(code.q(), n, d);
    for (std::size_t k = 0; k < set.size(); ++k) {
      const CMatrix e = oracle_dense(set[k]);
      const CMatrix e_star = oracle_adjoint(e);
      for (std::size_t a = 0; a < code.M(); ++a) {
        for (std::size_t b = 0; b < code.M(); ++b) {
          const CMatrix x = oracle_mul(oracle_mul(proj[b], e), proj[a]);
          out.A[d] += std::norm(oracle_trace(x)) / (K * K * M);
          const double t = oracle_trace(oracle_mul(x, e_star)).real() / (K * M);
          out.B[d] += t;
          (a == b ? out.A_perp : out.C)[d] += t;
        }
      }
    }
  }
  return out;
}

}  // namespace hybridec::testing
