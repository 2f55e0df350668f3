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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace hybridec {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

/// Global comparison tolerances. Matrix-entry checks use `kMatrixTol`,
/// scalar identities use `kScalarTol`.
inline constexpr double kMatrixTol = 1e-9;
inline constexpr double kScalarTol = 1e-12;

/// Dense row-major complex matrix.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols);
  CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static CMatrix identity(std::size_t dim);
  static CMatrix diagonal(std::span<const Complex> diag);
  /// v w^*
  static CMatrix outer(std::span<const Complex> v, std::span<const Complex> w);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Complex> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  std::span<const Complex> entries() const { return entries_; }
  std::span<Complex> entries() { return entries_; }

  CVector column(std::size_t c) const;
  Complex trace() const;

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(Complex s);

  bool operator==(const CMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(Complex s, CMatrix a);

CMatrix mat_mul(const CMatrix& a, const CMatrix& b);
CVector mat_vec(const CMatrix& a, std::span<const Complex> v);
CMatrix adjoint(const CMatrix& a);

/// Tr(a b) accumulated directly over entry pairs, without forming the product.
Complex trace_product(const CMatrix& a, const CMatrix& b);

/// Kronecker product; the left factor carries the slow index.
CMatrix tensor_product(const CMatrix& a, const CMatrix& b);

double max_abs_diff(const CMatrix& a, const CMatrix& b);
double max_abs(const CMatrix& a);
bool is_finite(const CMatrix& a);

/// <a|b> = sum conj(a_k) b_k
Complex inner(std::span<const Complex> a, std::span<const Complex> b);
double norm(std::span<const Complex> v);

/// Gram-Schmidt with one re-orthogonalization pass. Vectors whose residual
/// norm drops below `tol` are discarded.
std::vector<CVector> orthonormalize(std::span<const CVector> vectors, double tol);

/// Number of singular values above tol times the largest one.
std::size_t numeric_rank(const CMatrix& a, double tol);

/// Largest singular value.
double operator_norm(const CMatrix& a);

/// Smallest eigenvalue of the Hermitian part (a + a^*) / 2.
double min_hermitian_eigenvalue(const CMatrix& a);

}  // namespace hybridec
