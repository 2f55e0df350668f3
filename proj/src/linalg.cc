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

#include "hybridec/linalg.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "hybridec/error.h"
#include "hybridec/kernels.h"

namespace hybridec {
namespace {

using EigenMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const EigenMatrix> as_eigen(const CMatrix& a) {
  return {a.entries().data(), static_cast<Eigen::Index>(a.rows()),
          static_cast<Eigen::Index>(a.cols())};
}

void require(bool ok, const char* op, std::size_t lhs, std::size_t rhs) {
  if (!ok) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(op) + ": dimension mismatch (" + std::to_string(lhs) + " vs " +
                    std::to_string(rhs) + ")");
  }
}

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  require(entries_.size() == rows * cols, "CMatrix", entries_.size(), rows * cols);
}

CMatrix CMatrix::identity(std::size_t dim) {
  CMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const Complex> diag) {
  CMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

CMatrix CMatrix::outer(std::span<const Complex> v, std::span<const Complex> w) {
  CMatrix m(v.size(), w.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) m(i, j) = v[i] * std::conj(w[j]);
  }
  return m;
}

CVector CMatrix::column(std::size_t c) const {
  CVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Complex CMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  require(rows_ == other.rows_ && cols_ == other.cols_, "add", entries_.size(),
          other.entries_.size());
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
  require(rows_ == other.rows_ && cols_ == other.cols_, "sub", entries_.size(),
          other.entries_.size());
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

CMatrix& CMatrix::operator*=(Complex s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
CMatrix operator*(Complex s, CMatrix a) { return a *= s; }

CMatrix mat_mul(const CMatrix& a, const CMatrix& b) {
  require(a.cols() == b.rows(), "mat_mul", a.cols(), b.rows());
  CMatrix out(a.rows(), b.cols());
  // i-k-j order keeps the inner loop contiguous in both b and out.
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex* dst = out.entries().data() + i * out.cols();
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex s = a(i, k);
      if (s == Complex(0.0)) continue;
      const Complex* src = b.entries().data() + k * b.cols();
      for (std::size_t j = 0; j < b.cols(); ++j) dst[j] += s * src[j];
    }
  }
  return out;
}

CVector mat_vec(const CMatrix& a, std::span<const Complex> v) {
  require(a.cols() == v.size(), "mat_vec", a.cols(), v.size());
  CVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

CMatrix adjoint(const CMatrix& a) {
  CMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  }
  return out;
}

Complex trace_product(const CMatrix& a, const CMatrix& b) {
  require(a.cols() == b.rows() && a.rows() == b.cols(), "trace_product", a.cols(), b.rows());
  Complex acc = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * b(j, i);
  }
  return acc;
}

CMatrix tensor_product(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia) {
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const Complex s = a(ia, ja);
      for (std::size_t ib = 0; ib < b.rows(); ++ib) {
        for (std::size_t jb = 0; jb < b.cols(); ++jb) {
          out(ia * b.rows() + ib, ja * b.cols() + jb) = s * b(ib, jb);
        }
      }
    }
  }
  return out;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "max_abs_diff", a.entries().size(),
          b.entries().size());
  double m = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
  }
  return m;
}

double max_abs(const CMatrix& a) {
  double m = 0.0;
  for (const auto& e : a.entries()) m = std::max(m, std::abs(e));
  return m;
}

bool is_finite(const CMatrix& a) {
  return std::all_of(a.entries().begin(), a.entries().end(), [](const Complex& e) {
    return std::isfinite(e.real()) && std::isfinite(e.imag());
  });
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
  require(a.size() == b.size(), "inner", a.size(), b.size());
  return kernels::active().cdot(a.data(), b.data(), a.size());
}

double norm(std::span<const Complex> v) {
  return std::sqrt(kernels::active().norm_sq(v.data(), v.size()));
}

std::vector<CVector> orthonormalize(std::span<const CVector> vectors, double tol) {
  if (vectors.empty()) throw Error(ErrorCode::kOutOfRange, "orthonormalize: empty input");
  const std::size_t dim = vectors.front().size();
  const auto& k = kernels::active();
  std::vector<CVector> basis;
  for (const auto& v : vectors) {
    require(v.size() == dim, "orthonormalize", v.size(), dim);
    CVector w = v;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) {
        const Complex c = k.cdot(b.data(), w.data(), dim);
        k.caxpy(-c, b.data(), w.data(), dim);
      }
    }
    const double nrm = std::sqrt(k.norm_sq(w.data(), dim));
    if (nrm < tol) continue;
    for (auto& x : w) x /= nrm;
    basis.push_back(std::move(w));
  }
  return basis;
}

std::size_t numeric_rank(const CMatrix& a, double tol) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(as_eigen(a));
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double cutoff = tol * s(0);
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > cutoff) ++rank;
  }
  return rank;
}

double operator_norm(const CMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(as_eigen(a));
  return svd.singularValues()(0);
}

double min_hermitian_eigenvalue(const CMatrix& a) {
  require(a.is_square(), "min_hermitian_eigenvalue", a.rows(), a.cols());
  if (a.rows() == 0) return 0.0;
  const Eigen::MatrixXcd m = as_eigen(a);
  const Eigen::MatrixXcd h = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace hybridec
