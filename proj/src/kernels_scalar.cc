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

#include "hybridec/kernels.h"

namespace hybridec::kernels {
namespace {

std::complex<double> cdot_scalar(const std::complex<double>* a, const std::complex<double>* b,
                                 std::size_t n) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double ar = a[k].real(), ai = a[k].imag();
    const double br = b[k].real(), bi = b[k].imag();
    re += ar * br + ai * bi;
    im += ar * bi - ai * br;
  }
  return {re, im};
}

double norm_sq_scalar(const std::complex<double>* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    acc += a[k].real() * a[k].real() + a[k].imag() * a[k].imag();
  }
  return acc;
}

void caxpy_scalar(std::complex<double> alpha, const std::complex<double>* x,
                  std::complex<double>* y, std::size_t n) {
  const double ar = alpha.real(), ai = alpha.imag();
  for (std::size_t k = 0; k < n; ++k) {
    const double xr = x[k].real(), xi = x[k].imag();
    y[k] = {y[k].real() + ar * xr - ai * xi, y[k].imag() + ar * xi + ai * xr};
  }
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{"scalar", cdot_scalar, norm_sq_scalar, caxpy_scalar};
  return table;
}

}  // namespace hybridec::kernels
