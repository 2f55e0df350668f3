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

#include <immintrin.h>

#include "hybridec/kernels.h"

// Compiled with -mavx2 -mfma. Only reached after a runtime CPU check.

namespace hybridec::kernels {
namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(s) + _mm_cvtsd_f64(_mm_unpackhi_pd(s, s));
}

std::complex<double> cdot_avx2(const std::complex<double>* a, const std::complex<double>* b,
                               std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  // Two complex numbers per register: [re0, im0, re1, im1].
  __m256d re0 = _mm256_setzero_pd(), re1 = _mm256_setzero_pd();
  __m256d im0 = _mm256_setzero_pd(), im1 = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d va0 = _mm256_loadu_pd(pa + 2 * k);
    const __m256d vb0 = _mm256_loadu_pd(pb + 2 * k);
    const __m256d va1 = _mm256_loadu_pd(pa + 2 * k + 4);
    const __m256d vb1 = _mm256_loadu_pd(pb + 2 * k + 4);
    re0 = _mm256_fmadd_pd(va0, vb0, re0);
    re1 = _mm256_fmadd_pd(va1, vb1, re1);
    im0 = _mm256_fmadd_pd(va0, _mm256_permute_pd(vb0, 0b0101), im0);
    im1 = _mm256_fmadd_pd(va1, _mm256_permute_pd(vb1, 0b0101), im1);
  }
  for (; k + 2 <= n; k += 2) {
    const __m256d va = _mm256_loadu_pd(pa + 2 * k);
    const __m256d vb = _mm256_loadu_pd(pb + 2 * k);
    re0 = _mm256_fmadd_pd(va, vb, re0);
    im0 = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0b0101), im0);
  }
  // im lanes hold [ar*bi, ai*br, ...]; the imaginary part is the alternating sum.
  const __m256d sign = _mm256_setr_pd(1.0, -1.0, 1.0, -1.0);
  double re = hsum(_mm256_add_pd(re0, re1));
  double im = hsum(_mm256_mul_pd(_mm256_add_pd(im0, im1), sign));
  for (; k < n; ++k) {
    re += a[k].real() * b[k].real() + a[k].imag() * b[k].imag();
    im += a[k].real() * b[k].imag() - a[k].imag() * b[k].real();
  }
  return {re, im};
}

double norm_sq_avx2(const std::complex<double>* a, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d v0 = _mm256_loadu_pd(pa + 2 * k);
    const __m256d v1 = _mm256_loadu_pd(pa + 2 * k + 4);
    acc0 = _mm256_fmadd_pd(v0, v0, acc0);
    acc1 = _mm256_fmadd_pd(v1, v1, acc1);
  }
  for (; k + 2 <= n; k += 2) {
    const __m256d v = _mm256_loadu_pd(pa + 2 * k);
    acc0 = _mm256_fmadd_pd(v, v, acc0);
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; k < n; ++k) acc += std::norm(a[k]);
  return acc;
}

void caxpy_avx2(std::complex<double> alpha, const std::complex<double>* x, std::complex<double>* y,
                std::size_t n) {
  const double* px = reinterpret_cast<const double*>(x);
  double* py = reinterpret_cast<double*>(y);
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d vx = _mm256_loadu_pd(px + 2 * k);
    const __m256d t = _mm256_mul_pd(ai, _mm256_permute_pd(vx, 0b0101));
    // even lanes: ar*xr - ai*xi, odd lanes: ar*xi + ai*xr
    const __m256d prod = _mm256_fmaddsub_pd(ar, vx, t);
    _mm256_storeu_pd(py + 2 * k, _mm256_add_pd(_mm256_loadu_pd(py + 2 * k), prod));
  }
  for (; k < n; ++k) y[k] += alpha * x[k];
}

}  // namespace

const KernelTable& avx2_table_impl() {
  static const KernelTable table{"avx2", cdot_avx2, norm_sq_avx2, caxpy_avx2};
  return table;
}

}  // namespace hybridec::kernels
