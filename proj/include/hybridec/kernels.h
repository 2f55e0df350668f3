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
#include <string_view>

namespace hybridec::kernels {

/// Inner loops over contiguous complex<double> arrays. Every table computes
/// the same quantities; the SIMD tables only change the summation grouping,
/// which is fixed for a given length so results stay reproducible.
struct KernelTable {
  std::string_view name;
  /// sum_k conj(a[k]) * b[k]
  std::complex<double> (*cdot)(const std::complex<double>* a, const std::complex<double>* b,
                               std::size_t n);
  /// sum_k |a[k]|^2
  double (*norm_sq)(const std::complex<double>* a, std::size_t n);
  /// y[k] += alpha * x[k]
  void (*caxpy)(std::complex<double> alpha, const std::complex<double>* x, std::complex<double>* y,
                std::size_t n);
};

const KernelTable& scalar_table();

/// Null when the binary was built without AVX2 support or the CPU lacks it.
const KernelTable* avx2_table();

/// Table used by the library. Chosen once: AVX2 when available, unless the
/// environment variable HYBRIDEC_SIMD is set to "scalar".
const KernelTable& active();

}  // namespace hybridec::kernels
