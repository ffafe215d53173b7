// Copyright 2026 The zxel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <immintrin.h>

#include <cmath>

#include "zxel/kernels.hpp"

// Built with -mavx2 -mfma; only reached after a CPUID check.

namespace zxel::kernels::detail {

namespace {

inline const double* as_doubles(const Complex* p) { return reinterpret_cast<const double*>(p); }
inline double* as_doubles(Complex* p) { return reinterpret_cast<double*>(p); }

// Two interleaved complex values per register: [re0, im0, re1, im1].
inline __m256d cmul(__m256d ar, __m256d ai, __m256d x) {
  const __m256d swapped = _mm256_permute_pd(x, 0b0101);
  return _mm256_addsub_pd(_mm256_mul_pd(ar, x), _mm256_mul_pd(ai, swapped));
}

void axpy_avx2(std::size_t n, Complex alpha, const Complex* x, Complex* y) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  const double* xd = as_doubles(x);
  double* yd = as_doubles(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(yv, cmul(ar, ai, xv)));
  }
  for (; i < n; ++i) {
    const double xr = x[i].real();
    const double xi = x[i].imag();
    y[i] = {y[i].real() + (alpha.real() * xr - alpha.imag() * xi),
            y[i].imag() + (alpha.real() * xi + alpha.imag() * xr)};
  }
}

void scale_avx2(std::size_t n, Complex alpha, const Complex* x, Complex* y) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  const double* xd = as_doubles(x);
  double* yd = as_doubles(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    _mm256_storeu_pd(yd + 2 * i, cmul(ar, ai, _mm256_loadu_pd(xd + 2 * i)));
  }
  for (; i < n; ++i) {
    const double xr = x[i].real();
    const double xi = x[i].imag();
    y[i] = {alpha.real() * xr - alpha.imag() * xi, alpha.real() * xi + alpha.imag() * xr};
  }
}

double max_abs_diff_avx2(std::size_t n, const Complex* a, const Complex* b) {
  const double* ad = as_doubles(a);
  const double* bd = as_doubles(b);
  __m256d best = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(ad + 2 * i), _mm256_loadu_pd(bd + 2 * i));
    const __m256d sq = _mm256_mul_pd(d, d);
    // [r0^2 + i0^2, same, r1^2 + i1^2, same]
    const __m256d mod2 = _mm256_hadd_pd(sq, sq);
    best = _mm256_max_pd(best, _mm256_sqrt_pd(mod2));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, best);
  double out = std::fmax(std::fmax(lanes[0], lanes[1]), std::fmax(lanes[2], lanes[3]));
  for (; i < n; ++i) {
    const double dr = a[i].real() - b[i].real();
    const double di = a[i].imag() - b[i].imag();
    out = std::fmax(out, std::sqrt(dr * dr + di * di));
  }
  return out;
}

}  // namespace

const Table& avx2_table() {
  static const Table t{axpy_avx2, scale_avx2, max_abs_diff_avx2};
  return t;
}

}  // namespace zxel::kernels::detail
