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

#include <cmath>

#include "zxel/kernels.hpp"

namespace zxel::kernels::detail {

namespace {

// Complex products are spelled out so the reference does not depend on the
// library's NaN-recovery path in operator*.
void axpy_scalar(std::size_t n, Complex alpha, const Complex* x, Complex* y) {
  const double ar = alpha.real();
  const double ai = alpha.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real();
    const double xi = x[i].imag();
    y[i] = {y[i].real() + (ar * xr - ai * xi), y[i].imag() + (ar * xi + ai * xr)};
  }
}

void scale_scalar(std::size_t n, Complex alpha, const Complex* x, Complex* y) {
  const double ar = alpha.real();
  const double ai = alpha.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real();
    const double xi = x[i].imag();
    y[i] = {ar * xr - ai * xi, ar * xi + ai * xr};
  }
}

double max_abs_diff_scalar(std::size_t n, const Complex* a, const Complex* b) {
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dr = a[i].real() - b[i].real();
    const double di = a[i].imag() - b[i].imag();
    best = std::fmax(best, std::sqrt(dr * dr + di * di));
  }
  return best;
}

}  // namespace

const Table& scalar_table() {
  static const Table t{axpy_scalar, scale_scalar, max_abs_diff_scalar};
  return t;
}

}  // namespace zxel::kernels::detail
