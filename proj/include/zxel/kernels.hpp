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

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

// Dense complex inner loops used by contraction, Kronecker products and
// matrix comparison. Each kernel has a scalar reference version and, on x86-64,
// an AVX2+FMA version; the active table is chosen once at startup from CPUID.

namespace zxel::kernels {

using Complex = std::complex<double>;

enum class Isa { kScalar, kAvx2 };

std::string_view name(Isa isa);

struct Table {
  // y[i] += alpha * x[i]
  void (*axpy)(std::size_t n, Complex alpha, const Complex* x, Complex* y);
  // y[i] = alpha * x[i]
  void (*scale)(std::size_t n, Complex alpha, const Complex* x, Complex* y);
  // max_i |a[i] - b[i]|
  double (*max_abs_diff)(std::size_t n, const Complex* a, const Complex* b);
};

// Whether the running CPU can execute `isa`.
bool supported(Isa isa);

// Table for a specific ISA; throws std::invalid_argument when unsupported.
const Table& table(Isa isa);

// Best supported ISA, honouring ZXEL_FORCE_SCALAR=1 in the environment.
Isa active_isa();
const Table& active();

void axpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y);
void scale(Complex alpha, std::span<const Complex> x, std::span<Complex> y);
double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b);

namespace detail {
const Table& scalar_table();
#if defined(__x86_64__) || defined(_M_X64)
const Table& avx2_table();
#endif
}  // namespace detail

}  // namespace zxel::kernels
