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

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "zxel/kernels.hpp"

namespace zxel::kernels {

std::string_view name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "?";
}

bool supported(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if (defined(__x86_64__) || defined(_M_X64)) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

const Table& table(Isa isa) {
  if (!supported(isa)) {
    throw std::invalid_argument("kernel set " + std::string(name(isa)) + " not supported here");
  }
#if defined(__x86_64__) || defined(_M_X64)
  if (isa == Isa::kAvx2) return detail::avx2_table();
#endif
  return detail::scalar_table();
}

Isa active_isa() {
  static const Isa chosen = [] {
    const char* force = std::getenv("ZXEL_FORCE_SCALAR");
    if (force != nullptr && std::string(force) == "1") return Isa::kScalar;
    return supported(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar;
  }();
  return chosen;
}

const Table& active() {
  static const Table& t = table(active_isa());
  return t;
}

void axpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y) {
  if (x.size() != y.size()) throw std::invalid_argument("axpy: length mismatch");
  active().axpy(x.size(), alpha, x.data(), y.data());
}

void scale(Complex alpha, std::span<const Complex> x, std::span<Complex> y) {
  if (x.size() != y.size()) throw std::invalid_argument("scale: length mismatch");
  active().scale(x.size(), alpha, x.data(), y.data());
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw std::invalid_argument("max_abs_diff: length mismatch");
  return active().max_abs_diff(a.size(), a.data(), b.data());
}

}  // namespace zxel::kernels
