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

// Independent reference computations used as test oracles. None of these call
// into the library's contraction or normal-form code.

#include <complex>
#include <cstddef>
#include <random>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using Mat = std::vector<std::vector<C>>;

inline Mat zeros(std::size_t r, std::size_t c) { return Mat(r, std::vector<C>(c, 0.0)); }

inline Mat eye(std::size_t n) {
  Mat m = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1.0;
  return m;
}

inline Mat matmul(const Mat& a, const Mat& b) {
  Mat out = zeros(a.size(), b.empty() ? 0 : b[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

// Textbook Kronecker product, entry by entry.
inline Mat kron(const Mat& a, const Mat& b) {
  const std::size_t ar = a.size(), ac = a[0].size(), br = b.size(), bc = b[0].size();
  Mat out = zeros(ar * br, ac * bc);
  for (std::size_t i = 0; i < ar * br; ++i)
    for (std::size_t j = 0; j < ac * bc; ++j) out[i][j] = a[i / br][j / bc] * b[i % br][j % bc];
  return out;
}

inline std::vector<C> kron_vec(const std::vector<C>& a, const std::vector<C>& b) {
  std::vector<C> out;
  for (const C& x : a)
    for (const C& y : b) out.push_back(x * y);
  return out;
}

inline int popcount(std::size_t x) { return __builtin_popcountll(x); }

// Green spider |0..0><0..0| + a|1..1><1..1|, 2^m x 2^n.
inline Mat green(int n, int m, C a) {
  Mat out = zeros(std::size_t{1} << m, std::size_t{1} << n);
  if (n == 0 && m == 0) {
    out[0][0] = 1.0 + a;
    return out;
  }
  out[0][0] = 1.0;
  out[(std::size_t{1} << m) - 1][(std::size_t{1} << n) - 1] += a;
  return out;
}

// Red spider by its parity sum: entry 1 where the total parity of the
// row and column bit strings equals tau/pi.
inline Mat parity(int n, int m, int odd) {
  Mat out = zeros(std::size_t{1} << m, std::size_t{1} << n);
  for (std::size_t r = 0; r < out.size(); ++r)
    for (std::size_t c = 0; c < out[0].size(); ++c)
      if ((popcount(r) + popcount(c)) % 2 == odd) out[r][c] = 1.0;
  return out;
}

inline Mat h_mat() { return {{1.0, 1.0}, {1.0, -1.0}}; }
inline Mat t_mat() { return {{1.0, 1.0}, {0.0, 1.0}}; }
inline Mat tinv_mat() { return {{1.0, -1.0}, {0.0, 1.0}}; }

// A_j = I + a |j><2^m - 1| with j = 2^m - 1 - sum_{i in S} 2^i.
inline Mat row_addition(int m, C a, const std::vector<int>& s) {
  const std::size_t dim = std::size_t{1} << m;
  std::size_t j = dim - 1;
  for (int i : s) j -= std::size_t{1} << i;
  Mat out = eye(dim);
  out[j][dim - 1] += a;
  return out;
}

inline Mat row_multiplication(int m, C a) {
  const std::size_t dim = std::size_t{1} << m;
  Mat out = eye(dim);
  out[dim - 1][dim - 1] = a;
  return out;
}

// Contracts wires p and q (wire 0 right-most) of an m-wire state with a cup.
inline std::vector<C> plug(const std::vector<C>& v, int m, int p, int q) {
  std::vector<C> out(v.size() / 4, 0.0);
  for (std::size_t k = 0; k < v.size(); ++k) {
    const std::size_t bp = (k >> p) & 1u, bq = (k >> q) & 1u;
    if (bp != bq) continue;
    // Drop bits p and q, keeping the rest in order.
    std::size_t reduced = 0, w = 0;
    for (int i = 0; i < m; ++i) {
      if (i == p || i == q) continue;
      reduced |= ((k >> i) & 1u) << w++;
    }
    out[reduced] += v[k];
  }
  return out;
}

inline C random_complex(std::mt19937_64& rng, double radius = 2.0) {
  std::uniform_real_distribution<double> u(-radius, radius);
  while (true) {
    C z(u(rng), u(rng));
    if (std::abs(z) <= radius) return z;
  }
}

inline std::vector<C> random_vector(std::mt19937_64& rng, std::size_t n) {
  std::vector<C> v(n);
  for (C& z : v) z = random_complex(rng);
  return v;
}

}  // namespace oracle
