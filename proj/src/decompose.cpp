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

#include "zxel/decompose.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace zxel {

namespace {

// Distance of P^T M from the form I + u e_L^T.
double off_pattern(const Matrix& pt_m) {
  const std::size_t last = pt_m.rows() - 1;
  double worst = 0.0;
  for (std::size_t r = 0; r < pt_m.rows(); ++r) {
    for (std::size_t c = 0; c < last; ++c) {
      worst = std::max(worst, std::abs(pt_m(r, c) - Complex(r == c ? 1.0 : 0.0)));
    }
  }
  return worst;
}

}  // namespace

Decomposition decompose_matrix(const Matrix& target, double tol) {
  const std::size_t n = target.rows();
  if (n < 2 || n != target.cols() || !std::has_single_bit(n) || n > 8) {
    throw std::invalid_argument("expected a square 2^m x 2^m matrix with 1 <= m <= 3");
  }
  const int m = std::countr_zero(n);
  const std::size_t last = n - 1;

  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    const Matrix p = interpret(permute_outputs(identity(m), perm));
    const Matrix pt_m = multiply(transpose(p), target);
    if (off_pattern(pt_m) > tol) continue;

    Decomposition out;
    out.m = m;
    out.permutation = perm;
    std::vector<Diagram> stages{identity(m)};
    for (std::size_t j = 0; j < last; ++j) {
      const Complex u = pt_m(j, last);
      if (std::abs(u) <= tol) continue;
      ElementarySpec s;
      s.kind = ElementarySpec::Kind::kRowAddition;
      s.m = m;
      s.coefficient = u;
      const std::size_t bits = last - j;
      for (int i = 0; i < m; ++i) {
        if (bits >> i & 1u) s.subset.push_back(i);
      }
      out.specs.push_back(s);
    }
    // Additions are listed by target row; subsets were built from the row.
    std::sort(out.specs.begin(), out.specs.end(),
              [](const ElementarySpec& a, const ElementarySpec& b) { return a.target_row() < b.target_row(); });
    const Complex a = pt_m(last, last);
    if (std::abs(a - 1.0) > tol) {
      ElementarySpec s;
      s.kind = ElementarySpec::Kind::kRowMultiplication;
      s.m = m;
      s.coefficient = a;
      out.specs.push_back(s);
    }
    for (const auto& s : out.specs) stages.push_back(elementary_diagram(s));
    out.diagram = permute_outputs(compose_all(stages), perm);
    const double dev = max_deviation(interpret(out.diagram), target);
    if (dev > tol) {
      throw NotRepresentableError("decomposition misses the target by " + std::to_string(dev));
    }
    return out;
  } while (std::next_permutation(perm.begin(), perm.end()));
  throw NotRepresentableError(
      "matrix is not a wire permutation of I + u e_L^T; it needs row switching, which has no "
      "elementary diagram here");
}

}  // namespace zxel
