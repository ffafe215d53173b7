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

#include <stdexcept>
#include <vector>

#include "zxel/diagram.hpp"
#include "zxel/normalform.hpp"
#include "zxel/semantics.hpp"

namespace zxel {

class NotRepresentableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// M = P * Mul(a) * A_{j1}(u1) * ... , where the additions are applied first
// (ordered by target row), then the multiplication, then the wire permutation
// P realised by permute_outputs. Trivial factors are left out.
struct Decomposition {
  int m = 0;
  std::vector<ElementarySpec> specs;
  std::vector<int> permutation;  // identity when no wires move
  Diagram diagram;
};

// Only matrices of the form P (I + u e_L^T), with L = 2^m - 1 the last row, are
// reachable with row additions, row multiplication and wire permutations.
// Throws std::invalid_argument for a size that is not 2^m x 2^m with 1 <= m <= 3,
// and NotRepresentableError otherwise.
Decomposition decompose_matrix(const Matrix& m, double tol = 1e-7);

}  // namespace zxel
