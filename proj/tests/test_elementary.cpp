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

#include <gtest/gtest.h>

#include <random>

#include "support/helpers.hpp"
#include "support/oracles.hpp"
#include "zxel/elementary.hpp"
#include "zxel/semantics.hpp"

namespace zxel {
namespace {

using oracle::C;

std::vector<std::vector<int>> nonempty_subsets(int m) {
  std::vector<std::vector<int>> out;
  for (int mask = 1; mask < (1 << m); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < m; ++i)
      if ((mask >> i) & 1) s.push_back(i);
    out.push_back(s);
  }
  return out;
}

TEST(RowAddition, SingleWire) {
  const C a(0.7, -0.2);
  EXPECT_MAT_NEAR(interpret(row_addition_diagram(1, a, {0})), (oracle::Mat{{1.0, a}, {0.0, 1.0}}),
                  1e-12);
}

TEST(RowAddition, TwoWiresLowBit) {
  const C a(2.0, 1.0);
  oracle::Mat expected = oracle::eye(4);
  expected[2][3] = a;
  EXPECT_MAT_NEAR(interpret(row_addition_diagram(2, a, {0})), expected, 1e-12);
}

TEST(RowAddition, ZeroCoefficientIsIdentity) {
  for (int m = 1; m <= 3; ++m)
    for (const auto& s : nonempty_subsets(m))
      EXPECT_MAT_NEAR(interpret(row_addition_diagram(m, 0.0, s)), oracle::eye(std::size_t{1} << m),
                      1e-12);
}

TEST(RowAddition, MatchesFormulaForEverySubset) {
  std::mt19937_64 rng(21);
  for (int m = 1; m <= 3; ++m) {
    for (const auto& s : nonempty_subsets(m)) {
      const C a = oracle::random_complex(rng);
      EXPECT_MAT_NEAR(interpret(row_addition_diagram(m, a, s)), oracle::row_addition(m, a, s), 1e-12);
    }
  }
}

TEST(RowAddition, RejectsBadSubsets) {
  EXPECT_THROW(row_addition_diagram(2, 1.0, {}), ArityError);
  EXPECT_THROW(row_addition_diagram(2, 1.0, {2}), ArityError);
  EXPECT_THROW(row_addition_diagram(2, 1.0, {0, 0}), ArityError);
  EXPECT_THROW(row_addition_diagram(0, 1.0, {0}), ArityError);
}

TEST(RowMultiplication, Examples) {
  const C a(-1.5, 0.25);
  EXPECT_MAT_NEAR(interpret(row_multiplication_diagram(1, a)), (oracle::Mat{{1.0, 0.0}, {0.0, a}}),
                  1e-12);
  EXPECT_MAT_NEAR(interpret(row_multiplication_diagram(2, 1.0)), oracle::eye(4), 1e-12);
  EXPECT_MAT_NEAR(interpret(row_multiplication_diagram(2, 0.0)), oracle::row_multiplication(2, 0.0),
                  1e-12);
  for (int m = 1; m <= 3; ++m)
    EXPECT_MAT_NEAR(interpret(row_multiplication_diagram(m, a)), oracle::row_multiplication(m, a),
                    1e-12);
}

// Anti-controlled variants against I + a X_S |c><c| and I + (a-1)|c><c|.
TEST(PiPairVariants, MatchFormula) {
  std::mt19937_64 rng(22);
  for (int m = 1; m <= 3; ++m) {
    const std::size_t dim = std::size_t{1} << m;
    for (int zmask = 0; zmask < (1 << m); ++zmask) {
      std::vector<int> z;
      for (int i = 0; i < m; ++i)
        if ((zmask >> i) & 1) z.push_back(i);
      const std::size_t c = dim - 1 - static_cast<std::size_t>(zmask);
      const C a = oracle::random_complex(rng);
      oracle::Mat mult = oracle::eye(dim);
      mult[c][c] += a - 1.0;
      EXPECT_MAT_NEAR(interpret(row_multiplication_pi(m, a, z)), mult, 1e-12);
      for (const auto& s : nonempty_subsets(m)) {
        std::size_t flip = 0;
        for (int i : s) flip |= std::size_t{1} << i;
        oracle::Mat add = oracle::eye(dim);
        add[c ^ flip][c] += a;
        EXPECT_MAT_NEAR(interpret(row_addition_pi(m, a, s, z)), add, 1e-12);
      }
    }
  }
}

TEST(BaseState, AllOnes) {
  for (int m = 1; m <= 4; ++m) {
    std::vector<C> expected(std::size_t{1} << m, 0.0);
    expected.back() = 1.0;
    EXPECT_LE(testing_util::deviation(contract_state(base_state(m)), expected), 1e-14);
  }
}

TEST(Gadgets, AndGate) {
  EXPECT_MAT_NEAR(interpret(and_gate()), (oracle::Mat{{1, 1, 1, 0}, {0, 0, 0, 1}}), 1e-14);
}

TEST(Gadgets, WAndAdd) {
  EXPECT_MAT_NEAR(interpret(w_gate()), (oracle::Mat{{1, 0}, {0, 1}, {0, 1}, {0, 0}}), 1e-14);
  EXPECT_MAT_NEAR(interpret(add_gate()), (oracle::Mat{{1, 0, 0, 0}, {0, 1, 1, 0}}), 1e-14);
  EXPECT_MAT_NEAR(interpret(p_gate()), oracle::row_multiplication(2, 0.0), 1e-14);
}

TEST(Gadgets, FlippedTriangleIsTranspose) {
  EXPECT_MAT_NEAR(interpret(triangle_flipped()), (oracle::Mat{{1, 0}, {1, 1}}), 0.0);
}

TEST(Gadgets, PauliXOnWire) {
  // Wire 0 is the right-most slot: X on wire 0 of 2 wires is I (x) X.
  const oracle::Mat x{{0, 1}, {1, 0}};
  EXPECT_MAT_NEAR(interpret(pauli_x_on(2, 0)), oracle::kron(oracle::eye(2), x), 1e-14);
  EXPECT_MAT_NEAR(interpret(pauli_x_on(2, 1)), oracle::kron(x, oracle::eye(2)), 1e-14);
}

}  // namespace
}  // namespace zxel
