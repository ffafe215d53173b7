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

#include <vector>

#include "zxel/diagram.hpp"

namespace zxel {

// Wire indices below count from the right: wire 0 is the right-most boundary
// slot, wire m-1 the left-most.

// Row addition A_j = I + a |j><2^m - 1| with j = 2^m - 1 - sum_{i in S} 2^i.
// A green node `a` is joined by triangles to a copy spider on every wire and
// by pink XOR spiders to the wires in S.
Diagram row_addition_diagram(int m, Complex a, const std::vector<int>& s);

// Row multiplication M = diag(1, ..., 1, a).
Diagram row_multiplication_diagram(int m, Complex a);

// Variants whose control copy on each wire in `z` is sandwiched between pink
// pi nodes, so that wire is controlled on |0> instead of |1>. With c the index
// that is 0 on `z` and 1 elsewhere:
//   row_addition_pi       = I + a X_S |c><c|
//   row_multiplication_pi = I + (a - 1) |c><c|
Diagram row_addition_pi(int m, Complex a, const std::vector<int>& s, const std::vector<int>& z);
Diagram row_multiplication_pi(int m, Complex a, const std::vector<int>& z);

// |1...1> on m wires, built from pink pi states.
Diagram base_state(int m);

// Pink pi on wire i of an m-wire identity.
Diagram pauli_x_on(int m, int wire);

// Two-input AND gate T^-1 o Z^(2,1) o (T (x) T), and its helpers.
Diagram and_gate();
// P = diag(1, 1, 1, 0) on two wires.
Diagram p_gate();
// W = P o X^(1,2) (1 -> 2) and Add = X^(2,1) o P (2 -> 1).
Diagram w_gate();
Diagram add_gate();
// Upside-down triangle: interpretation T transposed.
Diagram triangle_flipped();

// Validates and normalises an index subset for m wires; throws ArityError.
std::vector<int> check_subset(int m, const std::vector<int>& s, bool allow_empty);

}  // namespace zxel
