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

#include <string>
#include <vector>

#include "zxel/diagram.hpp"
#include "zxel/semantics.hpp"

namespace zxel {

// Coefficient vector of a state diagram on m wires; coeffs[k] is the
// amplitude of e_k with k = sum a_i 2^i, wire 0 right-most. For m = 0 the
// vector holds the single scalar.
struct NormalForm {
  int m = 0;
  std::vector<Complex> coeffs{1.0};
};

struct ElementarySpec {
  enum class Kind { kRowAddition, kRowMultiplication };
  Kind kind = Kind::kRowAddition;
  int m = 1;
  Complex coefficient{0.0, 0.0};
  std::vector<int> subset;  // row additions only, sorted

  // Row touched: 2^m - 1 - sum_{i in S} 2^i for additions, 2^m - 1 otherwise.
  std::size_t target_row() const;
};

Diagram elementary_diagram(const ElementarySpec& spec);
Matrix elementary_matrix(const ElementarySpec& spec);

NormalForm nf_from_vector(const std::vector<Complex>& v);

// The 2^m - 1 row additions (by increasing target row) and the final row
// multiplication that take e_{2^m - 1} to nf.coeffs.
std::vector<ElementarySpec> nf_elementary_specs(const NormalForm& nf);

// State diagram 0 -> m: base state |1...1>, the row additions, then the row
// multiplication. For m = 0 this is the scalar normal form diagram.
Diagram nf_to_diagram(const NormalForm& nf);

NormalForm scalar_nf(Complex a);
// Pink pi effect applied to the green state (1, a).
Diagram scalar_nf_diagram(Complex a);

// coeffs[i * 2^n + j] = a_i * b_j; `a` takes the left-most wires.
NormalForm nf_tensor(const NormalForm& a, const NormalForm& b);

// Joins wires p < q (wire 0 right-most) with a cup.
NormalForm nf_self_plug(const NormalForm& nf, int p, int q);

// Output slot s of the result is slot perm[s] of nf (slots left to right).
NormalForm nf_permute(const NormalForm& nf, const std::vector<int>& perm);

enum class GeneratorKind {
  kCopy,     // Z_1 1 -> 2
  kCodot,    // Z_1 2 -> 1
  kGreenState,  // Z_a 0 -> 1
  kIdentity,
  kCap,
  kCup,
  kHadamard,
  kTriangle,
  kTriangleInv,
  kSwap,
};

std::string to_string(GeneratorKind kind);
GeneratorKind generator_kind_from_string(const std::string& name);

// Normal form of the bent generator. `a` is used by kGreenState only.
NormalForm generator_nf(GeneratorKind kind, Complex a = 1.0);
// Bent generator diagram matching generator_nf.
Diagram generator_diagram(GeneratorKind kind, Complex a = 1.0);

// Normal form of the bent Z spider with `degree` legs, folded from the green
// state and copy generators by tensoring and plugging.
NormalForm z_spider_nf(int degree, Complex a);

// Bends d to a state and folds its nodes, layer by layer, into a normal form
// on n + m wires. Throws ResourceError when an intermediate form would exceed
// wire_cap wires.
NormalForm normalize(const Diagram& d, int wire_cap = kDefaultWireCap);

bool nf_equal(const NormalForm& a, const NormalForm& b, double tol = kDefaultTolerance);

}  // namespace zxel
