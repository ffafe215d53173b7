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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "zxel/diagram.hpp"

namespace zxel {

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dense row-major complex matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> data);

  static Matrix identity(std::size_t n);
  static Matrix column(const std::vector<Complex>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Complex>& data() const { return data_; }
  std::vector<Complex>& data() { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
std::string format_matrix(const Matrix& m, int precision = 6);

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr int kDefaultWireCap = 14;

enum class ContractionOrder {
  kGreedy,      // pick the pairwise contraction leaving the fewest open wires
  kSequential,  // absorb tensors one at a time in node-id order
};

struct ContractionOptions {
  int wire_cap = kDefaultWireCap;
  ContractionOrder order = ContractionOrder::kGreedy;
};

// Standard interpretation: a 2^m x 2^n matrix for a diagram n -> m.
Matrix interpret(const Diagram& d, const ContractionOptions& options = {});

// Column vector of a state diagram (no inputs), indexed so that k = sum a_i 2^i
// with wire 0 the right-most output.
std::vector<Complex> contract_state(const Diagram& d, const ContractionOptions& options = {});

bool matrices_equal(const Matrix& a, const Matrix& b, double tol = kDefaultTolerance);
// Max-abs entry difference, or +inf on a shape mismatch.
double max_deviation(const Matrix& a, const Matrix& b);

}  // namespace zxel
