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

#include "zxel/semantics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

#include "zxel/kernels.hpp"

namespace zxel {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("matrix data has the wrong size");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::column(const std::vector<Complex>& v) { return Matrix(v.size(), 1, v); }

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: inner dimensions differ");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::span<Complex> row(out.data().data() + i * b.cols(), b.cols());
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex alpha = a(i, k);
      if (alpha == Complex{}) continue;
      kernels::axpy(alpha, std::span<const Complex>(b.data().data() + k * b.cols(), b.cols()), row);
    }
  }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < b.rows(); ++k) {
      const std::span<const Complex> brow(b.data().data() + k * b.cols(), b.cols());
      for (std::size_t j = 0; j < a.cols(); ++j) {
        std::span<Complex> dst(out.data().data() + (i * b.rows() + k) * out.cols() + j * b.cols(),
                               b.cols());
        kernels::scale(a(i, j), brow, dst);
      }
    }
  }
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  }
  return out;
}

namespace {

std::string format_complex(Complex z, int precision) {
  auto clean = [](double v) { return std::abs(v) < 1e-15 ? 0.0 : v; };
  std::ostringstream os;
  os.precision(precision);
  const double re = clean(z.real());
  const double im = clean(z.imag());
  if (im == 0.0) {
    os << re;
  } else if (re == 0.0) {
    os << im << "i";
  } else {
    os << re << (im < 0 ? "-" : "+") << std::abs(im) << "i";
  }
  return os.str();
}

}  // namespace

std::string format_matrix(const Matrix& m, int precision) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",\n [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      os << (j ? ", " : "") << format_complex(m(i, j), precision);
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

bool matrices_equal(const Matrix& a, const Matrix& b, double tol) {
  return max_deviation(a, b) <= tol;
}

double max_deviation(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::numeric_limits<double>::infinity();
  return kernels::max_abs_diff(a.data(), b.data());
}

// ---------------------------------------------------------------------------
// Tensor network contraction

namespace {

struct Tensor {
  std::vector<int> labels;  // labels[0] is the most significant index bit
  std::vector<Complex> data;
  int key = 0;              // smallest node id folded into this tensor
};

std::size_t bit_of(std::size_t index, std::size_t rank, std::size_t pos) {
  return (index >> (rank - 1 - pos)) & 1u;
}

void check_rank(std::size_t rank, int cap) {
  if (rank > static_cast<std::size_t>(cap)) {
    throw ResourceError("contraction needs " + std::to_string(rank) +
                        " open wires, above the cap of " + std::to_string(cap));
  }
}

// Sums out repeated labels (self-loops on a node).
Tensor trace_duplicates(Tensor t) {
  std::vector<int> unique;
  for (int l : t.labels) {
    if (std::count(t.labels.begin(), t.labels.end(), l) == 1) unique.push_back(l);
  }
  if (unique.size() == t.labels.size()) return t;
  const std::size_t rank = t.labels.size();
  Tensor out;
  out.key = t.key;
  out.data.assign(std::size_t{1} << unique.size(), Complex{});
  for (std::size_t idx = 0; idx < t.data.size(); ++idx) {
    std::map<int, std::size_t> seen;
    bool consistent = true;
    for (std::size_t p = 0; p < rank && consistent; ++p) {
      const std::size_t b = bit_of(idx, rank, p);
      auto [it, fresh] = seen.emplace(t.labels[p], b);
      if (!fresh && it->second != b) consistent = false;
    }
    if (!consistent) continue;
    std::size_t target = 0;
    for (int l : unique) target = (target << 1) | seen[l];
    out.data[target] += t.data[idx];
  }
  out.labels = std::move(unique);
  return out;
}

Tensor permuted(const Tensor& t, const std::vector<int>& order) {
  if (order == t.labels) return t;
  const std::size_t rank = order.size();
  std::vector<std::size_t> shift(rank);
  for (std::size_t p = 0; p < rank; ++p) {
    auto it = std::find(t.labels.begin(), t.labels.end(), order[p]);
    shift[p] = rank - 1 - static_cast<std::size_t>(it - t.labels.begin());
  }
  Tensor out;
  out.key = t.key;
  out.labels = order;
  out.data.resize(t.data.size());
  for (std::size_t idx = 0; idx < t.data.size(); ++idx) {
    std::size_t old = 0;
    for (std::size_t p = 0; p < rank; ++p) old |= bit_of(idx, rank, p) << shift[p];
    out.data[idx] = t.data[old];
  }
  return out;
}

Tensor contract_pair(const Tensor& a, const Tensor& b, int cap) {
  std::vector<int> shared, free_a, free_b;
  for (int l : a.labels) {
    if (std::find(b.labels.begin(), b.labels.end(), l) != b.labels.end()) {
      shared.push_back(l);
    } else {
      free_a.push_back(l);
    }
  }
  for (int l : b.labels) {
    if (std::find(shared.begin(), shared.end(), l) == shared.end()) free_b.push_back(l);
  }
  check_rank(free_a.size() + free_b.size(), cap);

  std::vector<int> order_a = free_a;
  order_a.insert(order_a.end(), shared.begin(), shared.end());
  std::vector<int> order_b = shared;
  order_b.insert(order_b.end(), free_b.begin(), free_b.end());
  const Tensor pa = permuted(a, order_a);
  const Tensor pb = permuted(b, order_b);

  const std::size_t na = std::size_t{1} << free_a.size();
  const std::size_t ns = std::size_t{1} << shared.size();
  const std::size_t nb = std::size_t{1} << free_b.size();
  Tensor out;
  out.key = std::min(a.key, b.key);
  out.labels = free_a;
  out.labels.insert(out.labels.end(), free_b.begin(), free_b.end());
  out.data.assign(na * nb, Complex{});
  const kernels::Table& k = kernels::active();
  for (std::size_t i = 0; i < na; ++i) {
    Complex* row = out.data.data() + i * nb;
    for (std::size_t s = 0; s < ns; ++s) {
      const Complex alpha = pa.data[i * ns + s];
      if (alpha == Complex{}) continue;
      k.axpy(nb, alpha, pb.data.data() + s * nb, row);
    }
  }
  return out;
}

Tensor node_tensor(const Node& n, const std::vector<int>& port_labels, int cap) {
  Tensor t;
  t.key = n.id;
  switch (n.kind) {
    case NodeKind::kZ: {
      const auto d = static_cast<std::size_t>(n.degree());
      check_rank(d, cap);
      t.labels = port_labels;
      if (d == 0) {
        t.data = {1.0 + n.phase};
      } else {
        t.data.assign(std::size_t{1} << d, Complex{});
        t.data.front() = 1.0;
        t.data.back() = n.phase;
      }
      break;
    }
    case NodeKind::kH:
    case NodeKind::kTriangle:
    case NodeKind::kTriangleInv: {
      // Index order (output, input).
      t.labels = {port_labels[1], port_labels[0]};
      if (n.kind == NodeKind::kH) {
        t.data = {1.0, 1.0, 1.0, -1.0};
      } else if (n.kind == NodeKind::kTriangle) {
        t.data = {1.0, 1.0, 0.0, 1.0};
      } else {
        t.data = {1.0, -1.0, 0.0, 1.0};
      }
      break;
    }
  }
  return trace_duplicates(std::move(t));
}

struct Network {
  std::vector<Tensor> tensors;
  std::vector<int> output_labels;
  std::vector<int> input_labels;
};

Network build_network(const Diagram& d, int cap) {
  Network net;
  int next_label = 0;
  std::map<Endpoint, int> label_of;
  for (int i = 0; i < d.num_inputs(); ++i) {
    label_of[Endpoint::input(i)] = next_label;
    net.input_labels.push_back(next_label++);
  }
  for (int j = 0; j < d.num_outputs(); ++j) {
    label_of[Endpoint::output(j)] = next_label;
    net.output_labels.push_back(next_label++);
  }
  int delta_key = d.max_node_id() + 1;
  for (const Edge& e : d.edges()) {
    if (e.a.is_boundary() && e.b.is_boundary()) {
      Tensor delta;
      delta.key = delta_key++;
      delta.labels = {label_of.at(e.a), label_of.at(e.b)};
      delta.data = {1.0, 0.0, 0.0, 1.0};
      net.tensors.push_back(std::move(delta));
    } else if (e.a.is_boundary()) {
      label_of[e.b] = label_of.at(e.a);
    } else if (e.b.is_boundary()) {
      label_of[e.a] = label_of.at(e.b);
    } else {
      label_of[e.a] = next_label;
      label_of[e.b] = next_label++;
    }
  }
  for (const auto& [id, n] : d.nodes()) {
    std::vector<int> ports;
    for (int p = 0; p < n.degree(); ++p) ports.push_back(label_of.at(Endpoint::port(id, p)));
    net.tensors.push_back(node_tensor(n, ports, cap));
  }
  return net;
}

Tensor contract_greedy(std::vector<Tensor> tensors, int cap) {
  std::vector<std::optional<Tensor>> alive(tensors.begin(), tensors.end());
  while (true) {
    std::map<int, std::vector<std::size_t>> holders;
    for (std::size_t i = 0; i < alive.size(); ++i) {
      if (!alive[i]) continue;
      for (int l : alive[i]->labels) holders[l].push_back(i);
    }
    std::optional<std::pair<std::size_t, std::size_t>> best;
    std::tuple<std::size_t, int, int> best_score{};
    for (const auto& [label, owners] : holders) {
      if (owners.size() != 2) continue;
      const Tensor& a = *alive[owners[0]];
      const Tensor& b = *alive[owners[1]];
      std::size_t shared = 0;
      for (int l : a.labels) {
        if (std::find(b.labels.begin(), b.labels.end(), l) != b.labels.end()) ++shared;
      }
      const std::size_t rank = a.labels.size() + b.labels.size() - 2 * shared;
      const int lo = std::min(a.key, b.key);
      const int hi = std::max(a.key, b.key);
      std::tuple<std::size_t, int, int> score{rank, lo, hi};
      if (!best || score < best_score) {
        best = std::make_pair(owners[0], owners[1]);
        best_score = score;
      }
    }
    if (!best) break;
    Tensor merged = contract_pair(*alive[best->first], *alive[best->second], cap);
    alive[best->first] = std::move(merged);
    alive[best->second].reset();
  }
  // Remaining tensors share no labels; join them smallest first.
  std::vector<Tensor> rest;
  for (auto& t : alive) {
    if (t) rest.push_back(std::move(*t));
  }
  std::sort(rest.begin(), rest.end(), [](const Tensor& a, const Tensor& b) {
    return std::make_pair(a.labels.size(), a.key) < std::make_pair(b.labels.size(), b.key);
  });
  Tensor acc;
  acc.data = {1.0};
  acc.key = std::numeric_limits<int>::max();
  for (const Tensor& t : rest) acc = contract_pair(acc, t, cap);
  return acc;
}

Tensor contract_sequential(std::vector<Tensor> tensors, int cap) {
  std::sort(tensors.begin(), tensors.end(),
            [](const Tensor& a, const Tensor& b) { return a.key < b.key; });
  Tensor acc;
  acc.data = {1.0};
  acc.key = std::numeric_limits<int>::max();
  for (const Tensor& t : tensors) acc = contract_pair(acc, t, cap);
  return acc;
}

}  // namespace

Matrix interpret(const Diagram& d, const ContractionOptions& options) {
  const int n = d.num_inputs();
  const int m = d.num_outputs();
  check_rank(static_cast<std::size_t>(n + m), options.wire_cap);
  Network net = build_network(d, options.wire_cap);
  Tensor result = options.order == ContractionOrder::kGreedy
                      ? contract_greedy(std::move(net.tensors), options.wire_cap)
                      : contract_sequential(std::move(net.tensors), options.wire_cap);

  std::vector<int> order = net.output_labels;
  order.insert(order.end(), net.input_labels.begin(), net.input_labels.end());
  if (result.labels.size() != order.size()) {
    throw DiagramError("contraction left " + std::to_string(result.labels.size()) +
                       " open wires, expected " + std::to_string(order.size()));
  }
  result = permuted(result, order);
  const double loop_factor = std::ldexp(1.0, d.loops());
  std::vector<Complex> data(result.data.size());
  kernels::scale(loop_factor, result.data, data);
  return Matrix(std::size_t{1} << m, std::size_t{1} << n, std::move(data));
}

std::vector<Complex> contract_state(const Diagram& d, const ContractionOptions& options) {
  if (d.num_inputs() != 0) throw ArityError("contract_state expects a diagram without inputs");
  return interpret(d, options).data();
}

}  // namespace zxel
