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

#include "zxel/normalform.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <set>
#include <tuple>

#include "zxel/elementary.hpp"
#include "zxel/kernels.hpp"

namespace zxel {

namespace {

std::size_t dim_of(int m) { return std::size_t{1} << m; }

void check_nf(const NormalForm& nf) {
  if (nf.m < 0 || nf.coeffs.size() != dim_of(nf.m)) {
    throw std::invalid_argument("normal form on " + std::to_string(nf.m) + " wires needs " +
                                std::to_string(dim_of(std::max(nf.m, 0))) + " coefficients");
  }
}

}  // namespace

std::size_t ElementarySpec::target_row() const {
  std::size_t row = dim_of(m) - 1;
  if (kind == Kind::kRowAddition) {
    for (int i : subset) row -= std::size_t{1} << i;
  }
  return row;
}

Diagram elementary_diagram(const ElementarySpec& spec) {
  if (spec.kind == ElementarySpec::Kind::kRowAddition) {
    return row_addition_diagram(spec.m, spec.coefficient, spec.subset);
  }
  return row_multiplication_diagram(spec.m, spec.coefficient);
}

Matrix elementary_matrix(const ElementarySpec& spec) {
  const std::size_t dim = dim_of(spec.m);
  Matrix out = Matrix::identity(dim);
  if (spec.kind == ElementarySpec::Kind::kRowAddition) {
    check_subset(spec.m, spec.subset, false);
    out(spec.target_row(), dim - 1) += spec.coefficient;
  } else {
    out(dim - 1, dim - 1) = spec.coefficient;
  }
  return out;
}

NormalForm nf_from_vector(const std::vector<Complex>& v) {
  const std::size_t n = v.size();
  if (n == 0 || (n & (n - 1)) != 0) {
    throw std::invalid_argument("vector length " + std::to_string(n) + " is not a power of two");
  }
  NormalForm nf;
  nf.m = std::countr_zero(n);
  nf.coeffs = v;
  return nf;
}

std::vector<ElementarySpec> nf_elementary_specs(const NormalForm& nf) {
  check_nf(nf);
  if (nf.m == 0) throw ArityError("a scalar normal form has no elementary factors");
  const std::size_t dim = dim_of(nf.m);
  std::vector<ElementarySpec> specs;
  for (std::size_t j = 0; j + 1 < dim; ++j) {
    ElementarySpec s;
    s.kind = ElementarySpec::Kind::kRowAddition;
    s.m = nf.m;
    s.coefficient = nf.coeffs[j];
    const std::size_t mask = dim - 1 - j;
    for (int i = 0; i < nf.m; ++i) {
      if ((mask >> i) & 1u) s.subset.push_back(i);
    }
    specs.push_back(std::move(s));
  }
  ElementarySpec mult;
  mult.kind = ElementarySpec::Kind::kRowMultiplication;
  mult.m = nf.m;
  mult.coefficient = nf.coeffs[dim - 1];
  specs.push_back(mult);
  return specs;
}

Diagram nf_to_diagram(const NormalForm& nf) {
  check_nf(nf);
  if (nf.m == 0) return scalar_nf_diagram(nf.coeffs[0]);
  std::vector<Diagram> stages{base_state(nf.m)};
  for (const ElementarySpec& s : nf_elementary_specs(nf)) stages.push_back(elementary_diagram(s));
  return compose_all(stages);
}

NormalForm scalar_nf(Complex a) { return NormalForm{0, {a}}; }

Diagram scalar_nf_diagram(Complex a) {
  return compose(z_spider(0, 1, a), x_spider(1, 0, XPhase::kPi));
}

NormalForm nf_tensor(const NormalForm& a, const NormalForm& b) {
  check_nf(a);
  check_nf(b);
  NormalForm out;
  out.m = a.m + b.m;
  out.coeffs.assign(dim_of(out.m), Complex{});
  const std::size_t nb = b.coeffs.size();
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < nb; ++j) out.coeffs[i * nb + j] = a.coeffs[i] * b.coeffs[j];
  }
  return out;
}

NormalForm nf_permute(const NormalForm& nf, const std::vector<int>& perm) {
  check_nf(nf);
  const int m = nf.m;
  if (static_cast<int>(perm.size()) != m) throw ArityError("permutation has the wrong length");
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  for (int p : perm) {
    if (p < 0 || p >= m || seen[static_cast<std::size_t>(p)]) throw ArityError("not a permutation");
    seen[static_cast<std::size_t>(p)] = true;
  }
  NormalForm out{m, std::vector<Complex>(nf.coeffs.size())};
  for (std::size_t k = 0; k < nf.coeffs.size(); ++k) {
    std::size_t target = 0;
    for (int s = 0; s < m; ++s) {
      const int old_slot = perm[static_cast<std::size_t>(s)];
      target |= ((k >> (m - 1 - old_slot)) & 1u) << (m - 1 - s);
    }
    out.coeffs[target] = nf.coeffs[k];
  }
  return out;
}

NormalForm nf_self_plug(const NormalForm& nf, int p, int q) {
  check_nf(nf);
  const int m = nf.m;
  if (m < 2) throw ArityError("self-plugging needs at least two wires");
  if (p == q) throw ArityError("cannot plug a wire into itself");
  if (p > q) std::swap(p, q);
  if (p < 0 || q >= m) throw ArityError("plugged wire out of range");
  // Move wires p and q to the two right-most slots.
  std::vector<int> perm;
  const int slot_p = m - 1 - p;
  const int slot_q = m - 1 - q;
  for (int s = 0; s < m; ++s) {
    if (s != slot_p && s != slot_q) perm.push_back(s);
  }
  perm.push_back(slot_q);
  perm.push_back(slot_p);
  const NormalForm moved = nf_permute(nf, perm);
  NormalForm out{m - 2, std::vector<Complex>(dim_of(m - 2))};
  for (std::size_t k = 0; k < out.coeffs.size(); ++k) {
    out.coeffs[k] = moved.coeffs[4 * k] + moved.coeffs[4 * k + 3];
  }
  return out;
}

std::string to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kCopy:
      return "copy";
    case GeneratorKind::kCodot:
      return "codot";
    case GeneratorKind::kGreenState:
      return "green-state";
    case GeneratorKind::kIdentity:
      return "identity";
    case GeneratorKind::kCap:
      return "cap";
    case GeneratorKind::kCup:
      return "cup";
    case GeneratorKind::kHadamard:
      return "h";
    case GeneratorKind::kTriangle:
      return "triangle";
    case GeneratorKind::kTriangleInv:
      return "triangle-inv";
    case GeneratorKind::kSwap:
      return "swap";
  }
  return "?";
}

GeneratorKind generator_kind_from_string(const std::string& name) {
  for (int k = 0; k <= static_cast<int>(GeneratorKind::kSwap); ++k) {
    const auto kind = static_cast<GeneratorKind>(k);
    if (to_string(kind) == name) return kind;
  }
  throw std::invalid_argument("unknown generator '" + name + "'");
}

NormalForm generator_nf(GeneratorKind kind, Complex a) {
  switch (kind) {
    case GeneratorKind::kCopy:
    case GeneratorKind::kCodot:
      return NormalForm{3, {1, 0, 0, 0, 0, 0, 0, 1}};
    case GeneratorKind::kGreenState:
      return NormalForm{1, {1.0, a}};
    case GeneratorKind::kIdentity:
    case GeneratorKind::kCap:
    case GeneratorKind::kCup:
      return NormalForm{2, {1, 0, 0, 1}};
    case GeneratorKind::kHadamard:
      return NormalForm{2, {1, 1, 1, -1}};
    case GeneratorKind::kTriangle:
      return NormalForm{2, {1, 0, 1, 1}};
    case GeneratorKind::kTriangleInv:
      return NormalForm{2, {1, 0, -1, 1}};
    case GeneratorKind::kSwap: {
      NormalForm nf{4, std::vector<Complex>(16)};
      for (std::size_t k : {0u, 5u, 10u, 15u}) nf.coeffs[k] = 1.0;
      return nf;
    }
  }
  throw std::invalid_argument("unknown generator kind");
}

Diagram generator_diagram(GeneratorKind kind, Complex a) {
  switch (kind) {
    case GeneratorKind::kCopy:
      return bend_to_state(z_spider(1, 2, 1.0));
    case GeneratorKind::kCodot:
      return bend_to_state(z_spider(2, 1, 1.0));
    case GeneratorKind::kGreenState:
      return z_spider(0, 1, a);
    case GeneratorKind::kIdentity:
      return bend_to_state(identity());
    case GeneratorKind::kCap:
      return cap();
    case GeneratorKind::kCup:
      return bend_to_state(cup());
    case GeneratorKind::kHadamard:
      return bend_to_state(hadamard());
    case GeneratorKind::kTriangle:
      return bend_to_state(triangle());
    case GeneratorKind::kTriangleInv:
      return bend_to_state(triangle_inv());
    case GeneratorKind::kSwap:
      return bend_to_state(swap_wires());
  }
  throw std::invalid_argument("unknown generator kind");
}

NormalForm z_spider_nf(int degree, Complex a) {
  if (degree < 0) throw ArityError("negative spider degree");
  if (degree == 0) return nf_self_plug(z_spider_nf(2, a), 0, 1);
  NormalForm cur = generator_nf(GeneratorKind::kGreenState, a);
  const NormalForm copy = generator_nf(GeneratorKind::kCopy);
  for (int d = 1; d < degree; ++d) {
    // Plug the right-most leg into the copy's input (wire 2 of the copy).
    cur = nf_tensor(cur, copy);
    cur = nf_self_plug(cur, 2, 3);
  }
  return cur;
}

namespace {

NormalForm node_nf(const Node& n) {
  switch (n.kind) {
    case NodeKind::kZ:
      return z_spider_nf(n.degree(), n.phase);
    case NodeKind::kH:
      return generator_nf(GeneratorKind::kHadamard);
    case NodeKind::kTriangle:
      return generator_nf(GeneratorKind::kTriangle);
    case NodeKind::kTriangleInv:
      return generator_nf(GeneratorKind::kTriangleInv);
  }
  throw std::invalid_argument("unknown node kind");
}

// Node order: repeatedly take the node whose absorption leaves the fewest
// open wires, preferring nodes joined to what is already absorbed, then the
// smallest id.
std::vector<NodeId> layer_order(const Diagram& s) {
  std::vector<NodeId> order;
  std::set<NodeId> done;
  std::map<NodeId, int> links;  // edges from each pending node into `done`
  std::set<NodeId> pending;
  for (const auto& [id, n] : s.nodes()) pending.insert(id);
  while (!pending.empty()) {
    NodeId best = *pending.begin();
    std::tuple<int, int, NodeId> best_key{std::numeric_limits<int>::max(), 0, best};
    for (NodeId id : pending) {
      const int l = links.count(id) ? links.at(id) : 0;
      const int grow = s.node(id).degree() - 2 * (l + s.edges_between(id, id));
      const std::tuple<int, int, NodeId> key{grow, l > 0 ? 0 : 1, id};
      if (key < best_key) {
        best_key = key;
        best = id;
      }
    }
    pending.erase(best);
    done.insert(best);
    order.push_back(best);
    links.erase(best);
    const Node& n = s.node(best);
    for (int p = 0; p < n.degree(); ++p) {
      const Endpoint other = s.partner(Endpoint::port(best, p));
      if (other.is_port() && pending.count(other.node)) ++links[other.node];
    }
  }
  return order;
}

}  // namespace

NormalForm normalize(const Diagram& d, int wire_cap) {
  const Diagram s = bend_to_state(d);
  const int width = s.num_outputs();
  if (width > wire_cap) {
    throw ResourceError("normal form on " + std::to_string(width) + " wires exceeds the cap of " +
                        std::to_string(wire_cap));
  }
  NormalForm cur = scalar_nf(1.0);
  // Endpoint carried by each wire of `cur`, left to right.
  std::vector<Endpoint> wires;

  auto absorb = [&](const NormalForm& part, const std::vector<Endpoint>& labels) {
    if (cur.m + part.m > wire_cap) {
      throw ResourceError("normal form folding needs " + std::to_string(cur.m + part.m) +
                          " wires, above the cap of " + std::to_string(wire_cap));
    }
    cur = nf_tensor(cur, part);
    wires.insert(wires.end(), labels.begin(), labels.end());
    // Plug every pair of wires that are two ends of one edge.
    bool plugged = true;
    while (plugged) {
      plugged = false;
      for (std::size_t i = 0; i < wires.size() && !plugged; ++i) {
        if (!wires[i].is_port()) continue;
        const Endpoint other = s.partner(wires[i]);
        auto it = std::find(wires.begin(), wires.end(), other);
        if (it == wires.end()) continue;
        const auto j = static_cast<std::size_t>(it - wires.begin());
        const int m = cur.m;
        cur = nf_self_plug(cur, m - 1 - static_cast<int>(i), m - 1 - static_cast<int>(j));
        wires.erase(wires.begin() + static_cast<std::ptrdiff_t>(std::max(i, j)));
        wires.erase(wires.begin() + static_cast<std::ptrdiff_t>(std::min(i, j)));
        plugged = true;
      }
    }
  };

  for (NodeId id : layer_order(s)) {
    const Node& n = s.node(id);
    std::vector<Endpoint> labels;
    for (int p = 0; p < n.degree(); ++p) labels.push_back(Endpoint::port(id, p));
    absorb(node_nf(n), labels);
  }
  // Bare wires between two outputs are caps.
  for (const Edge& e : s.edges()) {
    if (e.a.is_boundary() && e.b.is_boundary()) {
      absorb(generator_nf(GeneratorKind::kCap), {e.a, e.b});
    }
  }
  const NormalForm loop = nf_self_plug(generator_nf(GeneratorKind::kCap), 0, 1);
  for (int l = 0; l < s.loops(); ++l) absorb(loop, {});

  // Reorder the remaining wires into output-slot order.
  std::vector<int> perm(static_cast<std::size_t>(cur.m), -1);
  for (std::size_t i = 0; i < wires.size(); ++i) {
    const Endpoint slot = wires[i].is_port() ? s.partner(wires[i]) : wires[i];
    perm[static_cast<std::size_t>(slot.index)] = static_cast<int>(i);
  }
  return nf_permute(cur, perm);
}

bool nf_equal(const NormalForm& a, const NormalForm& b, double tol) {
  if (a.m != b.m || a.coeffs.size() != b.coeffs.size()) return false;
  return kernels::max_abs_diff(a.coeffs, b.coeffs) <= tol;
}

}  // namespace zxel
