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

#include "zxel/diagram.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <set>
#include <sstream>

namespace zxel {

std::string to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::kZ:
      return "z";
    case NodeKind::kH:
      return "h";
    case NodeKind::kTriangle:
      return "t";
    case NodeKind::kTriangleInv:
      return "tinv";
  }
  return "?";
}

std::string to_string(const Endpoint& e) {
  std::ostringstream os;
  switch (e.type) {
    case Endpoint::Type::kPort:
      os << "n" << e.node << "." << e.index;
      break;
    case Endpoint::Type::kInput:
      os << "in" << e.index;
      break;
    case Endpoint::Type::kOutput:
      os << "out" << e.index;
      break;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Diagram

const Node& Diagram::node(NodeId id) const {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) {
    throw DiagramError("no node with id " + std::to_string(id));
  }
  return it->second;
}

std::vector<Edge> Diagram::edges() const {
  std::vector<Edge> out;
  out.reserve(partner_.size() / 2);
  for (const auto& [a, b] : partner_) {
    if (a < b) out.push_back({a, b});
  }
  return out;
}

Endpoint Diagram::partner(const Endpoint& e) const {
  auto it = partner_.find(e);
  if (it == partner_.end()) {
    throw DiagramError("endpoint " + to_string(e) + " is not attached");
  }
  return it->second;
}

int Diagram::edges_between(NodeId a, NodeId b) const {
  int count = 0;
  const Node& n = node(a);
  for (int p = 0; p < n.degree(); ++p) {
    Endpoint q = partner(Endpoint::port(a, p));
    if (!q.is_port() || q.node != b) continue;
    if (a == b && q.index < p) continue;
    ++count;
  }
  return count;
}

std::vector<NodeId> Diagram::neighbours(NodeId id) const {
  std::set<NodeId> out;
  const Node& n = node(id);
  for (int p = 0; p < n.degree(); ++p) {
    Endpoint q = partner(Endpoint::port(id, p));
    if (q.is_port() && q.node != id) out.insert(q.node);
  }
  return {out.begin(), out.end()};
}

NodeId Diagram::max_node_id() const {
  return nodes_.empty() ? -1 : nodes_.rbegin()->first;
}

namespace {

struct Fnv {
  std::uint64_t h = 1469598103934665603ull;
  void mix(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  }
  void mix_double(double d) { mix(std::bit_cast<std::uint64_t>(d)); }
  void mix_endpoint(const Endpoint& e) {
    mix(static_cast<std::uint64_t>(e.type));
    mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(e.node)));
    mix(static_cast<std::uint64_t>(e.index));
  }
};

}  // namespace

std::uint64_t Diagram::fingerprint() const {
  Fnv f;
  f.mix(static_cast<std::uint64_t>(inputs_));
  f.mix(static_cast<std::uint64_t>(outputs_));
  f.mix(static_cast<std::uint64_t>(loops_));
  for (const auto& [id, n] : nodes_) {
    f.mix(static_cast<std::uint64_t>(id));
    f.mix(static_cast<std::uint64_t>(n.kind));
    f.mix_double(n.phase.real());
    f.mix_double(n.phase.imag());
    f.mix(static_cast<std::uint64_t>(n.inputs));
    f.mix(static_cast<std::uint64_t>(n.outputs));
  }
  for (const auto& [a, b] : partner_) {
    f.mix_endpoint(a);
    f.mix_endpoint(b);
  }
  return f.h;
}

namespace {

void check_partners(int inputs, int outputs, const std::map<NodeId, Node>& nodes,
                    const std::map<Endpoint, Endpoint>& partner) {
  auto fail = [](const std::string& what) { throw DiagramError(what); };
  for (const auto& [a, b] : partner) {
    if (a == b) fail("endpoint " + to_string(a) + " is joined to itself");
    auto back = partner.find(b);
    if (back == partner.end() || back->second != a) {
      fail("edge " + to_string(a) + " - " + to_string(b) + " is not symmetric");
    }
    if (a.is_port()) {
      auto it = nodes.find(a.node);
      if (it == nodes.end()) fail("edge touches missing node " + std::to_string(a.node));
      if (a.index < 0 || a.index >= it->second.degree()) {
        fail("edge touches port " + to_string(a) + " beyond the node's degree");
      }
    } else if (a.type == Endpoint::Type::kInput) {
      if (a.index < 0 || a.index >= inputs) fail("no input slot " + std::to_string(a.index));
    } else if (a.index < 0 || a.index >= outputs) {
      fail("no output slot " + std::to_string(a.index));
    }
  }
  for (const auto& [id, n] : nodes) {
    if (n.inputs < 0 || n.outputs < 0) fail("node " + std::to_string(id) + " has negative arity");
    if (!n.is_z() && (n.inputs != 1 || n.outputs != 1)) {
      fail("node " + std::to_string(id) + " of kind " + to_string(n.kind) + " must have degree 2");
    }
    for (int p = 0; p < n.degree(); ++p) {
      if (!partner.count(Endpoint::port(id, p))) {
        fail("dangling port " + to_string(Endpoint::port(id, p)));
      }
    }
  }
  for (int i = 0; i < inputs; ++i) {
    if (!partner.count(Endpoint::input(i))) fail("dangling input slot " + std::to_string(i));
  }
  for (int i = 0; i < outputs; ++i) {
    if (!partner.count(Endpoint::output(i))) fail("dangling output slot " + std::to_string(i));
  }
}

}  // namespace

void Diagram::validate() const { check_partners(inputs_, outputs_, nodes_, partner_); }

// ---------------------------------------------------------------------------
// DiagramBuilder

DiagramBuilder::DiagramBuilder(int inputs, int outputs) : inputs_(inputs), outputs_(outputs) {
  if (inputs < 0 || outputs < 0) throw DiagramError("negative boundary size");
}

DiagramBuilder::DiagramBuilder(const Diagram& base)
    : inputs_(base.inputs_),
      outputs_(base.outputs_),
      loops_(base.loops_),
      next_id_(base.max_node_id() + 1),
      nodes_(base.nodes_),
      partner_(base.partner_) {}

NodeId DiagramBuilder::add_node(NodeKind kind, Complex phase, int inputs, int outputs) {
  if (inputs < 0 || outputs < 0) throw ArityError("negative node arity");
  if (kind != NodeKind::kZ && (inputs != 1 || outputs != 1)) {
    throw ArityError(to_string(kind) + " nodes have exactly one input and one output");
  }
  Node n;
  n.id = next_id_++;
  n.kind = kind;
  n.phase = kind == NodeKind::kZ ? phase : Complex{1.0, 0.0};
  n.inputs = inputs;
  n.outputs = outputs;
  nodes_.emplace(n.id, n);
  return n.id;
}

NodeId DiagramBuilder::add_z(Complex phase, int inputs, int outputs) {
  return add_node(NodeKind::kZ, phase, inputs, outputs);
}
NodeId DiagramBuilder::add_h() { return add_node(NodeKind::kH, 1.0, 1, 1); }
NodeId DiagramBuilder::add_triangle() { return add_node(NodeKind::kTriangle, 1.0, 1, 1); }
NodeId DiagramBuilder::add_triangle_inv() { return add_node(NodeKind::kTriangleInv, 1.0, 1, 1); }
NodeId DiagramBuilder::add_scalar(Complex value) { return add_z(value - 1.0, 0, 0); }

void DiagramBuilder::connect(const Endpoint& a, const Endpoint& b) {
  if (a == b) throw DiagramError("cannot join " + to_string(a) + " to itself");
  if (partner_.count(a)) throw DiagramError("endpoint " + to_string(a) + " already attached");
  if (partner_.count(b)) throw DiagramError("endpoint " + to_string(b) + " already attached");
  partner_[a] = b;
  partner_[b] = a;
}

Endpoint DiagramBuilder::detach(const Endpoint& e) {
  auto it = partner_.find(e);
  if (it == partner_.end()) throw DiagramError("endpoint " + to_string(e) + " is not attached");
  Endpoint other = it->second;
  partner_.erase(it);
  partner_.erase(other);
  return other;
}

std::optional<Endpoint> DiagramBuilder::partner(const Endpoint& e) const {
  auto it = partner_.find(e);
  if (it == partner_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::optional<Endpoint>> DiagramBuilder::remove_node(NodeId id) {
  const Node n = node(id);
  std::vector<std::optional<Endpoint>> far(static_cast<std::size_t>(n.degree()));
  for (int p = 0; p < n.degree(); ++p) {
    auto other = partner(Endpoint::port(id, p));
    if (!other) continue;
    detach(Endpoint::port(id, p));
    if (!(other->is_port() && other->node == id)) far[static_cast<std::size_t>(p)] = *other;
  }
  nodes_.erase(id);
  return far;
}

void DiagramBuilder::reshape_z(NodeId id, Complex phase, int inputs, int outputs) {
  auto it = nodes_.find(id);
  if (it == nodes_.end() || !it->second.is_z()) throw DiagramError("reshape of a non-Z node");
  for (int p = 0; p < it->second.degree(); ++p) {
    if (partner_.count(Endpoint::port(id, p))) {
      throw DiagramError("reshape of node " + std::to_string(id) + " with attached ports");
    }
  }
  it->second.phase = phase;
  it->second.inputs = inputs;
  it->second.outputs = outputs;
}

void DiagramBuilder::set_phase(NodeId id, Complex phase) {
  auto it = nodes_.find(id);
  if (it == nodes_.end() || !it->second.is_z()) throw DiagramError("set_phase on a non-Z node");
  it->second.phase = phase;
}

const Node& DiagramBuilder::node(NodeId id) const {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) throw DiagramError("no node with id " + std::to_string(id));
  return it->second;
}

Diagram DiagramBuilder::build() const {
  check_partners(inputs_, outputs_, nodes_, partner_);
  Diagram d;
  d.inputs_ = inputs_;
  d.outputs_ = outputs_;
  d.loops_ = loops_;
  d.nodes_ = nodes_;
  d.partner_ = partner_;
  return d;
}

// ---------------------------------------------------------------------------
// Generators

Diagram empty_diagram() { return DiagramBuilder(0, 0).build(); }

Diagram identity(int wires) {
  DiagramBuilder b(wires, wires);
  for (int i = 0; i < wires; ++i) b.connect(Endpoint::input(i), Endpoint::output(i));
  return b.build();
}

Diagram swap_wires() {
  DiagramBuilder b(2, 2);
  b.connect(Endpoint::input(0), Endpoint::output(1));
  b.connect(Endpoint::input(1), Endpoint::output(0));
  return b.build();
}

Diagram cap() {
  DiagramBuilder b(0, 2);
  b.connect(Endpoint::output(0), Endpoint::output(1));
  return b.build();
}

Diagram cup() {
  DiagramBuilder b(2, 0);
  b.connect(Endpoint::input(0), Endpoint::input(1));
  return b.build();
}

Diagram z_spider(int inputs, int outputs, Complex phase) {
  DiagramBuilder b(inputs, outputs);
  NodeId z = b.add_z(phase, inputs, outputs);
  for (int i = 0; i < inputs; ++i) b.connect(Endpoint::input(i), Endpoint::port(z, i));
  for (int j = 0; j < outputs; ++j) b.connect(Endpoint::port(z, inputs + j), Endpoint::output(j));
  return b.build();
}

namespace {

Diagram one_one(NodeKind kind) {
  DiagramBuilder b(1, 1);
  NodeId n = b.add_node(kind, 1.0, 1, 1);
  b.connect(Endpoint::input(0), Endpoint::port(n, 0));
  b.connect(Endpoint::port(n, 1), Endpoint::output(0));
  return b.build();
}

}  // namespace

Diagram hadamard() { return one_one(NodeKind::kH); }
Diagram triangle() { return one_one(NodeKind::kTriangle); }
Diagram triangle_inv() { return one_one(NodeKind::kTriangleInv); }

Diagram scalar(Complex value) {
  DiagramBuilder b(0, 0);
  b.add_scalar(value);
  return b.build();
}

Diagram x_spider(int inputs, int outputs, XPhase tau) {
  DiagramBuilder b(inputs, outputs);
  NodeId z = b.add_z(tau == XPhase::kZero ? 1.0 : -1.0, inputs, outputs);
  for (int i = 0; i < inputs; ++i) {
    NodeId h = b.add_h();
    b.connect(Endpoint::input(i), Endpoint::port(h, 0));
    b.connect(Endpoint::port(h, 1), Endpoint::port(z, i));
  }
  for (int j = 0; j < outputs; ++j) {
    NodeId h = b.add_h();
    b.connect(Endpoint::port(z, inputs + j), Endpoint::port(h, 0));
    b.connect(Endpoint::port(h, 1), Endpoint::output(j));
  }
  b.add_scalar(0.5);
  return b.build();
}

XPhase x_phase_from_angle(double tau) {
  constexpr double kPi = 3.14159265358979323846;
  if (std::abs(tau) < 1e-12) return XPhase::kZero;
  if (std::abs(tau - kPi) < 1e-12) return XPhase::kPi;
  throw DiagramError("X phase must be 0 or pi, got " + std::to_string(tau));
}

// ---------------------------------------------------------------------------
// Combinators

namespace {

// Copies the nodes of `src` into `b`, returning old id -> new id.
std::map<NodeId, NodeId> copy_nodes(DiagramBuilder& b, const Diagram& src) {
  std::map<NodeId, NodeId> ids;
  for (const auto& [id, n] : src.nodes()) {
    ids[id] = b.add_node(n.kind, n.phase, n.inputs, n.outputs);
  }
  return ids;
}

}  // namespace

Diagram compose(const Diagram& first, const Diagram& second) {
  if (first.num_outputs() != second.num_inputs()) {
    throw ArityError("compose: first has " + std::to_string(first.num_outputs()) +
                     " outputs but second has " + std::to_string(second.num_inputs()) + " inputs");
  }
  const int k = first.num_outputs();
  DiagramBuilder b(first.num_inputs(), second.num_outputs());
  b.add_loops(first.loops() + second.loops());
  const auto ids0 = copy_nodes(b, first);
  const auto ids1 = copy_nodes(b, second);
  const Diagram* sides[2] = {&first, &second};

  auto translate = [&](int side, const Endpoint& e) {
    if (e.is_port()) return Endpoint::port((side == 0 ? ids0 : ids1).at(e.node), e.index);
    return e;  // side 0 inputs and side 1 outputs keep their slots
  };
  auto is_interface = [](int side, const Endpoint& e) {
    return (side == 0 && e.type == Endpoint::Type::kOutput) ||
           (side == 1 && e.type == Endpoint::Type::kInput);
  };

  std::vector<bool> visited(static_cast<std::size_t>(k), false);
  // Follows the wire leaving `e` across any number of glued slots.
  auto walk = [&](int side, Endpoint e) {
    while (true) {
      Endpoint p = sides[side]->partner(e);
      if (!is_interface(side, p)) return std::make_pair(side, p);
      visited[static_cast<std::size_t>(p.index)] = true;
      if (side == 0) {
        side = 1;
        e = Endpoint::input(p.index);
      } else {
        side = 0;
        e = Endpoint::output(p.index);
      }
    }
  };

  std::set<std::pair<Endpoint, Endpoint>> done;
  for (int side = 0; side < 2; ++side) {
    for (const Edge& edge : sides[side]->edges()) {
      for (const Endpoint& start : {edge.a, edge.b}) {
        if (is_interface(side, start)) continue;
        auto [end_side, end] = walk(side, start);
        Endpoint x = translate(side, start);
        Endpoint y = translate(end_side, end);
        auto key = x < y ? std::make_pair(x, y) : std::make_pair(y, x);
        if (done.insert(key).second) b.connect(x, y);
      }
    }
  }

  // Whatever glued slots remain untouched form closed loops.
  for (int j = 0; j < k; ++j) {
    if (visited[static_cast<std::size_t>(j)]) continue;
    int side = 0;
    Endpoint e = Endpoint::output(j);
    visited[static_cast<std::size_t>(j)] = true;
    while (true) {
      Endpoint p = sides[side]->partner(e);
      visited[static_cast<std::size_t>(p.index)] = true;
      if (side == 0) {
        side = 1;
        e = Endpoint::input(p.index);
      } else {
        side = 0;
        e = Endpoint::output(p.index);
        if (p.index == j) break;
      }
    }
    b.add_loops(1);
  }
  return b.build();
}

Diagram tensor(const Diagram& left, const Diagram& right) {
  DiagramBuilder b(left.num_inputs() + right.num_inputs(), left.num_outputs() + right.num_outputs());
  b.add_loops(left.loops() + right.loops());
  const auto ids0 = copy_nodes(b, left);
  const auto ids1 = copy_nodes(b, right);
  auto translate = [&](int side, const Endpoint& e) {
    if (e.is_port()) return Endpoint::port((side == 0 ? ids0 : ids1).at(e.node), e.index);
    if (side == 0) return e;
    if (e.type == Endpoint::Type::kInput) return Endpoint::input(e.index + left.num_inputs());
    return Endpoint::output(e.index + left.num_outputs());
  };
  for (const Edge& e : left.edges()) b.connect(translate(0, e.a), translate(0, e.b));
  for (const Edge& e : right.edges()) b.connect(translate(1, e.a), translate(1, e.b));
  return b.build();
}

Diagram tensor_all(const std::vector<Diagram>& parts) {
  Diagram out = empty_diagram();
  for (const Diagram& p : parts) out = tensor(out, p);
  return out;
}

Diagram compose_all(const std::vector<Diagram>& stages) {
  if (stages.empty()) return empty_diagram();
  Diagram out = stages.front();
  for (std::size_t i = 1; i < stages.size(); ++i) out = compose(out, stages[i]);
  return out;
}

namespace {

template <typename Map>
Diagram remap_boundary(const Diagram& d, int inputs, int outputs, Map map) {
  DiagramBuilder b(inputs, outputs);
  b.add_loops(d.loops());
  const auto ids = copy_nodes(b, d);
  auto translate = [&](const Endpoint& e) {
    if (e.is_port()) return Endpoint::port(ids.at(e.node), e.index);
    return map(e);
  };
  for (const Edge& e : d.edges()) b.connect(translate(e.a), translate(e.b));
  return b.build();
}

}  // namespace

Diagram bend_to_state(const Diagram& d) {
  const int n = d.num_inputs();
  return remap_boundary(d, 0, n + d.num_outputs(), [n](const Endpoint& e) {
    if (e.type == Endpoint::Type::kInput) return Endpoint::output(n - 1 - e.index);
    return Endpoint::output(n + e.index);
  });
}

Diagram bend_to_map(const Diagram& state, int inputs) {
  if (state.num_inputs() != 0) throw ArityError("bend_to_map expects a state diagram");
  if (inputs < 0 || inputs > state.num_outputs()) {
    throw ArityError("bend_to_map: cannot bend " + std::to_string(inputs) + " of " +
                     std::to_string(state.num_outputs()) + " outputs");
  }
  const int n = inputs;
  return remap_boundary(state, n, state.num_outputs() - n, [n](const Endpoint& e) {
    if (e.index < n) return Endpoint::input(n - 1 - e.index);
    return Endpoint::output(e.index - n);
  });
}

Diagram flip(const Diagram& d) {
  return remap_boundary(d, d.num_outputs(), d.num_inputs(), [](const Endpoint& e) {
    if (e.type == Endpoint::Type::kInput) return Endpoint::output(e.index);
    return Endpoint::input(e.index);
  });
}

Diagram permute_outputs(const Diagram& d, const std::vector<int>& perm) {
  const int m = d.num_outputs();
  if (static_cast<int>(perm.size()) != m) throw ArityError("permutation has the wrong length");
  std::vector<int> inverse(static_cast<std::size_t>(m), -1);
  for (int p = 0; p < m; ++p) {
    int q = perm[static_cast<std::size_t>(p)];
    if (q < 0 || q >= m || inverse[static_cast<std::size_t>(q)] != -1) {
      throw ArityError("not a permutation");
    }
    inverse[static_cast<std::size_t>(q)] = p;
  }
  return remap_boundary(d, d.num_inputs(), m, [&](const Endpoint& e) {
    if (e.type == Endpoint::Type::kInput) return e;
    return Endpoint::output(inverse[static_cast<std::size_t>(e.index)]);
  });
}

Diagram normalize_ids(const Diagram& d) {
  return remap_boundary(d, d.num_inputs(), d.num_outputs(), [](const Endpoint& e) { return e; });
}

}  // namespace zxel
