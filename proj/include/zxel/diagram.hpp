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

#include <complex>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zxel {

using Complex = std::complex<double>;
using NodeId = int;

class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArityError : public DiagramError {
 public:
  using DiagramError::DiagramError;
};

// Generator nodes. Identity, swap, cap and cup live in the wiring.
enum class NodeKind { kZ, kH, kTriangle, kTriangleInv };

std::string to_string(NodeKind kind);

// A node of kind kZ has `inputs + outputs` ports, any of which may be zero.
// Every other kind has port 0 as its input and port 1 as its output.
// The split of a Z spider's ports into inputs and outputs only matters for
// layout and export; its tensor is symmetric in all legs.
struct Node {
  NodeId id = 0;
  NodeKind kind = NodeKind::kZ;
  Complex phase{1.0, 0.0};
  int inputs = 1;
  int outputs = 1;

  int degree() const { return inputs + outputs; }
  bool is_z() const { return kind == NodeKind::kZ; }
};

struct Endpoint {
  enum class Type { kPort, kInput, kOutput };

  Type type = Type::kPort;
  NodeId node = -1;
  int index = 0;  // port number for kPort, boundary slot otherwise

  static Endpoint port(NodeId n, int p) { return {Type::kPort, n, p}; }
  static Endpoint input(int slot) { return {Type::kInput, -1, slot}; }
  static Endpoint output(int slot) { return {Type::kOutput, -1, slot}; }

  bool is_port() const { return type == Type::kPort; }
  bool is_boundary() const { return type != Type::kPort; }

  auto operator<=>(const Endpoint&) const = default;
};

std::string to_string(const Endpoint& e);

struct Edge {
  Endpoint a;
  Endpoint b;
};

// Open port graph of generator nodes with ordered boundaries. Immutable once
// built; all construction goes through DiagramBuilder or the combinators.
//
// Boundary order is left to right. With m outputs, output slot p carries the
// qubit of weight 2^(m-1-p), so slot m-1 is wire 0, the right-most wire.
class Diagram {
 public:
  Diagram() = default;

  int num_inputs() const { return inputs_; }
  int num_outputs() const { return outputs_; }
  int loops() const { return loops_; }
  const std::map<NodeId, Node>& nodes() const { return nodes_; }
  const Node& node(NodeId id) const;
  bool has_node(NodeId id) const { return nodes_.count(id) != 0; }
  std::size_t num_nodes() const { return nodes_.size(); }

  // One entry per edge, ordered by its smaller endpoint.
  std::vector<Edge> edges() const;
  std::size_t num_edges() const { return partner_.size() / 2; }

  // The endpoint joined to `e`. Throws if `e` is not part of this diagram.
  Endpoint partner(const Endpoint& e) const;

  // Number of edges joining nodes a and b (a self-loop counts once).
  int edges_between(NodeId a, NodeId b) const;
  std::vector<NodeId> neighbours(NodeId id) const;

  NodeId max_node_id() const;

  // Structural hash used to detect stale rewrite sites.
  std::uint64_t fingerprint() const;

  // Checks every port and boundary slot is attached to exactly one edge.
  void validate() const;

 private:
  friend class DiagramBuilder;

  int inputs_ = 0;
  int outputs_ = 0;
  int loops_ = 0;
  std::map<NodeId, Node> nodes_;
  std::map<Endpoint, Endpoint> partner_;
};

// Mutable staging area for diagrams. `build()` validates the result.
class DiagramBuilder {
 public:
  DiagramBuilder(int inputs, int outputs);
  explicit DiagramBuilder(const Diagram& base);

  NodeId add_z(Complex phase, int inputs, int outputs);
  NodeId add_h();
  NodeId add_triangle();
  NodeId add_triangle_inv();
  NodeId add_node(NodeKind kind, Complex phase, int inputs, int outputs);
  // Scalar node: a 0->0 Z spider interpreting to `value`.
  NodeId add_scalar(Complex value);

  void connect(const Endpoint& a, const Endpoint& b);
  // Removes the edge at `e` and returns the endpoint it was joined to.
  Endpoint detach(const Endpoint& e);
  std::optional<Endpoint> partner(const Endpoint& e) const;

  // Removes the node together with all edges touching its ports. Returns the
  // far endpoints of those edges, indexed by port (self-loops excluded).
  std::vector<std::optional<Endpoint>> remove_node(NodeId id);

  // Reshapes a Z spider. Its edges must already be detached.
  void reshape_z(NodeId id, Complex phase, int inputs, int outputs);
  void set_phase(NodeId id, Complex phase);

  void add_loops(int count) { loops_ += count; }
  const Node& node(NodeId id) const;
  bool has_node(NodeId id) const { return nodes_.count(id) != 0; }
  const std::map<NodeId, Node>& nodes() const { return nodes_; }

  Diagram build() const;

 private:
  int inputs_;
  int outputs_;
  int loops_ = 0;
  NodeId next_id_ = 0;
  std::map<NodeId, Node> nodes_;
  std::map<Endpoint, Endpoint> partner_;
};

enum class XPhase { kZero, kPi };

// Generators.
Diagram empty_diagram();
Diagram identity(int wires = 1);
Diagram swap_wires();
Diagram cap();
Diagram cup();
Diagram z_spider(int inputs, int outputs, Complex phase = 1.0);
Diagram hadamard();
Diagram triangle();
Diagram triangle_inv();
// Scalar diagram interpreting to `value`, as a single node.
Diagram scalar(Complex value);

// Pink spider, expanded into a Z spider conjugated by H on every leg plus a
// scalar node of value 1/2. Its interpretation is exactly the parity tensor
// (tau = 0) or the odd-parity tensor (tau = pi).
Diagram x_spider(int inputs, int outputs, XPhase tau);
XPhase x_phase_from_angle(double tau);

// Combinators.
Diagram compose(const Diagram& first, const Diagram& second);
Diagram tensor(const Diagram& left, const Diagram& right);
Diagram tensor_all(const std::vector<Diagram>& parts);
Diagram compose_all(const std::vector<Diagram>& stages);

// Bends every input upward with a cap. The bent inputs take the left-most
// outputs in reversed order, followed by the original outputs.
Diagram bend_to_state(const Diagram& d);
// Inverse of bend_to_state for a state with at least `inputs` outputs.
Diagram bend_to_map(const Diagram& state, int inputs);

// Upside-down mirror: inputs and outputs swap roles; interpretation is the
// transpose.
Diagram flip(const Diagram& d);

// Output slot p of the result is output slot perm[p] of `d`.
Diagram permute_outputs(const Diagram& d, const std::vector<int>& perm);

// Renumbers node ids to 0..n-1 in ascending order.
Diagram normalize_ids(const Diagram& d);

}  // namespace zxel
