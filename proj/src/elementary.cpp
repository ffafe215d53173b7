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

#include "zxel/elementary.hpp"

#include <algorithm>

namespace zxel {

std::vector<int> check_subset(int m, const std::vector<int>& s, bool allow_empty) {
  if (m < 1) throw ArityError("elementary diagrams need at least one wire");
  std::vector<int> out = s;
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw ArityError("wire subset has repeated indices");
  }
  for (int i : out) {
    if (i < 0 || i >= m) {
      throw ArityError("wire index " + std::to_string(i) + " out of range for " +
                       std::to_string(m) + " wires");
    }
  }
  if (!allow_empty && out.empty()) throw ArityError("row addition needs a nonempty wire subset");
  return out;
}

namespace {

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

// Inline pink spider with `legs` legs; returns the outer end of each leg.
std::vector<Endpoint> add_x(DiagramBuilder& b, XPhase tau, int legs) {
  const NodeId z = b.add_z(tau == XPhase::kZero ? 1.0 : -1.0, legs, 0);
  std::vector<Endpoint> outer;
  for (int k = 0; k < legs; ++k) {
    const NodeId h = b.add_h();
    b.connect(Endpoint::port(h, 1), Endpoint::port(z, k));
    outer.push_back(Endpoint::port(h, 0));
  }
  b.add_scalar(0.5);
  return outer;
}

Diagram controlled_gadget(int m, Complex phase, const std::vector<int>& s, const std::vector<int>& z) {
  DiagramBuilder b(m, m);
  const int targets = static_cast<int>(s.size());
  const NodeId g = b.add_z(phase, m, targets);
  int control = 0;
  int target = 0;
  // Left-most slot first, so node ids follow the drawing order.
  for (int slot = 0; slot < m; ++slot) {
    const int wire = m - 1 - slot;
    Endpoint cur = Endpoint::input(slot);
    const bool anti = contains(z, wire);
    if (anti) {
      auto x = add_x(b, XPhase::kPi, 2);
      b.connect(cur, x[0]);
      cur = x[1];
    }
    const NodeId copy = b.add_z(1.0, 1, 2);
    b.connect(cur, Endpoint::port(copy, 0));
    cur = Endpoint::port(copy, 1);
    const NodeId t = b.add_triangle();
    b.connect(Endpoint::port(copy, 2), Endpoint::port(t, 0));
    b.connect(Endpoint::port(t, 1), Endpoint::port(g, control++));
    if (anti) {
      auto x = add_x(b, XPhase::kPi, 2);
      b.connect(cur, x[0]);
      cur = x[1];
    }
    if (contains(s, wire)) {
      auto x = add_x(b, XPhase::kZero, 3);
      b.connect(cur, x[0]);
      b.connect(x[2], Endpoint::port(g, m + target++));
      cur = x[1];
    }
    b.connect(cur, Endpoint::output(slot));
  }
  return b.build();
}

}  // namespace

Diagram row_addition_diagram(int m, Complex a, const std::vector<int>& s) {
  return controlled_gadget(m, a, check_subset(m, s, false), {});
}

Diagram row_multiplication_diagram(int m, Complex a) {
  check_subset(m, {}, true);
  return controlled_gadget(m, a - 1.0, {}, {});
}

Diagram row_addition_pi(int m, Complex a, const std::vector<int>& s, const std::vector<int>& z) {
  return controlled_gadget(m, a, check_subset(m, s, false), check_subset(m, z, true));
}

Diagram row_multiplication_pi(int m, Complex a, const std::vector<int>& z) {
  return controlled_gadget(m, a - 1.0, {}, check_subset(m, z, true));
}

Diagram base_state(int m) {
  std::vector<Diagram> parts(static_cast<std::size_t>(m), x_spider(0, 1, XPhase::kPi));
  return tensor_all(parts);
}

Diagram pauli_x_on(int m, int wire) {
  check_subset(m, {wire}, false);
  const int slot = m - 1 - wire;
  return tensor_all({identity(slot), x_spider(1, 1, XPhase::kPi), identity(m - 1 - slot)});
}

Diagram and_gate() {
  return compose_all({tensor(triangle(), triangle()), z_spider(2, 1, 1.0), triangle_inv()});
}

Diagram p_gate() { return row_multiplication_diagram(2, 0.0); }

Diagram w_gate() { return compose(x_spider(1, 2, XPhase::kZero), p_gate()); }

Diagram add_gate() { return compose(p_gate(), x_spider(2, 1, XPhase::kZero)); }

Diagram triangle_flipped() { return flip(triangle()); }

}  // namespace zxel
