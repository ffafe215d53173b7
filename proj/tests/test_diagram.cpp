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

#include "zxel/diagram.hpp"

namespace zxel {
namespace {

TEST(DiagramCore, GeneratorArities) {
  EXPECT_EQ(identity().num_inputs(), 1);
  EXPECT_EQ(identity(3).num_outputs(), 3);
  EXPECT_EQ(cap().num_inputs(), 0);
  EXPECT_EQ(cap().num_outputs(), 2);
  EXPECT_EQ(cup().num_inputs(), 2);
  EXPECT_EQ(cup().num_outputs(), 0);
  EXPECT_EQ(z_spider(2, 3, 0.5).num_nodes(), 1u);
  EXPECT_EQ(hadamard().num_nodes(), 1u);
  EXPECT_EQ(empty_diagram().num_nodes(), 0u);
  EXPECT_EQ(swap_wires().num_edges(), 2u);
}

TEST(DiagramCore, NodeKindDegrees) {
  const Diagram t = triangle();
  const Node& n = t.nodes().begin()->second;
  EXPECT_EQ(n.kind, NodeKind::kTriangle);
  EXPECT_EQ(n.degree(), 2);
  EXPECT_THROW(DiagramBuilder(0, 0).add_node(NodeKind::kH, 1.0, 2, 1), DiagramError);
}

TEST(DiagramCore, ComposeArityMismatchThrows) {
  EXPECT_THROW(compose(cap(), identity()), ArityError);
  EXPECT_NO_THROW(compose(cap(), cup()));
}

TEST(DiagramCore, ComposeIdentityIsIdentity) {
  const Diagram d = compose(identity(), identity());
  EXPECT_EQ(d.num_nodes(), 0u);
  EXPECT_EQ(d.num_edges(), 1u);
  EXPECT_EQ(d.partner(Endpoint::input(0)), Endpoint::output(0));
}

TEST(DiagramCore, CapCupClosesLoop) {
  const Diagram d = compose(cap(), cup());
  EXPECT_EQ(d.num_inputs(), 0);
  EXPECT_EQ(d.num_outputs(), 0);
  EXPECT_EQ(d.loops(), 1);
  EXPECT_EQ(d.num_edges(), 0u);
}

TEST(DiagramCore, SnakeStraightens) {
  // (id ⊗ cap) ; (cup ⊗ id) is a bare wire.
  const Diagram snake = compose(tensor(identity(), cap()), tensor(cup(), identity()));
  EXPECT_EQ(snake.num_nodes(), 0u);
  EXPECT_EQ(snake.loops(), 0);
  EXPECT_EQ(snake.partner(Endpoint::input(0)), Endpoint::output(0));
}

TEST(DiagramCore, TensorOrdersBoundaries) {
  const Diagram d = tensor(z_spider(0, 1, 2.0), hadamard());
  EXPECT_EQ(d.num_inputs(), 1);
  EXPECT_EQ(d.num_outputs(), 2);
  const Endpoint first = d.partner(Endpoint::output(0));
  EXPECT_TRUE(d.node(first.node).is_z());
  const Endpoint second = d.partner(Endpoint::output(1));
  EXPECT_EQ(d.node(second.node).kind, NodeKind::kH);
}

TEST(DiagramCore, TensorWithEmptyKeepsShape) {
  const Diagram d = tensor(empty_diagram(), z_spider(1, 2, 3.0));
  EXPECT_EQ(d.num_inputs(), 1);
  EXPECT_EQ(d.num_outputs(), 2);
  EXPECT_EQ(d.num_nodes(), 1u);
}

TEST(DiagramCore, BendReversesInputs) {
  DiagramBuilder b(2, 1);
  const NodeId z = b.add_z(1.0, 2, 1);
  const NodeId h = b.add_h();
  b.connect(Endpoint::input(0), Endpoint::port(z, 0));
  b.connect(Endpoint::input(1), Endpoint::port(h, 0));
  b.connect(Endpoint::port(h, 1), Endpoint::port(z, 1));
  b.connect(Endpoint::port(z, 2), Endpoint::output(0));
  const Diagram d = b.build();
  const Diagram s = bend_to_state(d);
  EXPECT_EQ(s.num_inputs(), 0);
  EXPECT_EQ(s.num_outputs(), 3);
  // Input 1 lands on slot 0, input 0 on slot 1, the output on slot 2.
  EXPECT_EQ(s.node(s.partner(Endpoint::output(0)).node).kind, NodeKind::kH);
  EXPECT_TRUE(s.node(s.partner(Endpoint::output(1)).node).is_z());
  EXPECT_EQ(s.partner(Endpoint::output(2)).index, 2);
  const Diagram back = bend_to_map(s, 2);
  EXPECT_EQ(back.num_inputs(), 2);
  EXPECT_EQ(back.num_outputs(), 1);
  EXPECT_EQ(back.node(back.partner(Endpoint::input(1)).node).kind, NodeKind::kH);
}

TEST(DiagramCore, BendStateIsUnchanged) {
  const Diagram s = z_spider(0, 2, 0.25);
  const Diagram t = bend_to_state(s);
  EXPECT_EQ(t.num_outputs(), 2);
  EXPECT_EQ(t.fingerprint(), normalize_ids(s).fingerprint());
}

TEST(DiagramCore, BendToMapValidatesArity) {
  EXPECT_THROW(bend_to_map(identity(), 0), ArityError);
  EXPECT_THROW(bend_to_map(cap(), 3), ArityError);
}

TEST(DiagramCore, FlipSwapsBoundaries) {
  const Diagram f = flip(z_spider(1, 3, 1.0));
  EXPECT_EQ(f.num_inputs(), 3);
  EXPECT_EQ(f.num_outputs(), 1);
  EXPECT_EQ(flip(cap()).num_inputs(), 2);
}

TEST(DiagramCore, PermuteOutputs) {
  const Diagram d = tensor(z_spider(0, 1, 2.0), hadamard());
  const Diagram p = permute_outputs(d, {1, 0});
  EXPECT_EQ(p.node(p.partner(Endpoint::output(0)).node).kind, NodeKind::kH);
  EXPECT_THROW(permute_outputs(d, {0, 0}), ArityError);
  EXPECT_THROW(permute_outputs(d, {0}), ArityError);
}

TEST(DiagramCore, XSpiderMacroShape) {
  const Diagram x = x_spider(2, 1, XPhase::kPi);
  int h = 0, z = 0;
  for (const auto& [id, n] : x.nodes()) {
    if (n.kind == NodeKind::kH) ++h;
    if (n.is_z()) ++z;
  }
  EXPECT_EQ(h, 3);
  EXPECT_EQ(z, 2);  // the spider and its scalar node
  EXPECT_EQ(x_phase_from_angle(0.0), XPhase::kZero);
  EXPECT_EQ(x_phase_from_angle(3.14159265358979323846), XPhase::kPi);
  EXPECT_THROW(x_phase_from_angle(1.0), DiagramError);
}

TEST(DiagramCore, SelfLoopAllowed) {
  DiagramBuilder b(0, 0);
  const NodeId z = b.add_z(1.0, 1, 1);
  b.connect(Endpoint::port(z, 0), Endpoint::port(z, 1));
  const Diagram d = b.build();
  EXPECT_EQ(d.edges_between(z, z), 1);
}

TEST(DiagramCore, DanglingPortRejected) {
  DiagramBuilder b(0, 1);
  const NodeId z = b.add_z(1.0, 0, 2);
  b.connect(Endpoint::port(z, 0), Endpoint::output(0));
  EXPECT_THROW(b.build(), DiagramError);
}

TEST(DiagramCore, DoubleAttachRejected) {
  DiagramBuilder b(1, 1);
  b.connect(Endpoint::input(0), Endpoint::output(0));
  EXPECT_THROW(b.connect(Endpoint::input(0), Endpoint::output(0)), DiagramError);
}

TEST(DiagramCore, NormalizeIdsIsDense) {
  DiagramBuilder b(1, 1);
  const NodeId a = b.add_z(1.0, 1, 1);
  const NodeId c = b.add_h();
  b.remove_node(a);
  b.connect(Endpoint::input(0), Endpoint::port(c, 0));
  b.connect(Endpoint::port(c, 1), Endpoint::output(0));
  const Diagram d = normalize_ids(b.build());
  EXPECT_TRUE(d.has_node(0));
  EXPECT_FALSE(d.has_node(1));
}

TEST(DiagramCore, FingerprintIgnoresNothingStructural) {
  EXPECT_NE(z_spider(1, 1, 2.0).fingerprint(), z_spider(1, 1, 3.0).fingerprint());
  EXPECT_NE(triangle().fingerprint(), triangle_inv().fingerprint());
  EXPECT_EQ(compose(hadamard(), hadamard()).fingerprint(),
            compose(hadamard(), hadamard()).fingerprint());
}

}  // namespace
}  // namespace zxel
