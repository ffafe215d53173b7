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

#include "support/corpus.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"
#include "zxel/decompose.hpp"
#include "zxel/io.hpp"

namespace zxel {
namespace {

using oracle::C;

std::string canonical(const Diagram& d) { return serialize_diagram(normalize_ids(d)); }

TEST(DiagramJson, RoundTripCorpus) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto [n, m] = corpus::random_type(rng, 4);
    const Diagram d = corpus::random_diagram(rng, n, m, 8);
    const std::string text = serialize_diagram(d);
    const Diagram back = parse_diagram(text);
    EXPECT_EQ(serialize_diagram(back), text);
    EXPECT_EQ(canonical(parse_diagram(serialize_diagram(normalize_ids(d)))), canonical(d));
    EXPECT_EQ(back.fingerprint(), parse_diagram(serialize_diagram(back)).fingerprint());
  }
}

TEST(DiagramJson, BareWiresAndLoops) {
  const Diagram d = tensor_all({cap(), identity(1), scalar(2.0)});
  const json j = diagram_to_json(d);
  EXPECT_EQ(j["inputs"][0], (json{{"output", 2}}));
  const Diagram loops = [] {
    DiagramBuilder b(0, 0);
    b.add_loops(2);
    return b.build();
  }();
  EXPECT_EQ(diagram_to_json(loops)["loops"], 2);
  EXPECT_EQ(parse_diagram(serialize_diagram(loops)).loops(), 2);
  EXPECT_EQ(serialize_diagram(parse_diagram(serialize_diagram(d))), serialize_diagram(d));
}

TEST(DiagramJson, XMacroExpands) {
  const std::string text = R"({"version": "zxel/1",
    "nodes": [{"id": 7, "kind": "x", "phase": "0", "inputs": 1, "outputs": 2}],
    "edges": [],
    "inputs": [{"node": 7, "port": 0}],
    "outputs": [{"node": 7, "port": 1}, {"node": 7, "port": 2}]})";
  const Diagram d = parse_diagram(text);
  EXPECT_MAT_NEAR(interpret(d), testing_util::to_mat(interpret(x_spider(1, 2, XPhase::kZero))), 1e-12);
  EXPECT_MAT_NEAR(interpret(d), oracle::parity(1, 2, false), 1e-12);
}

TEST(DiagramJson, ErrorsCarryPointers) {
  struct Case {
    std::string text;
    std::string where;
  };
  const std::vector<Case> cases{
      {R"({"version": "zxel/2", "nodes": [], "edges": [], "inputs": [], "outputs": []})", "/version"},
      {R"({"version": "zxel/1", "edges": [], "inputs": [], "outputs": []})", ""},
      {R"({"version": "zxel/1", "nodes": [{"id": 0, "kind": "q"}], "edges": [], "inputs": [], "outputs": []})",
       "/nodes/0/kind"},
      {R"({"version": "zxel/1", "nodes": [{"id": 0, "kind": "z", "phase": 1, "inputs": 0, "outputs": 0}],
           "edges": [], "inputs": [], "outputs": []})",
       "/nodes/0/phase"},
      {R"({"version": "zxel/1", "nodes": [{"id": 0, "kind": "h"}, {"id": 0, "kind": "h"}],
           "edges": [], "inputs": [], "outputs": []})",
       "/nodes/1/id"},
      {R"({"version": "zxel/1", "nodes": [{"id": 0, "kind": "h"}], "edges": [],
           "inputs": [{"node": 0, "port": 0}], "outputs": [{"node": 3, "port": 1}]})",
       "/outputs/0/node"},
      {R"({"version": "zxel/1", "nodes": [{"id": 0, "kind": "h"}], "edges": [],
           "inputs": [{"node": 0, "port": 0}], "outputs": [{"node": 0, "port": 0}]})",
       "/outputs/0"},
      {R"({"version": "zxel/1", "nodes": [{"id": 0, "kind": "h"}], "edges": [],
           "inputs": [{"node": 0, "port": 0}], "outputs": []})",
       ""},
      {R"({"version": "zxel/1", "nodes": [], "edges": [[{"input": 0}]], "inputs": [{"output": 0}],
           "outputs": [{"input": 0}]})",
       "/edges/0"},
      {R"({"version": "zxel/1", "nodes": [], "edges": [], "inputs": [{"output": 4}], "outputs": [{"input": 0}]})",
       "/inputs/0"},
  };
  for (const auto& c : cases) {
    SCOPED_TRACE(c.text);
    try {
      parse_diagram(c.text);
      ADD_FAILURE() << "accepted";
    } catch (const ParseError& e) {
      EXPECT_EQ(e.where(), c.where) << e.what();
    }
  }
  try {
    parse_diagram("{\"version\": ");
    ADD_FAILURE() << "accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.where().rfind("byte ", 0), 0u);
  }
}

TEST(MatrixText, Tokens) {
  EXPECT_EQ(parse_complex_token("1"), C(1, 0));
  EXPECT_EQ(parse_complex_token("-0.5"), C(-0.5, 0));
  EXPECT_EQ(parse_complex_token("+2"), C(2, 0));
  EXPECT_EQ(parse_complex_token("i"), C(0, 1));
  EXPECT_EQ(parse_complex_token("-i"), C(0, -1));
  EXPECT_EQ(parse_complex_token("2i"), C(0, 2));
  EXPECT_EQ(parse_complex_token("1+i"), C(1, 1));
  EXPECT_EQ(parse_complex_token("1.5-2e-3i"), C(1.5, -2e-3));
  EXPECT_EQ(parse_complex_token("1e-3+2E+1i"), C(1e-3, 20));
  EXPECT_EQ(parse_complex_token("-1e5"), C(-1e5, 0));
  for (const char* bad : {"", "x", "1+", "1+2", "ii", "1i2", "--1", "1e", "+-i"}) {
    EXPECT_THROW(parse_complex_token(bad), ParseError) << bad;
  }
  std::mt19937_64 rng(2);
  for (int k = 0; k < 100; ++k) {
    const C z = oracle::random_complex(rng, 5.0);
    EXPECT_EQ(parse_complex_token(format_complex_token(z)), z);
  }
}

TEST(MatrixText, Rows) {
  const Matrix m = parse_matrix("# header\n1 2i\n\n-i 0.5+1i  # trailing\n");
  ASSERT_EQ(m.rows(), 2u);
  ASSERT_EQ(m.cols(), 2u);
  EXPECT_EQ(m(0, 1), C(0, 2));
  EXPECT_EQ(m(1, 0), C(0, -1));
  EXPECT_EQ(m(1, 1), C(0.5, 1));
  try {
    parse_matrix("1 2\n3\n");
    ADD_FAILURE();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.where(), "line 2");
  }
  EXPECT_THROW(parse_matrix("# nothing\n"), ParseError);
  EXPECT_THROW(parse_matrix("1 q\n"), ParseError);
}

TEST(Records, NormalFormJson) {
  const NormalForm nf{2, {C(1, 0), C(0, 0), C(0, -2), C(3, 1)}};
  const json j = nf_to_json(nf);
  EXPECT_EQ(j["m"], 2);
  EXPECT_EQ(j["coeffs"][2], (json{0.0, -2.0}));
  const NormalForm back = nf_from_json(j);
  EXPECT_EQ(back.m, nf.m);
  EXPECT_EQ(back.coeffs, nf.coeffs);
  EXPECT_THROW(nf_from_json(json{{"m", 1}, {"coeffs", json::array()}}), ParseError);
}

TEST(Records, SpecAndVerdict) {
  ElementarySpec s;
  s.m = 2;
  s.coefficient = C(0, 1);
  s.subset = {0, 1};
  const json j = spec_to_json(s);
  EXPECT_EQ(j["kind"], "row-addition");
  EXPECT_EQ(j["target_row"], 0);
  EXPECT_EQ(j["subset"], (json{0, 1}));
  EquivalenceVerdict v;
  v.equal = true;
  const json vj = verdict_to_json(v);
  EXPECT_EQ(vj["method"], "both");
  EXPECT_FALSE(vj.contains("nfs"));
}

TEST(Export, DotIsStableAndLabelsKinds) {
  const Diagram d = tensor_all({z_spider(1, 1, 2.0), hadamard(), triangle(), triangle_inv()});
  const std::string dot = export_dot(d);
  EXPECT_EQ(dot, export_dot(parse_diagram(serialize_diagram(d))));
  for (const char* label : {"label=\"Z 2\"", "label=\"H\"", "label=\"T\"", "label=\"T^-1\""}) {
    EXPECT_NE(dot.find(label), std::string::npos) << label;
  }
  const std::string cap_dot = export_dot(cap());
  EXPECT_NE(cap_dot.find("out0 -- out1"), std::string::npos);
  EXPECT_NE(export_tikz_text(cap()).find("\\draw (out0) to (out1);"), std::string::npos);
  EXPECT_NE(export_tikz_text(d).find("\\node[hbox]"), std::string::npos);
}

// Elementary decomposition.

Matrix to_matrix(const oracle::Mat& m) {
  Matrix out(m.size(), m[0].size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m[0].size(); ++c) out(r, c) = m[r][c];
  return out;
}

TEST(Decompose, SingleMultiplication) {
  const C a(0.5, -2);
  const auto dec = decompose_matrix(to_matrix({{1, 0}, {0, a}}));
  ASSERT_EQ(dec.specs.size(), 1u);
  EXPECT_EQ(dec.specs[0].kind, ElementarySpec::Kind::kRowMultiplication);
  EXPECT_EQ(dec.specs[0].coefficient, a);
  EXPECT_EQ(dec.permutation, (std::vector<int>{0}));
}

TEST(Decompose, SingleAddition) {
  const C a(2, 1);
  const auto dec = decompose_matrix(to_matrix({{1, a}, {0, 1}}));
  ASSERT_EQ(dec.specs.size(), 1u);
  EXPECT_EQ(dec.specs[0].kind, ElementarySpec::Kind::kRowAddition);
  EXPECT_EQ(dec.specs[0].subset, (std::vector<int>{0}));
  EXPECT_EQ(dec.specs[0].coefficient, a);
}

TEST(Decompose, RowSwitchIsRejected) {
  EXPECT_THROW(decompose_matrix(to_matrix({{0, 1}, {1, 0}})), NotRepresentableError);
  EXPECT_THROW(decompose_matrix(to_matrix(oracle::kron(oracle::eye(2), {{0, 1}, {1, 0}}))),
               NotRepresentableError);
  EXPECT_THROW(decompose_matrix(to_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), std::invalid_argument);
  EXPECT_THROW(decompose_matrix(to_matrix({{1, 0}})), std::invalid_argument);
  EXPECT_THROW(decompose_matrix(to_matrix({{2}})), std::invalid_argument);
}

TEST(Decompose, WireSwap) {
  const oracle::Mat swap{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
  const auto dec = decompose_matrix(to_matrix(swap));
  EXPECT_TRUE(dec.specs.empty());
  EXPECT_EQ(dec.permutation, (std::vector<int>{1, 0}));
  EXPECT_MAT_NEAR(interpret(dec.diagram), swap, 1e-12);
}

TEST(DecomposeProperty, RandomReachableMatrices) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 1 + trial % 3;
    const std::size_t n = std::size_t{1} << m;
    // I + u e_L^T with a random last column, then a random wire permutation.
    oracle::Mat base = oracle::eye(n);
    for (std::size_t r = 0; r < n; ++r) {
      if (std::bernoulli_distribution(0.7)(rng)) base[r][n - 1] += oracle::random_complex(rng);
    }
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const oracle::Mat p = testing_util::to_mat(interpret(permute_outputs(identity(m), perm)));
    const oracle::Mat target = oracle::matmul(p, base);
    const auto dec = decompose_matrix(to_matrix(target));
    EXPECT_MAT_NEAR(interpret(dec.diagram), target, 1e-7);
    for (std::size_t k = 1; k < dec.specs.size(); ++k) {
      if (dec.specs[k].kind == ElementarySpec::Kind::kRowAddition) {
        EXPECT_LT(dec.specs[k - 1].target_row(), dec.specs[k].target_row());
      }
    }
  }
}

}  // namespace
}  // namespace zxel
