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

#include <json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "zxel/diagram.hpp"
#include "zxel/equivalence.hpp"
#include "zxel/normalform.hpp"
#include "zxel/rewrite.hpp"
#include "zxel/rules.hpp"
#include "zxel/semantics.hpp"

namespace zxel {

using json = nlohmann::json;

inline constexpr const char* kDiagramFormat = "zxel/1";

// Parse failure. `where()` is a JSON pointer into the document for diagram
// files, "line N" for matrix files, or empty when the whole input is at fault.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : std::runtime_error(where.empty() ? what : where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

// Diagram files:
//   {"version": "zxel/1",
//    "nodes": [{"id": 0, "kind": "z", "phase": [1, 0], "inputs": 1, "outputs": 1},
//              {"id": 1, "kind": "h"}, {"id": 2, "kind": "triangle"},
//              {"id": 3, "kind": "triangle_inv"},
//              {"id": 4, "kind": "x", "phase": "pi", "inputs": 1, "outputs": 2}],
//    "edges": [[{"node": 0, "port": 1}, {"node": 1, "port": 0}]],
//    "inputs": [{"node": 0, "port": 0}],
//    "outputs": [{"node": 1, "port": 1}],
//    "loops": 0}
// inputs[i] names what input slot i is joined to; a bare wire appears as
// {"output": k} there and as {"input": i} in outputs[k]. Kind "x" is a macro
// expanded into the H-conjugated green spider when parsed.
Diagram diagram_from_json(const json& doc);
Diagram parse_diagram(const std::string& text);
Diagram read_diagram_file(const std::string& path);

// Node ids are written as stored; outputs never contain the "x" macro.
json diagram_to_json(const Diagram& d);
std::string serialize_diagram(const Diagram& d);

// Rows of whitespace-separated tokens such as 1, -0.5, 2i, -i, 1.5-2e-3i.
// Blank lines and text after '#' are ignored.
Complex parse_complex_token(const std::string& token);
Matrix parse_matrix(const std::string& text);
std::string format_complex_token(Complex z);

json complex_to_json(Complex z);
json matrix_to_json(const Matrix& m);
json nf_to_json(const NormalForm& nf);
NormalForm nf_from_json(const json& doc);
json spec_to_json(const ElementarySpec& spec);
json verdict_to_json(const EquivalenceVerdict& v);
json reports_to_json(const std::vector<SoundnessReport>& reports);
json trace_to_json(const std::vector<TraceStep>& trace);

// Deterministic text descriptions of the graph, for inspection only.
std::string export_dot(const Diagram& d);
std::string export_tikz_text(const Diagram& d);

std::string read_text_file(const std::string& path);

}  // namespace zxel
