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

#include "zxel/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <sstream>

namespace zxel {

namespace {

[[noreturn]] void fail(const json::json_pointer& at, const std::string& what) {
  throw ParseError(at.to_string(), what);
}

const json& field(const json& obj, const json::json_pointer& at, const char* key) {
  if (!obj.is_object()) fail(at, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(at, std::string("missing field \"") + key + "\"");
  return *it;
}

int int_field(const json& obj, const json::json_pointer& at, const char* key, int min) {
  const json& v = field(obj, at, key);
  if (!v.is_number_integer() || v.get<long long>() < min ||
      v.get<long long>() > std::numeric_limits<int>::max()) {
    fail(at / key, "expected an integer >= " + std::to_string(min));
  }
  return v.get<int>();
}

Complex complex_field(const json& v, const json::json_pointer& at) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    fail(at, "expected an [re, im] pair");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

struct Parser {
  DiagramBuilder b;
  std::map<int, NodeId> ids;                             // file id -> builder id
  std::map<int, int> x_degree;                           // file id of x macros -> degree
  std::map<std::pair<int, int>, Endpoint> x_ports;       // (file id, port) -> inner endpoint

  Parser(int inputs, int outputs) : b(inputs, outputs) {}

  void add_node(const json& n, const json::json_pointer& at) {
    const json& id_json = field(n, at, "id");
    if (!id_json.is_number_integer()) fail(at / "id", "expected an integer");
    const int id = id_json.get<int>();
    if (ids.count(id) || x_degree.count(id)) fail(at / "id", "duplicate node id " + std::to_string(id));
    const json& kind_json = field(n, at, "kind");
    if (!kind_json.is_string()) fail(at / "kind", "expected a string");
    const std::string kind = kind_json.get<std::string>();
    if (kind == "z") {
      const Complex phase = complex_field(field(n, at, "phase"), at / "phase");
      ids[id] = b.add_z(phase, int_field(n, at, "inputs", 0), int_field(n, at, "outputs", 0));
    } else if (kind == "h") {
      ids[id] = b.add_h();
    } else if (kind == "triangle") {
      ids[id] = b.add_triangle();
    } else if (kind == "triangle_inv") {
      ids[id] = b.add_triangle_inv();
    } else if (kind == "x") {
      const json& tau = field(n, at, "phase");
      if (!tau.is_string() || (tau != "0" && tau != "pi")) fail(at / "phase", "expected \"0\" or \"pi\"");
      const int in = int_field(n, at, "inputs", 0);
      const int out = int_field(n, at, "outputs", 0);
      splice_x(id, x_spider(in, out, tau == "pi" ? XPhase::kPi : XPhase::kZero));
      x_degree[id] = in + out;
    } else {
      fail(at / "kind", "unknown node kind \"" + kind + "\"");
    }
  }

  void splice_x(int file_id, const Diagram& x) {
    std::map<NodeId, NodeId> inner;
    for (const auto& [nid, node] : x.nodes()) {
      inner[nid] = b.add_node(node.kind, node.phase, node.inputs, node.outputs);
    }
    auto map = [&](const Endpoint& e) { return Endpoint::port(inner.at(e.node), e.index); };
    for (const Edge& e : x.edges()) {
      if (e.a.is_port() && e.b.is_port()) {
        b.connect(map(e.a), map(e.b));
      } else {
        const Endpoint& slot = e.a.is_port() ? e.b : e.a;
        const Endpoint& port = e.a.is_port() ? e.a : e.b;
        const int p = slot.type == Endpoint::Type::kInput ? slot.index : x.num_inputs() + slot.index;
        x_ports[{file_id, p}] = map(port);
      }
    }
  }

  Endpoint endpoint(const json& e, const json::json_pointer& at) const {
    if (!e.is_object()) fail(at, "expected an endpoint object");
    if (e.contains("input")) {
      return Endpoint::input(int_field(e, at, "input", 0));
    }
    if (e.contains("output")) {
      return Endpoint::output(int_field(e, at, "output", 0));
    }
    const json& nj = field(e, at, "node");
    if (!nj.is_number_integer()) fail(at / "node", "expected an integer");
    const int node = nj.get<int>();
    const int port = int_field(e, at, "port", 0);
    if (auto it = x_degree.find(node); it != x_degree.end()) {
      if (port >= it->second) fail(at / "port", "port out of range");
      return x_ports.at({node, port});
    }
    auto it = ids.find(node);
    if (it == ids.end()) fail(at / "node", "unknown node id " + std::to_string(node));
    if (port >= b.node(it->second).degree()) fail(at / "port", "port out of range");
    return Endpoint::port(it->second, port);
  }

  void check_slot(const Endpoint& e, const json::json_pointer& at) const {
    if (e.type == Endpoint::Type::kInput && e.index >= b_inputs) fail(at, "input slot out of range");
    if (e.type == Endpoint::Type::kOutput && e.index >= b_outputs) fail(at, "output slot out of range");
  }

  void join(const Endpoint& a, const Endpoint& c, const json::json_pointer& at) {
    check_slot(a, at);
    check_slot(c, at);
    if (auto existing = b.partner(a)) {
      if (*existing == c) return;  // a bare wire listed from both sides
      fail(at, to_string(a) + " is already attached");
    }
    try {
      b.connect(a, c);
    } catch (const DiagramError& err) {
      fail(at, err.what());
    }
  }

  int b_inputs = 0;
  int b_outputs = 0;
};

}  // namespace

Diagram diagram_from_json(const json& doc) {
  const json::json_pointer root;
  const json& version = field(doc, root, "version");
  if (version != kDiagramFormat) fail(root / "version", std::string("expected \"") + kDiagramFormat + "\"");
  const json& inputs = field(doc, root, "inputs");
  const json& outputs = field(doc, root, "outputs");
  const json& nodes = field(doc, root, "nodes");
  const json& edges = field(doc, root, "edges");
  for (const auto& [key, v] : {std::pair<const char*, const json*>{"inputs", &inputs},
                               {"outputs", &outputs}, {"nodes", &nodes}, {"edges", &edges}}) {
    if (!v->is_array()) fail(root / key, "expected an array");
  }
  Parser p(static_cast<int>(inputs.size()), static_cast<int>(outputs.size()));
  p.b_inputs = static_cast<int>(inputs.size());
  p.b_outputs = static_cast<int>(outputs.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) p.add_node(nodes[k], root / "nodes" / k);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto at = root / "edges" / k;
    if (!edges[k].is_array() || edges[k].size() != 2) fail(at, "expected a pair of endpoints");
    p.join(p.endpoint(edges[k][0], at / 0), p.endpoint(edges[k][1], at / 1), at);
  }
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    const auto at = root / "inputs" / k;
    p.join(Endpoint::input(static_cast<int>(k)), p.endpoint(inputs[k], at), at);
  }
  for (std::size_t k = 0; k < outputs.size(); ++k) {
    const auto at = root / "outputs" / k;
    p.join(Endpoint::output(static_cast<int>(k)), p.endpoint(outputs[k], at), at);
  }
  if (doc.contains("loops")) p.b.add_loops(int_field(doc, root, "loops", 0));
  try {
    return p.b.build();
  } catch (const DiagramError& err) {
    throw ParseError("", err.what());
  }
}

Diagram parse_diagram(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ParseError("byte " + std::to_string(err.byte), "malformed JSON");
  }
  return diagram_from_json(doc);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Diagram read_diagram_file(const std::string& path) { return parse_diagram(read_text_file(path)); }

namespace {

json endpoint_to_json(const Endpoint& e) {
  switch (e.type) {
    case Endpoint::Type::kInput:
      return {{"input", e.index}};
    case Endpoint::Type::kOutput:
      return {{"output", e.index}};
    case Endpoint::Type::kPort:
      break;
  }
  return {{"node", e.node}, {"port", e.index}};
}

}  // namespace

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json diagram_to_json(const Diagram& d) {
  json nodes = json::array();
  for (const auto& [id, n] : d.nodes()) {
    json j{{"id", id}};
    switch (n.kind) {
      case NodeKind::kZ:
        j["kind"] = "z";
        j["phase"] = complex_to_json(n.phase);
        j["inputs"] = n.inputs;
        j["outputs"] = n.outputs;
        break;
      case NodeKind::kH:
        j["kind"] = "h";
        break;
      case NodeKind::kTriangle:
        j["kind"] = "triangle";
        break;
      case NodeKind::kTriangleInv:
        j["kind"] = "triangle_inv";
        break;
    }
    nodes.push_back(std::move(j));
  }
  json edges = json::array();
  for (const Edge& e : d.edges()) {
    if (e.a.is_port() && e.b.is_port()) edges.push_back({endpoint_to_json(e.a), endpoint_to_json(e.b)});
  }
  json inputs = json::array();
  for (int i = 0; i < d.num_inputs(); ++i) inputs.push_back(endpoint_to_json(d.partner(Endpoint::input(i))));
  json outputs = json::array();
  for (int i = 0; i < d.num_outputs(); ++i) {
    outputs.push_back(endpoint_to_json(d.partner(Endpoint::output(i))));
  }
  return {{"version", kDiagramFormat}, {"nodes", nodes}, {"edges", edges},
          {"inputs", inputs},          {"outputs", outputs}, {"loops", d.loops()}};
}

std::string serialize_diagram(const Diagram& d) { return diagram_to_json(d).dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Matrices

namespace {

bool parse_double(std::string_view s, double& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

Complex parse_complex_token(const std::string& token) {
  auto bad = [&]() -> Complex { throw ParseError("", "bad complex number \"" + token + "\""); };
  if (token.empty()) return bad();
  if (token.back() != 'i') {
    double re = 0.0;
    if (!parse_double(token, re)) return bad();
    return {re, 0.0};
  }
  const std::string_view body(token.data(), token.size() - 1);
  // Split at the last sign that is not part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  double re = 0.0;
  std::string_view im_text = body;
  if (split != std::string_view::npos) {
    if (!parse_double(body.substr(0, split), re)) return bad();
    im_text = body.substr(split);
  }
  double im = 0.0;
  if (im_text.empty() || im_text == "+") {
    im = 1.0;
  } else if (im_text == "-") {
    im = -1.0;
  } else if (!parse_double(im_text, im)) {
    return bad();
  }
  return {re, im};
}

std::string format_complex_token(Complex z) {
  std::ostringstream ss;
  ss << std::setprecision(17) << z.real();
  if (z.imag() != 0.0) ss << (std::signbit(z.imag()) ? "" : "+") << z.imag() << "i";
  return ss.str();
}

Matrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<Complex>> rows;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::vector<Complex> row;
    std::string token;
    while (words >> token) {
      try {
        row.push_back(parse_complex_token(token));
      } catch (const ParseError& err) {
        throw ParseError("line " + std::to_string(line_no), err.what());
      }
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("line " + std::to_string(line_no), "row length differs from the first row");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("", "empty matrix");
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

// ---------------------------------------------------------------------------
// Records

json nf_to_json(const NormalForm& nf) {
  json coeffs = json::array();
  for (Complex c : nf.coeffs) coeffs.push_back(complex_to_json(c));
  return {{"m", nf.m}, {"coeffs", coeffs}};
}

NormalForm nf_from_json(const json& doc) {
  const json::json_pointer root;
  NormalForm nf;
  nf.m = int_field(doc, root, "m", 0);
  const json& coeffs = field(doc, root, "coeffs");
  if (!coeffs.is_array() || coeffs.size() != (std::size_t{1} << nf.m)) {
    fail(root / "coeffs", "expected 2^m [re, im] pairs");
  }
  nf.coeffs.clear();
  for (std::size_t k = 0; k < coeffs.size(); ++k) nf.coeffs.push_back(complex_field(coeffs[k], root / "coeffs" / k));
  return nf;
}

json spec_to_json(const ElementarySpec& spec) {
  json j{{"kind", spec.kind == ElementarySpec::Kind::kRowAddition ? "row-addition" : "row-multiplication"},
         {"m", spec.m},
         {"coefficient", complex_to_json(spec.coefficient)},
         {"target_row", spec.target_row()}};
  if (spec.kind == ElementarySpec::Kind::kRowAddition) j["subset"] = spec.subset;
  return j;
}

json verdict_to_json(const EquivalenceVerdict& v) {
  json j{{"equal", v.equal}, {"method", to_string(v.method)}, {"max_deviation", v.max_deviation}};
  if (v.nfs) j["nfs"] = json::array({nf_to_json(v.nfs->first), nf_to_json(v.nfs->second)});
  return j;
}

json reports_to_json(const std::vector<SoundnessReport>& reports) {
  json rules = json::array();
  std::size_t sound = 0;
  for (const auto& r : reports) {
    sound += r.passed();
    rules.push_back({{"rule", r.rule},
                     {"provenance", r.provenance},
                     {"draws", r.draws},
                     {"checks", r.checks},
                     {"max_deviation", r.max_deviation},
                     {"failures", r.failures.size()},
                     {"sound", r.passed()}});
  }
  return {{"rules", rules}, {"sound", sound}, {"total", reports.size()}};
}

json trace_to_json(const std::vector<TraceStep>& trace) {
  json out = json::array();
  for (const auto& s : trace) out.push_back({{"rule", s.rule}, {"nodes", s.nodes}, {"node_count", s.node_count}});
  return out;
}

// ---------------------------------------------------------------------------
// Export

namespace {

std::string node_label(const Node& n) {
  switch (n.kind) {
    case NodeKind::kZ:
      return "Z " + format_complex_token(n.phase);
    case NodeKind::kH:
      return "H";
    case NodeKind::kTriangle:
      return "T";
    case NodeKind::kTriangleInv:
      return "T^-1";
  }
  return "?";
}

std::string endpoint_name(const Endpoint& e) {
  switch (e.type) {
    case Endpoint::Type::kInput:
      return "in" + std::to_string(e.index);
    case Endpoint::Type::kOutput:
      return "out" + std::to_string(e.index);
    case Endpoint::Type::kPort:
      break;
  }
  return "n" + std::to_string(e.node);
}

}  // namespace

std::string export_dot(const Diagram& d) {
  std::ostringstream out;
  out << "graph zxel {\n  rankdir=LR;\n";
  for (int i = 0; i < d.num_inputs(); ++i) out << "  in" << i << " [shape=point, xlabel=\"in" << i << "\"];\n";
  for (int i = 0; i < d.num_outputs(); ++i) out << "  out" << i << " [shape=point, xlabel=\"out" << i << "\"];\n";
  for (const auto& [id, n] : d.nodes()) {
    out << "  n" << id << " [label=\"" << node_label(n) << "\", ";
    switch (n.kind) {
      case NodeKind::kZ:
        out << "shape=circle, style=filled, fillcolor=palegreen";
        break;
      case NodeKind::kH:
        out << "shape=square, style=filled, fillcolor=gold";
        break;
      case NodeKind::kTriangle:
        out << "shape=triangle";
        break;
      case NodeKind::kTriangleInv:
        out << "shape=invtriangle";
        break;
    }
    out << "];\n";
  }
  for (const Edge& e : d.edges()) {
    out << "  " << endpoint_name(e.a) << " -- " << endpoint_name(e.b);
    std::vector<std::string> attrs;
    if (e.a.is_port()) attrs.push_back("taillabel=\"" + std::to_string(e.a.index) + "\"");
    if (e.b.is_port()) attrs.push_back("headlabel=\"" + std::to_string(e.b.index) + "\"");
    if (!attrs.empty()) {
      out << " [";
      for (std::size_t k = 0; k < attrs.size(); ++k) out << (k ? ", " : "") << attrs[k];
      out << "]";
    }
    out << ";\n";
  }
  if (d.loops() > 0) out << "  // loops: " << d.loops() << "\n";
  out << "}\n";
  return out.str();
}

std::string export_tikz_text(const Diagram& d) {
  std::ostringstream out;
  out << "\\begin{tikzpicture}\n";
  for (int i = 0; i < d.num_inputs(); ++i) {
    out << "  \\node[boundary] (in" << i << ") at (" << i << ", 0) {};\n";
  }
  int row = 1;
  for (const auto& [id, n] : d.nodes()) {
    const char* style = n.kind == NodeKind::kZ ? "zspider"
                        : n.kind == NodeKind::kH ? "hbox"
                        : n.kind == NodeKind::kTriangle ? "triangle"
                                                        : "triangleinv";
    out << "  \\node[" << style << "] (n" << id << ") at (0, " << row++ << ") {";
    if (n.is_z()) out << "$" << format_complex_token(n.phase) << "$";
    out << "};\n";
  }
  for (int i = 0; i < d.num_outputs(); ++i) {
    out << "  \\node[boundary] (out" << i << ") at (" << i << ", " << row << ") {};\n";
  }
  for (const Edge& e : d.edges()) {
    out << "  \\draw (" << endpoint_name(e.a) << ") to (" << endpoint_name(e.b) << ");";
    if (e.a.is_port() || e.b.is_port()) {
      out << " % ports";
      if (e.a.is_port()) out << " " << e.a.index;
      if (e.b.is_port()) out << " " << e.b.index;
    }
    out << "\n";
  }
  if (d.loops() > 0) out << "  % loops: " << d.loops() << "\n";
  out << "\\end{tikzpicture}\n";
  return out.str();
}

}  // namespace zxel
