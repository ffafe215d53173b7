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

// zxel command-line front end.
//
// Exit codes: 0 success (equal / all rules sound), 1 negative answer (not
// equal, unsound rule, matrix not representable), 2 error (bad input, type
// mismatch, wire cap exceeded, internal defect).

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "zxel/decompose.hpp"
#include "zxel/equivalence.hpp"
#include "zxel/io.hpp"
#include "zxel/normalform.hpp"
#include "zxel/rewrite.hpp"
#include "zxel/rules.hpp"
#include "zxel/semantics.hpp"

namespace {

using namespace zxel;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kError = 2;

int wire_cap() {
  const char* env = std::getenv("ZXEL_WIRE_CAP");
  if (env == nullptr || *env == '\0') return kDefaultWireCap;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0 || v > 30) throw std::invalid_argument("ZXEL_WIRE_CAP must be an integer in [0, 30]");
  return static_cast<int>(v);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

struct Args {
  std::string file;
  std::string file2;
  std::string out;
  std::string format = "dot";
  std::string corrupt;
  std::string only;
  double tol = kDefaultTolerance;
  double elementary_tol = 1e-7;
  int precision = 6;
  int budget = 1000;
  int samples = 20;
  bool trace = false;
  bool as_json = false;
};

int cmd_interpret(const Args& a) {
  const Matrix m = interpret(read_diagram_file(a.file), {wire_cap(), ContractionOrder::kGreedy});
  if (a.as_json) {
    std::cout << matrix_to_json(m).dump() << "\n";
  } else {
    std::cout << format_matrix(m, a.precision) << "\n";
  }
  return kOk;
}

int cmd_check_eq(const Args& a) {
  const Diagram d1 = read_diagram_file(a.file);
  const Diagram d2 = read_diagram_file(a.file2);
  EquivalenceOptions opt;
  opt.tol = a.tol;
  opt.wire_cap = wire_cap();
  const EquivalenceVerdict v = check_equivalent(d1, d2, opt);
  std::cout << verdict_to_json(v).dump() << "\n";
  return v.equal ? kOk : kNegative;
}

int cmd_normalize(const Args& a) {
  const NormalForm nf = normalize(read_diagram_file(a.file), wire_cap());
  std::cout << nf_to_json(nf).dump() << "\n";
  if (!a.out.empty()) write_file(a.out, serialize_diagram(nf_to_diagram(nf)));
  return kOk;
}

int cmd_simplify(const Args& a) {
  const SimplifyResult r = simplify(read_diagram_file(a.file), a.budget);
  const std::string text = serialize_diagram(r.diagram);
  if (!a.out.empty()) write_file(a.out, text);
  if (a.trace) {
    json doc{{"diagram", diagram_to_json(r.diagram)},
             {"trace", trace_to_json(r.trace)},
             {"budget_exhausted", r.budget_exhausted}};
    std::cout << doc.dump(2) << "\n";
  } else if (a.out.empty()) {
    std::cout << text;
  }
  return kOk;
}

int cmd_rules(const Args& a) {
  std::vector<RewriteRule> rules = a.only.empty() ? full_catalog() : find_rules(a.only);
  if (rules.empty()) throw std::invalid_argument("no rule named " + a.only);
  if (!a.corrupt.empty()) {
    bool hit = false;
    for (RewriteRule& r : rules) {
      if (r.name == a.corrupt || r.id() == a.corrupt) {
        r = corrupted(r);
        hit = true;
      }
    }
    if (!hit) throw std::invalid_argument("no rule named " + a.corrupt + " to corrupt");
  }
  SoundnessOptions opt;
  opt.samples = a.samples;
  opt.tol = a.tol;
  const auto reports = check_catalog(rules, opt);
  if (a.as_json) {
    std::cout << reports_to_json(reports).dump(2) << "\n";
  } else {
    std::cout << format_reports(reports);
  }
  for (const auto& r : reports) {
    if (!r.passed()) return kNegative;
  }
  return kOk;
}

int cmd_elementary(const Args& a) {
  const Matrix m = parse_matrix(read_text_file(a.file));
  Decomposition dec;
  try {
    dec = decompose_matrix(m, a.elementary_tol);
  } catch (const NotRepresentableError& err) {
    std::cerr << "zxel: not representable: " << err.what() << "\n";
    return kNegative;
  }
  json specs = json::array();
  for (const auto& s : dec.specs) specs.push_back(spec_to_json(s));
  std::cout << json{{"m", dec.m}, {"specs", specs}, {"permutation", dec.permutation}}.dump(2) << "\n";
  if (!a.out.empty()) write_file(a.out, serialize_diagram(dec.diagram));
  return kOk;
}

int cmd_export(const Args& a) {
  const Diagram d = read_diagram_file(a.file);
  std::cout << (a.format == "dot" ? export_dot(d) : export_tikz_text(d));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zxel: diagrams of the ZX-calculus with complex spider parameters"};
  app.require_subcommand(1);
  Args a;

  auto* interp = app.add_subcommand("interpret", "Print the matrix of a diagram");
  interp->add_option("file", a.file, "Diagram file")->required();
  interp->add_option("--precision", a.precision, "Digits after the point")->check(CLI::Range(0, 17));
  interp->add_flag("--json", a.as_json, "Print JSON instead of text");

  auto* eq = app.add_subcommand("check-eq", "Decide whether two diagrams are equal");
  eq->add_option("first", a.file, "Diagram file")->required();
  eq->add_option("second", a.file2, "Diagram file")->required();
  eq->add_option("--tol", a.tol, "Entry tolerance")->check(CLI::NonNegativeNumber);

  auto* norm = app.add_subcommand("normalize", "Print the normal form of a diagram");
  norm->add_option("file", a.file, "Diagram file")->required();
  norm->add_option("--out", a.out, "Write the normal-form diagram here");

  auto* simp = app.add_subcommand("simplify", "Rewrite with the terminating rule subset");
  simp->add_option("file", a.file, "Diagram file")->required();
  simp->add_option("--budget", a.budget, "Maximum rewrite steps")->check(CLI::NonNegativeNumber);
  simp->add_flag("--trace", a.trace, "Print applied rules and sites");
  simp->add_option("--out", a.out, "Write the simplified diagram here");

  auto* rules = app.add_subcommand("rules", "Check soundness of the rule catalog");
  rules->add_option("--samples", a.samples, "Random draws per rule")->check(CLI::NonNegativeNumber);
  rules->add_option("--tol", a.tol, "Entry tolerance")->check(CLI::NonNegativeNumber);
  rules->add_option("--rule", a.only, "Check only this rule name or id");
  rules->add_flag("--json", a.as_json, "Print JSON instead of text");
  rules->add_option("--corrupt", a.corrupt, "Break this rule before checking")->group("");

  auto* elem = app.add_subcommand("elementary", "Decompose a matrix into elementary diagrams");
  elem->add_option("file", a.file, "Matrix text file")->required();
  elem->add_option("--out", a.out, "Write the composed diagram here");
  elem->add_option("--tol", a.elementary_tol, "Entry tolerance")->check(CLI::NonNegativeNumber);

  auto* exp = app.add_subcommand("export", "Describe a diagram as text");
  exp->add_option("file", a.file, "Diagram file")->required();
  exp->add_option("--format", a.format, "dot or tikz-text")->check(CLI::IsMember({"dot", "tikz-text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  try {
    if (*interp) return cmd_interpret(a);
    if (*eq) return cmd_check_eq(a);
    if (*norm) return cmd_normalize(a);
    if (*simp) return cmd_simplify(a);
    if (*rules) return cmd_rules(a);
    if (*elem) return cmd_elementary(a);
    if (*exp) return cmd_export(a);
  } catch (const std::exception& e) {
    std::cerr << "zxel: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
