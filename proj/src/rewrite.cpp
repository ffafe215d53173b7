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

#include "zxel/rewrite.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>

namespace zxel {

namespace {

constexpr double kPhaseTol = 1e-12;

bool near(Complex a, Complex b) { return std::abs(a - b) <= kPhaseTol; }

bool is_scalar_node(const Node& n) { return n.is_z() && n.degree() == 0; }

bool has_self_loop(const Diagram& d, NodeId id) { return d.edges_between(id, id) > 0; }

// The other port of a degree-2 node, given one of its ports.
Endpoint far_side(const Diagram& d, NodeId two, int entered) {
  return d.partner(Endpoint::port(two, 1 - entered));
}

struct Leg {
  Endpoint far;
  bool input;
};

// Detaches every port of `id`, returning the far ends that are not on `id`
// itself or on a node in `skip`.
std::vector<Leg> detach_all(DiagramBuilder& b, NodeId id, const std::set<NodeId>& skip = {}) {
  const Node n = b.node(id);
  std::vector<Leg> legs;
  for (int p = 0; p < n.degree(); ++p) {
    auto other = b.partner(Endpoint::port(id, p));
    if (!other) continue;
    b.detach(Endpoint::port(id, p));
    if (other->is_port() && (other->node == id || skip.count(other->node))) continue;
    legs.push_back({*other, p < n.inputs});
  }
  return legs;
}

void attach_legs(DiagramBuilder& b, NodeId id, Complex phase, const std::vector<Leg>& legs) {
  std::vector<Endpoint> ins, outs;
  for (const Leg& l : legs) (l.input ? ins : outs).push_back(l.far);
  b.reshape_z(id, phase, static_cast<int>(ins.size()), static_cast<int>(outs.size()));
  int port = 0;
  for (const Endpoint& e : ins) b.connect(Endpoint::port(id, port++), e);
  for (const Endpoint& e : outs) b.connect(Endpoint::port(id, port++), e);
}

// Multiplies the diagram by `factor`, folding it into the first scalar node.
void multiply_scalar(DiagramBuilder& b, Complex factor) {
  if (near(factor, 1.0)) return;
  for (const auto& [id, n] : b.nodes()) {
    if (is_scalar_node(n)) {
      b.set_phase(id, (1.0 + n.phase) * factor - 1.0);
      return;
    }
  }
  b.add_scalar(factor);
}

// H nodes forming a path u - H - v between two distinct green spiders.
std::map<std::pair<NodeId, NodeId>, std::vector<NodeId>> h_edges(const Diagram& d) {
  std::map<std::pair<NodeId, NodeId>, std::vector<NodeId>> out;
  for (const auto& [id, n] : d.nodes()) {
    if (n.kind != NodeKind::kH) continue;
    const Endpoint a = d.partner(Endpoint::port(id, 0));
    const Endpoint c = d.partner(Endpoint::port(id, 1));
    if (!a.is_port() || !c.is_port() || a.node == c.node) continue;
    if (!d.node(a.node).is_z() || !d.node(c.node).is_z()) continue;
    out[{std::min(a.node, c.node), std::max(a.node, c.node)}].push_back(id);
  }
  return out;
}

using Matcher = std::function<std::vector<MatchSite>(const Diagram&)>;

std::vector<MatchSite> match_s1(const Diagram& d) {
  std::vector<MatchSite> out;
  for (const auto& [id, n] : d.nodes()) {
    if (!n.is_z()) continue;
    if (has_self_loop(d, id)) out.push_back({"S1", {id}, {n.phase}, 0});
    for (NodeId nb : d.neighbours(id)) {
      if (nb <= id || !d.node(nb).is_z()) continue;
      out.push_back({"S1", {id, nb}, {n.phase, d.node(nb).phase}, 0});
    }
  }
  return out;
}

std::vector<MatchSite> match_s2(const Diagram& d) {
  std::vector<MatchSite> out;
  for (const auto& [id, n] : d.nodes()) {
    if (n.is_z() && n.degree() == 2 && near(n.phase, 1.0) && !has_self_loop(d, id)) {
      out.push_back({"S2", {id}, {}, 0});
    }
  }
  return out;
}

std::vector<MatchSite> match_hopf(const Diagram& d) {
  std::vector<MatchSite> out;
  for (const auto& [pair, hs] : h_edges(d)) {
    if (hs.size() < 2) continue;
    out.push_back({"Hopf", {pair.first, pair.second, hs[0], hs[1]}, {}, 0});
  }
  return out;
}

// Green state with phase `phase` -> H -> green spider of degree <= 2.
std::vector<MatchSite> match_state_copy(const Diagram& d, const std::string& rule, Complex phase) {
  std::vector<MatchSite> out;
  for (const auto& [id, n] : d.nodes()) {
    if (!n.is_z() || n.degree() != 1 || !near(n.phase, phase)) continue;
    const Endpoint h = d.partner(Endpoint::port(id, 0));
    if (!h.is_port() || d.node(h.node).kind != NodeKind::kH) continue;
    const Endpoint t = far_side(d, h.node, h.index);
    if (!t.is_port() || t.node == id) continue;
    const Node& target = d.node(t.node);
    if (!target.is_z() || target.degree() > 2 || has_self_loop(d, t.node)) continue;
    out.push_back({rule, {id, h.node, t.node}, {target.phase}, 0});
  }
  return out;
}

std::vector<MatchSite> match_h2(const Diagram& d) {
  std::vector<MatchSite> out;
  for (const auto& [id, n] : d.nodes()) {
    if (n.kind != NodeKind::kH) continue;
    if (has_self_loop(d, id)) {
      out.push_back({"H2", {id}, {}, 0});
      continue;
    }
    for (NodeId nb : d.neighbours(id)) {
      if (nb > id && d.node(nb).kind == NodeKind::kH) out.push_back({"H2", {id, nb}, {}, 0});
    }
  }
  return out;
}

std::vector<MatchSite> match_sca(const Diagram& d) {
  std::vector<MatchSite> out;
  std::optional<NodeId> first;
  for (const auto& [id, n] : d.nodes()) {
    if (!is_scalar_node(n)) continue;
    if (!first) {
      first = id;
    } else {
      out.push_back({"Sca", {*first, id}, {1.0 + d.node(*first).phase, 1.0 + n.phase}, 0});
    }
  }
  return out;
}

std::vector<MatchSite> match_inv(const Diagram& d) {
  std::vector<MatchSite> out;
  for (const auto& [id, n] : d.nodes()) {
    if (n.kind != NodeKind::kTriangle && n.kind != NodeKind::kTriangleInv) continue;
    const Endpoint next = d.partner(Endpoint::port(id, 1));
    if (!next.is_port() || next.index != 0 || next.node == id) continue;
    const NodeKind want = n.kind == NodeKind::kTriangle ? NodeKind::kTriangleInv : NodeKind::kTriangle;
    if (d.node(next.node).kind == want) out.push_back({"Inv", {id, next.node}, {}, 0});
  }
  return out;
}

const std::map<std::string, Matcher>& matchers() {
  static const std::map<std::string, Matcher> m{
      {"S1", match_s1},
      {"S2", match_s2},
      {"Hopf", match_hopf},
      {"B1", [](const Diagram& d) { return match_state_copy(d, "B1", 1.0); }},
      {"B3", [](const Diagram& d) { return match_state_copy(d, "B3", -1.0); }},
      {"H2", match_h2},
      {"Sca", match_sca},
      {"Inv", match_inv},
  };
  return m;
}

// ---------------------------------------------------------------------------
// Rewrites

void rewrite_s1(DiagramBuilder& b, const MatchSite& s) {
  const NodeId u = s.nodes[0];
  if (s.nodes.size() == 1) {
    const Complex phase = b.node(u).phase;
    attach_legs(b, u, phase, detach_all(b, u));
    return;
  }
  const NodeId v = s.nodes[1];
  const Complex phase = b.node(u).phase * b.node(v).phase;
  std::vector<Leg> legs = detach_all(b, u, {v});
  const std::vector<Leg> more = detach_all(b, v, {u});
  legs.insert(legs.end(), more.begin(), more.end());
  b.remove_node(v);
  attach_legs(b, u, phase, legs);
}

void rewrite_s2(DiagramBuilder& b, const MatchSite& s) {
  auto far = b.remove_node(s.nodes[0]);
  b.connect(*far[0], *far[1]);
}

void rewrite_hopf(DiagramBuilder& b, const MatchSite& s) {
  const NodeId u = s.nodes[0], v = s.nodes[1];
  b.remove_node(s.nodes[2]);
  b.remove_node(s.nodes[3]);
  for (NodeId w : {u, v}) {
    const Complex phase = b.node(w).phase;
    attach_legs(b, w, phase, detach_all(b, w));
  }
}

void rewrite_state_copy(DiagramBuilder& b, const MatchSite& s) {
  const NodeId state = s.nodes[0], h = s.nodes[1], t = s.nodes[2];
  const bool pi = s.rule == "B3";
  const Complex c = b.node(t).phase;
  const Endpoint h_side = *b.partner(Endpoint::port(state, 0));
  const Endpoint h_out = Endpoint::port(h, 1 - h_side.index);
  b.detach(h_out);
  std::vector<Leg> rest = detach_all(b, t);
  b.remove_node(t);
  if (rest.empty()) {
    // Degree 1: H of the state gives 2|0> or 2|1>, contracted with Z_c.
    b.remove_node(state);
    b.remove_node(h);
    multiply_scalar(b, pi ? 2.0 * c : Complex(2.0));
    return;
  }
  // Degree 2: the state passes through, picking up c when it carries |1>.
  b.connect(h_out, rest[0].far);
  if (pi) multiply_scalar(b, c);
}

void rewrite_h2(DiagramBuilder& b, const MatchSite& s) {
  const NodeId h1 = s.nodes[0];
  if (s.nodes.size() == 1) {
    // Trace of H.
    b.remove_node(h1);
    multiply_scalar(b, 0.0);
    return;
  }
  const NodeId h2 = s.nodes[1];
  auto f1 = b.remove_node(h1);
  auto f2 = b.remove_node(h2);
  std::vector<Endpoint> ends;
  for (const auto& e : f1) {
    if (e && !(e->is_port() && e->node == h2)) ends.push_back(*e);
  }
  for (const auto& e : f2) {
    if (e) ends.push_back(*e);
  }
  if (ends.empty()) {
    multiply_scalar(b, 4.0);  // trace of H^2 = 2I
    return;
  }
  b.connect(ends[0], ends[1]);
  multiply_scalar(b, 2.0);
}

void rewrite_sca(DiagramBuilder& b, const MatchSite& s) {
  const Complex v1 = 1.0 + b.node(s.nodes[0]).phase;
  const Complex v2 = 1.0 + b.node(s.nodes[1]).phase;
  b.remove_node(s.nodes[1]);
  b.set_phase(s.nodes[0], v1 * v2 - 1.0);
}

void rewrite_inv(DiagramBuilder& b, const MatchSite& s) {
  const NodeId first = s.nodes[0], second = s.nodes[1];
  const Endpoint in = *b.partner(Endpoint::port(first, 0));
  const Endpoint out = *b.partner(Endpoint::port(second, 1));
  b.remove_node(first);
  b.remove_node(second);
  if (in.is_port() && in.node == second) {
    b.add_loops(1);  // closed cycle: trace of the identity
    return;
  }
  b.connect(in, out);
}

// Re-checks a site against the diagram it claims to come from.
void check_site(const Diagram& d, const MatchSite& site) {
  if (site.fingerprint != d.fingerprint()) {
    throw StaleSiteError("match site for " + site.rule + " was computed on a different diagram");
  }
  auto it = matchers().find(site.rule);
  if (it == matchers().end()) throw UnsupportedRuleError("no matcher for rule " + site.rule);
  for (const MatchSite& s : it->second(d)) {
    if (s.nodes == site.nodes) return;
  }
  throw StaleSiteError("match site for " + site.rule + " does not match the diagram");
}

}  // namespace

const std::vector<std::string>& matchable_rules() {
  static const std::vector<std::string> names{"Sca", "S1", "S2", "H2", "Inv", "Hopf", "B1", "B3"};
  return names;
}

std::vector<MatchSite> find_matches(const Diagram& d, const std::string& rule) {
  auto it = matchers().find(rule);
  if (it == matchers().end()) throw UnsupportedRuleError("no matcher for rule " + rule);
  std::vector<MatchSite> sites = it->second(d);
  const std::uint64_t fp = d.fingerprint();
  for (MatchSite& s : sites) s.fingerprint = fp;
  std::sort(sites.begin(), sites.end(), [](const MatchSite& a, const MatchSite& b) {
    const NodeId ma = *std::min_element(a.nodes.begin(), a.nodes.end());
    const NodeId mb = *std::min_element(b.nodes.begin(), b.nodes.end());
    if (ma != mb) return ma < mb;
    return a.nodes < b.nodes;
  });
  return sites;
}

Diagram apply(const Diagram& d, const MatchSite& site) {
  check_site(d, site);
  DiagramBuilder b(d);
  if (site.rule == "S1") {
    rewrite_s1(b, site);
  } else if (site.rule == "S2") {
    rewrite_s2(b, site);
  } else if (site.rule == "Hopf") {
    rewrite_hopf(b, site);
  } else if (site.rule == "B1" || site.rule == "B3") {
    rewrite_state_copy(b, site);
  } else if (site.rule == "H2") {
    rewrite_h2(b, site);
  } else if (site.rule == "Sca") {
    rewrite_sca(b, site);
  } else if (site.rule == "Inv") {
    rewrite_inv(b, site);
  }
  return b.build();
}

SimplifyResult simplify(const Diagram& d, int budget) {
  if (budget < 0) throw std::invalid_argument("simplify budget must be non-negative");
  SimplifyResult result{d, {}, false};
  while (true) {
    std::optional<MatchSite> next;
    for (const std::string& rule : matchable_rules()) {
      auto sites = find_matches(result.diagram, rule);
      if (!sites.empty()) {
        next = sites.front();
        break;
      }
    }
    if (!next) return result;
    if (static_cast<int>(result.trace.size()) >= budget) {
      result.budget_exhausted = true;
      return result;
    }
    result.diagram = apply(result.diagram, *next);
    result.trace.push_back({next->rule, next->nodes, result.diagram.num_nodes()});
  }
}

}  // namespace zxel
