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

#include "zxel/rules.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

#include "zxel/elementary.hpp"

namespace zxel {

namespace {

using Params = std::vector<Complex>;
using Pair = std::pair<Diagram, Diagram>;
using Builder = std::function<Pair(const Params&)>;

const Complex kI{0.0, 1.0};

Diagram Z(int n, int m, Complex a = 1.0) { return z_spider(n, m, a); }
Diagram X(int n, int m, XPhase tau = XPhase::kZero) { return x_spider(n, m, tau); }
Diagram Xpi(int n, int m) { return x_spider(n, m, XPhase::kPi); }
Diagram H() { return hadamard(); }
Diagram T() { return triangle(); }
Diagram Ti() { return triangle_inv(); }
Diagram Tf() { return triangle_flipped(); }
Diagram id(int k = 1) { return identity(k); }
Diagram seq(const std::vector<Diagram>& parts) { return compose_all(parts); }
Diagram par(const std::vector<Diagram>& parts) { return tensor_all(parts); }
Diagram copy() { return Z(1, 2); }

// Scalar diagram in the style of the scalar normal form: pink pi effect on the
// green state (1, a).
Diagram sc(Complex a) { return compose(Z(0, 1, a), Xpi(1, 0)); }

Diagram hs(int k) {
  std::vector<Diagram> parts(static_cast<std::size_t>(k), H());
  return par(parts);
}

std::vector<int> bits(int mask, int m) {
  std::vector<int> out;
  for (int i = 0; i < m; ++i) {
    if ((mask >> i) & 1) out.push_back(i);
  }
  return out;
}

std::string set_text(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k]);
  return out + "}";
}

// CNOT with control on the left slot and target on the right slot.
Diagram cnot() { return seq({par({copy(), id()}), par({id(), X(2, 1)})}); }

class Catalog {
 public:
  Catalog(std::vector<RewriteRule>& out, bool derived) : out_(out), derived_(derived) {}

  void add(std::string name, std::string variant, std::string provenance, int arity, Builder build) {
    RewriteRule r;
    r.name = std::move(name);
    r.variant = std::move(variant);
    r.provenance = std::move(provenance);
    r.derived = derived_;
    r.arity = arity;
    r.build = std::move(build);
    out_.push_back(std::move(r));
  }

 private:
  std::vector<RewriteRule>& out_;
  bool derived_;
};

std::vector<RewriteRule> make_base_rules() {
  std::vector<RewriteRule> rules;
  Catalog c(rules, false);
  const std::string fig = "base rule";

  c.add("S1", "chain", fig, 2, [](const Params& p) -> Pair {
    return {seq({Z(1, 1, p[0]), Z(1, 1, p[1])}), Z(1, 1, p[0] * p[1])};
  });
  c.add("S1", "branch", fig, 2, [](const Params& p) -> Pair {
    return {seq({par({Z(1, 2, p[0]), id()}), par({id(), Z(2, 1, p[1])})}), Z(2, 2, p[0] * p[1])};
  });
  c.add("S1", "merge", fig, 2, [](const Params& p) -> Pair {
    return {seq({par({Z(0, 1, p[0]), Z(0, 1, p[1])}), Z(2, 1)}), Z(0, 1, p[0] * p[1])};
  });
  c.add("S2", "", fig, 0, [](const Params&) -> Pair { return {Z(1, 1), id()}; });
  c.add("S3", "", fig, 0, [](const Params&) -> Pair { return {Z(0, 2), cap()}; });
  c.add("Ept", "", fig, 1, [](const Params& p) -> Pair {
    return {seq({Z(0, 1, p[0]), X(1, 0)}), empty_diagram()};
  });
  c.add("B1", "", fig, 0, [](const Params&) -> Pair {
    return {seq({X(0, 1), copy()}), par({X(0, 1), X(0, 1)})};
  });
  c.add("B2", "", fig, 0, [](const Params&) -> Pair {
    return {seq({X(2, 1), copy()}),
            seq({par({copy(), copy()}), par({id(), swap_wires(), id()}), par({X(2, 1), X(2, 1)})})};
  });
  c.add("B3", "", fig, 0, [](const Params&) -> Pair {
    return {seq({Xpi(1, 1), copy()}), seq({copy(), par({Xpi(1, 1), Xpi(1, 1)})})};
  });
  c.add("Brk", "", fig, 0, [](const Params&) -> Pair { return {seq({copy(), and_gate()}), id()}; });
  c.add("Bas0", "", fig, 0, [](const Params&) -> Pair { return {seq({X(0, 1), T()}), X(0, 1)}; });
  c.add("Bas1", "", fig, 0, [](const Params&) -> Pair { return {seq({Xpi(0, 1), T()}), Z(0, 1)}; });
  c.add("Suc", "", fig, 1, [](const Params& p) -> Pair {
    return {seq({Z(0, 1, p[0]), Tf()}), Z(0, 1, p[0] + 1.0)};
  });
  c.add("Inv", "", fig, 0, [](const Params&) -> Pair { return {seq({T(), Ti()}), id()}; });
  c.add("Inv", "reversed", fig, 0, [](const Params&) -> Pair { return {seq({Ti(), T()}), id()}; });
  c.add("Zero", "", fig, 0, [](const Params&) -> Pair {
    return {Z(1, 1, 0.0), seq({X(1, 0), X(0, 1)})};
  });
  c.add("EU", "", fig, 0, [](const Params&) -> Pair { return {H(), seq({T(), Z(1, 1, -2.0), Tf()})}; });
  c.add("Sym", "", fig, 0, [](const Params&) -> Pair { return {seq({w_gate(), swap_wires()}), w_gate()}; });
  c.add("Aso", "", fig, 0, [](const Params&) -> Pair {
    return {seq({w_gate(), par({w_gate(), id()})}), seq({w_gate(), par({id(), w_gate()})})};
  });
  c.add("Pcy", "", fig, 1, [](const Params& p) -> Pair {
    return {seq({Z(1, 1, p[0]), w_gate()}), seq({w_gate(), par({Z(1, 1, p[0]), Z(1, 1, p[0])})})};
  });
  return rules;
}

// Condition for I + a X_S |c><c| and I + b X_T |d><d| to commute: neither
// cross term survives.
bool additions_commute(int s, int c, int t, int d) { return (c ^ s) != d && (d ^ t) != c; }

std::vector<RewriteRule> make_derived() {
  std::vector<RewriteRule> rules;
  Catalog c(rules, true);

  c.add("Sca", "", "Lemma Sca (scalartimes)", 2, [](const Params& p) -> Pair {
    return {par({sc(p[0]), sc(p[1])}), sc(p[0] * p[1])};
  });
  c.add("Zos", "", "Corollary Zos", 1, [](const Params& p) -> Pair {
    return {par({sc(0.0), Z(1, 1, p[0])}), par({sc(0.0), T()})};
  });
  c.add("Sml", "", "Lemma Sml", 1, [](const Params& p) -> Pair {
    return {seq({Xpi(0, 1), Z(1, 1, p[0])}), par({sc(p[0]), Xpi(0, 1)})};
  });
  c.add("Siv", "", "Lemma Siv", 0, [](const Params&) -> Pair {
    return {par({sc(0.5), sc(2.0)}), empty_diagram()};
  });
  c.add("H2", "", "Lemma H2", 0, [](const Params&) -> Pair { return {seq({H(), H()}), par({id(), sc(2.0)})}; });
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {0, 1}, {1, 0}, {2, 2}, {0, 3}}) {
    for (XPhase tau : {XPhase::kZero, XPhase::kPi}) {
      const std::string v = std::to_string(n) + "->" + std::to_string(m) +
                            (tau == XPhase::kPi ? " pi" : " 0");
      c.add("H", v, "Lemma H (colour change)", 0, [n, m, tau](const Params&) -> Pair {
        const Complex norm = std::ldexp(1.0, -(n + m - 1));
        return {par({seq({hs(n), X(n, m, tau), hs(m)}), sc(norm)}),
                Z(n, m, tau == XPhase::kZero ? 1.0 : -1.0)};
      });
    }
  }
  for (XPhase t1 : {XPhase::kZero, XPhase::kPi}) {
    for (XPhase t2 : {XPhase::kZero, XPhase::kPi}) {
      const XPhase sum = t1 == t2 ? XPhase::kZero : XPhase::kPi;
      const std::string v = std::string(t1 == XPhase::kPi ? "pi" : "0") + "," +
                            (t2 == XPhase::kPi ? "pi" : "0");
      c.add("S1X", v, "Lemma S1 (red fusion)", 0, [t1, t2, sum](const Params&) -> Pair {
        return {seq({par({X(1, 2, t1), id()}), par({id(), X(2, 1, t2)})}), X(2, 2, sum)};
      });
    }
  }
  c.add("S2X", "", "Lemma S2 (red identity)", 0, [](const Params&) -> Pair { return {X(1, 1), id()}; });
  c.add("Hopf", "", "Lemma Hopf (hopfnslm)", 0, [](const Params&) -> Pair {
    return {seq({copy(), X(2, 1)}), seq({Z(1, 0), X(0, 1)})};
  });
  c.add("Bas1'", "", "Lemma Bas1'", 0, [](const Params&) -> Pair { return {seq({Z(0, 1), Ti()}), Xpi(0, 1)}; });
  c.add("Brk1'", "", "Lemma Brk1'", 0, [](const Params&) -> Pair {
    return {seq({copy(), par({Ti(), Ti()}), Z(2, 1)}), T()};
  });
  c.add("Dlp", "", "Lemma (triangle parallel fusion)", 0, [](const Params&) -> Pair {
    return {seq({copy(), par({T(), T()}), Z(2, 1)}), T()};
  });
  for (int m = 0; m <= 3; ++m) {
    c.add("Pic", "m=" + std::to_string(m), "Lemma Pic", 0, [m](const Params&) -> Pair {
      std::vector<Diagram> xs(static_cast<std::size_t>(m), Xpi(1, 1));
      return {seq({Xpi(1, 1), Z(1, m)}), seq({Z(1, m), par(xs)})};
    });
  }
  c.add("Zero'", "", "Lemma Zero'", 0, [](const Params&) -> Pair {
    return {Z(1, 2, 0.0), seq({X(1, 0), par({X(0, 1), X(0, 1)})})};
  });
  c.add("AD'", "", "Lemma AD'", 2, [](const Params& p) -> Pair {
    return {seq({par({Z(0, 1, p[0]), Z(0, 1, p[1])}), add_gate()}), Z(0, 1, p[0] + p[1])};
  });
  c.add("additiongbx", "", "Lemma additiongbxlm", 2, [](const Params& p) -> Pair {
    return {seq({w_gate(), par({Z(1, 1, p[0]), Z(1, 1, p[1])}), add_gate()}), Z(1, 1, p[0] + p[1])};
  });
  c.add("Ivt", "", "Lemma Ivt", 0, [](const Params&) -> Pair {
    return {Ti(), seq({Z(1, 1, -1.0), T(), Z(1, 1, -1.0)})};
  });
  c.add("Dis", "", "Lemma Dis", 1, [](const Params& p) -> Pair {
    return {seq({add_gate(), Z(1, 1, p[0])}), seq({par({Z(1, 1, p[0]), Z(1, 1, p[0])}), add_gate()})};
  });
  c.add("BiA", "", "Lemma BiA", 0, [](const Params&) -> Pair {
    return {seq({and_gate(), copy()}),
            seq({par({copy(), copy()}), par({id(), swap_wires(), id()}), par({and_gate(), and_gate()})})};
  });
  c.add("Brkn", "", "Lemma (AND of a bit and its negation)", 0, [](const Params&) -> Pair {
    return {seq({copy(), par({id(), Xpi(1, 1)}), and_gate()}), seq({Z(1, 0), X(0, 1)})};
  });
  c.add("Brkp", "", "Lemma Brkp", 1, [](const Params& p) -> Pair {
    return {seq({copy(), par({Z(1, 1, p[0]), id()}), and_gate()}), Z(1, 1, p[0])};
  });

  // Commutation of pink pi with elementary diagrams.
  for (int m = 1; m <= 3; ++m) {
    for (int i = 0; i < m; ++i) {
      for (int s = 1; s < (1 << m); ++s) {
        const auto S = bits(s, m);
        const std::string v = "m=" + std::to_string(m) + " i=" + std::to_string(i) + " S=" + set_text(S);
        c.add("picntcommut", v, "Proposition picntcommut", 1, [m, i, S](const Params& p) -> Pair {
          return {seq({row_addition_diagram(m, p[0], S), pauli_x_on(m, i)}),
                  seq({pauli_x_on(m, i), row_addition_pi(m, p[0], S, {i})})};
        });
        c.add("picntcommutesam", v, "Proposition picntcommutesam", 1, [m, i, S](const Params& p) -> Pair {
          return {seq({pauli_x_on(m, i), row_addition_pi(m, p[0], S, {i}), pauli_x_on(m, i)}),
                  row_addition_diagram(m, p[0], S)};
        });
      }
      const std::string v = "m=" + std::to_string(m) + " i=" + std::to_string(i);
      c.add("picntcommutesamgrn", v, "Proposition picntcommutesamgrn", 1, [m, i](const Params& p) -> Pair {
        return {seq({pauli_x_on(m, i), row_multiplication_pi(m, p[0], {i}), pauli_x_on(m, i)}),
                row_multiplication_diagram(m, p[0])};
      });
    }
  }

  // Extending elementary diagrams by an identity wire.
  for (int m = 1; m <= 2; ++m) {
    for (int s = 1; s < (1 << m); ++s) {
      const auto S = bits(s, m);
      std::vector<int> shifted;
      for (int k : S) shifted.push_back(k + 1);
      const std::string v = "m=" + std::to_string(m) + " S=" + set_text(S);
      c.add("prop1", v, "Proposition prop1 (nlinestensornormalform)", 1, [m, S](const Params& p) -> Pair {
        return {par({id(), row_addition_diagram(m, p[0], S)}),
                seq({row_addition_pi(m + 1, p[0], S, {m}), row_addition_diagram(m + 1, p[0], S)})};
      });
      c.add("itensorand", v, "Proposition itensorand", 1, [m, S, shifted](const Params& p) -> Pair {
        return {par({row_addition_diagram(m, p[0], S), id()}),
                seq({row_addition_pi(m + 1, p[0], shifted, {0}), row_addition_diagram(m + 1, p[0], shifted)})};
      });
    }
    c.add("propadprime", "m=" + std::to_string(m), "Proposition propadprime (nlinestensormmultiply)", 1,
          [m](const Params& p) -> Pair {
            return {par({id(), row_multiplication_diagram(m, p[0])}),
                    seq({row_multiplication_pi(m + 1, p[0], {m}), row_multiplication_diagram(m + 1, p[0])})};
          });
  }

  // Row additions commute.
  for (int m = 1; m <= 3; ++m) {
    for (int s = 1; s < (1 << m); ++s) {
      for (int t = 1; t < (1 << m); ++t) {
        const auto S = bits(s, m);
        const auto Tt = bits(t, m);
        const std::string v = "m=" + std::to_string(m) + " S=" + set_text(S) + " T=" + set_text(Tt);
        c.add("addcommutat", v, "Proposition addcommutat (addcommutation)", 2, [m, S, Tt](const Params& p) -> Pair {
          return {seq({row_addition_diagram(m, p[1], Tt), row_addition_diagram(m, p[0], S)}),
                  seq({row_addition_diagram(m, p[0], S), row_addition_diagram(m, p[1], Tt)})};
        });
        if (s == t) {
          c.add("rule10", "m=" + std::to_string(m) + " S=" + set_text(S), "Rule 10 (additions combine)", 2,
                [m, S](const Params& p) -> Pair {
                  return {seq({row_addition_diagram(m, p[0], S), row_addition_diagram(m, p[1], S)}),
                          row_addition_diagram(m, p[0] + p[1], S)};
                });
        }
      }
    }
  }

  // Pi-pair additions and multiplications: all pairs at m = 2 meeting the
  // commutation condition, split by the shape of the control sets.
  {
    const int m = 2;
    const int full = (1 << m) - 1;
    for (int z1 = 0; z1 <= full; ++z1) {
      for (int z2 = 0; z2 <= full; ++z2) {
        const int c1 = full ^ z1;
        const int c2 = full ^ z2;
        for (int s = 1; s <= full; ++s) {
          for (int t = 1; t <= full; ++t) {
            if (!additions_commute(s, c1, t, c2)) continue;
            std::string name;
            std::string prov;
            if (z1 == z2) {
              name = "addpidoublecom";
              prov = "Proposition addpidoublecom";
            } else if (z1 == 0 || z2 == 0) {
              name = "addpipair2sidecommut";
              prov = "Proposition addpipair2sidecommut (one side plain)";
            } else if ((z1 & z2) == 0) {
              name = "addpipair2sidecommut";
              prov = "Proposition addpipair2sidecommut (disjoint pi sets)";
            } else if ((z1 & z2) == z1) {
              name = "addpipair2sidecommut";
              prov = "Proposition addpipair2sidecommut (first pi set inside second)";
            } else if ((z1 & z2) == z2) {
              name = "addpipair2sidecommut";
              prov = "Proposition addpipair2sidecommut (second pi set inside first)";
            } else {
              name = "addcommutatgencont";
              prov = "Proposition addcommutatgencont";
            }
            const auto S = bits(s, m), Tt = bits(t, m), Z1 = bits(z1, m), Z2 = bits(z2, m);
            const std::string v = "Z1=" + set_text(Z1) + " S=" + set_text(S) + " Z2=" + set_text(Z2) +
                                  " T=" + set_text(Tt);
            c.add(name, v, prov, 2, [m, S, Tt, Z1, Z2](const Params& p) -> Pair {
              return {seq({row_addition_pi(m, p[1], Tt, Z2), row_addition_pi(m, p[0], S, Z1)}),
                      seq({row_addition_pi(m, p[0], S, Z1), row_addition_pi(m, p[1], Tt, Z2)})};
            });
          }
        }
      }
    }
    // General control sets on three wires, a representative sample.
    const int m3 = 3;
    const int full3 = 7;
    for (auto [z1, s, z2, t] : std::vector<std::array<int, 4>>{
             {1, 2, 4, 1}, {3, 4, 5, 2}, {6, 1, 3, 4}, {1, 3, 2, 5}, {5, 6, 6, 3}}) {
      if (!additions_commute(s, full3 ^ z1, t, full3 ^ z2)) continue;
      const auto S = bits(s, m3), Tt = bits(t, m3), Z1 = bits(z1, m3), Z2 = bits(z2, m3);
      const std::string v = "m=3 Z1=" + set_text(Z1) + " S=" + set_text(S) + " Z2=" + set_text(Z2) +
                            " T=" + set_text(Tt);
      c.add("addcommutatgencont", v, "Proposition addcommutatgencont", 2, [m3, S, Tt, Z1, Z2](const Params& p) -> Pair {
        return {seq({row_addition_pi(m3, p[1], Tt, Z2), row_addition_pi(m3, p[0], S, Z1)}),
                seq({row_addition_pi(m3, p[0], S, Z1), row_addition_pi(m3, p[1], Tt, Z2)})};
      });
    }
  }

  // Diagonal elementary diagrams commute.
  for (int m = 1; m <= 2; ++m) {
    const int full = (1 << m) - 1;
    for (int z1 = 0; z1 <= full; ++z1) {
      for (int z2 = 0; z2 <= full; ++z2) {
        const auto Z1 = bits(z1, m), Z2 = bits(z2, m);
        const std::string v = "m=" + std::to_string(m) + " Z1=" + set_text(Z1) + " Z2=" + set_text(Z2);
        const std::string name = z1 == 0 || z2 == 0 ? "multiplypimulticommute"
                                 : z1 == z2         ? "multipidoublecom"
                                                    : "multiplypimulticommutg";
        c.add(name, v, "Proposition " + name, 2, [m, Z1, Z2](const Params& p) -> Pair {
          return {seq({row_multiplication_pi(m, p[1], Z2), row_multiplication_pi(m, p[0], Z1)}),
                  seq({row_multiplication_pi(m, p[0], Z1), row_multiplication_pi(m, p[1], Z2)})};
        });
        if (z1 == z2) {
          c.add("pimultiplyabsorbtion", "m=" + std::to_string(m) + " Z=" + set_text(Z1),
                "Proposition pimultiplyabsorbtion", 2, [m, Z1](const Params& p) -> Pair {
                  return {seq({row_multiplication_pi(m, p[0], Z1), row_multiplication_pi(m, p[1], Z1)}),
                          row_multiplication_pi(m, p[0] * p[1], Z1)};
                });
        }
      }
    }
  }

  // Row additions against pi-controlled multiplications.
  for (int m = 1; m <= 3; ++m) {
    const int full = (1 << m) - 1;
    for (int i = 0; i < m; ++i) {
      for (int s = 1; s <= full; ++s) {
        if (s == (1 << i)) continue;  // S = {i} is the excluded case
        const auto S = bits(s, m);
        const std::string v = "m=" + std::to_string(m) + " i=" + std::to_string(i) + " S=" + set_text(S);
        c.add("multiplypimulticommutgcro2", v, "Proposition multiplypimulticommutgcro2", 2,
              [m, i, S](const Params& p) -> Pair {
                return {seq({row_multiplication_pi(m, p[1], {i}), row_addition_diagram(m, p[0], S)}),
                        seq({row_addition_diagram(m, p[0], S), row_multiplication_pi(m, p[1], {i})})};
              });
      }
    }
  }
  for (int m = 1; m <= 2; ++m) {
    const int full = (1 << m) - 1;
    for (int za = 0; za <= full; ++za) {
      for (int zm = 0; zm <= full; ++zm) {
        for (int s = 1; s <= full; ++s) {
          const int ca = full ^ za;
          const int cm = full ^ zm;
          if (cm == ca || cm == (ca ^ s)) continue;
          std::string name;
          std::string prov;
          if (za == 0 && __builtin_popcount(static_cast<unsigned>(zm)) == 1) {
            name = "addpimultiplycommut";
            prov = "Proposition addpimultiplycommut";
          } else if (zm == 0) {
            name = "addpipairmultiplycommutgp";
            prov = "Proposition addpipairmultiplycommutgp";
          } else if (za == 0) {
            name = "addpipairmulcommut";
            prov = "Proposition addpipairmulcommut (plain addition)";
          } else if ((za & zm) == 0) {
            name = "addpipairmulcommut";
            prov = "Proposition addpipairmulcommut (disjoint pi sets)";
          } else if (za == zm) {
            continue;  // excluded by cm != ca
          } else {
            name = "addpimultiplycommutg";
            prov = "Proposition addpimultiplycommutg";
          }
          const auto S = bits(s, m), ZA = bits(za, m), ZM = bits(zm, m);
          const std::string v = "m=" + std::to_string(m) + " Za=" + set_text(ZA) + " S=" + set_text(S) +
                                " Zm=" + set_text(ZM);
          c.add(name, v, prov, 2, [m, S, ZA, ZM](const Params& p) -> Pair {
            return {seq({row_multiplication_pi(m, p[1], ZM), row_addition_pi(m, p[0], S, ZA)}),
                    seq({row_addition_pi(m, p[0], S, ZA), row_multiplication_pi(m, p[1], ZM)})};
          });
        }
      }
    }
    // Multiplication without pi pairs against a pi-pair addition.
    for (int za = 1; za <= full; ++za) {
      for (int s = 1; s <= full; ++s) {
        if (s == za) continue;
        const auto S = bits(s, m), ZA = bits(za, m);
        c.add("addpipairmulcommut", "plain m=" + std::to_string(m) + " Za=" + set_text(ZA) + " S=" + set_text(S),
              "Proposition addpipairmulcommut (plain multiplication)", 2, [m, S, ZA](const Params& p) -> Pair {
                return {seq({row_multiplication_diagram(m, p[1]), row_addition_pi(m, p[0], S, ZA)}),
                        seq({row_addition_pi(m, p[0], S, ZA), row_multiplication_diagram(m, p[1])})};
              });
      }
    }
  }

  // State forms acting on the base state |1...1>.
  for (int m = 1; m <= 3; ++m) {
    const int full = (1 << m) - 1;
    for (int s = 1; s <= full; ++s) {
      const auto S = bits(s, m);
      const std::string v = "m=" + std::to_string(m) + " S=" + set_text(S);
      c.add("pimultiaddcombinepro", v, "Proposition pimultiaddcombinepro", 2, [m, S](const Params& p) -> Pair {
        return {seq({base_state(m), row_addition_diagram(m, p[0], S), row_multiplication_pi(m, p[1], S)}),
                seq({base_state(m), row_addition_diagram(m, p[0] * p[1], S)})};
      });
      for (int t = 1; t <= full; ++t) {
        if (t == s) continue;
        const auto Tt = bits(t, m);
        std::vector<int> sym = bits(s ^ t, m);
        c.add("pitopaddpipaircommutprop", v + " T=" + set_text(Tt), "Proposition pitopaddpipaircommutprop", 2,
              [m, S, Tt, sym](const Params& p) -> Pair {
                return {seq({base_state(m), row_addition_diagram(m, p[0], S), row_addition_pi(m, p[1], Tt, S)}),
                        seq({base_state(m), row_addition_diagram(m, p[0] * p[1], sym),
                             row_addition_diagram(m, p[0], S)})};
              });
      }
      for (int z = 1; z <= full; ++z) {
        const auto Zs = bits(z, m);
        c.add("piredonpairpidm", v + " Z=" + set_text(Zs), "Proposition piredonpairpidm", 1,
              [m, S, Zs](const Params& p) -> Pair {
                return {seq({base_state(m), row_addition_pi(m, p[0], S, Zs)}), base_state(m)};
              });
      }
    }
    for (int z = 1; z <= full; ++z) {
      const auto Zs = bits(z, m);
      c.add("piredonpairpidm", "mult m=" + std::to_string(m) + " Z=" + set_text(Zs), "Proposition piredonpairpidm",
            1, [m, Zs](const Params& p) -> Pair {
              return {seq({base_state(m), row_multiplication_pi(m, p[0], Zs)}), base_state(m)};
            });
    }
  }
  for (int m = 2; m <= 3; ++m) {
    const int full = (1 << m) - 1;
    for (int s = 1; s <= full; ++s) {
      if (((s & 1) != 0) == ((s & 2) != 0)) continue;  // exactly one of wires 0, 1
      const auto S = bits(s, m);
      c.add("rule12", "m=" + std::to_string(m) + " S=" + set_text(S), "Rule 12 (plugged addition vanishes)", 1,
            [m, S](const Params& p) -> Pair {
              const Diagram plug = par({id(m - 2), cup()});
              return {seq({base_state(m), row_addition_diagram(m, p[0], S), plug}), seq({base_state(m), plug})};
            });
    }
  }
  c.add("cnotscomute", "", "Lemma cnotscomutelm", 0, [](const Params&) -> Pair {
    const Diagram c01 = par({cnot(), id()});
    const Diagram c02 = seq({par({id(), swap_wires()}), par({cnot(), id()}), par({id(), swap_wires()})});
    return {seq({c01, c02}), seq({c02, c01})};
  });
  return rules;
}

}  // namespace

const std::vector<RewriteRule>& base_rules() {
  static const std::vector<RewriteRule> rules = make_base_rules();
  return rules;
}

const std::vector<RewriteRule>& derived_catalog() {
  static const std::vector<RewriteRule> rules = make_derived();
  return rules;
}

std::vector<RewriteRule> full_catalog() {
  std::vector<RewriteRule> out = base_rules();
  const auto& d = derived_catalog();
  out.insert(out.end(), d.begin(), d.end());
  return out;
}

std::vector<RewriteRule> find_rules(const std::string& name_or_id) {
  std::vector<RewriteRule> out;
  for (const RewriteRule& r : full_catalog()) {
    if (r.name == name_or_id || r.id() == name_or_id) out.push_back(r);
  }
  return out;
}

std::vector<std::string> rule_names(const std::vector<RewriteRule>& rules) {
  std::vector<std::string> out;
  for (const RewriteRule& r : rules) {
    if (std::find(out.begin(), out.end(), r.name) == out.end()) out.push_back(r.name);
  }
  return out;
}

std::pair<Diagram, Diagram> instantiate(const RewriteRule& rule, const std::vector<Complex>& params) {
  if (static_cast<int>(params.size()) != rule.arity) {
    throw ArityError("rule " + rule.id() + " takes " + std::to_string(rule.arity) + " parameters, got " +
                     std::to_string(params.size()));
  }
  auto sides = rule.build(params);
  if (sides.first.num_inputs() != sides.second.num_inputs() ||
      sides.first.num_outputs() != sides.second.num_outputs()) {
    throw ArityError("rule " + rule.id() + " has mismatched boundary types");
  }
  return sides;
}

RewriteRule corrupted(const RewriteRule& rule) {
  RewriteRule bad = rule;
  auto inner = rule.build;
  const int arity = rule.arity;
  bad.build = [inner, arity](const Params& p) -> Pair {
    Params neg = p;
    if (!neg.empty()) neg[0] = -neg[0];
    Pair lhs = inner(p);
    Pair rhs = inner(neg);
    if (arity == 0) return {lhs.first, tensor(rhs.second, scalar(-1.0))};
    return {lhs.first, rhs.second};
  };
  return bad;
}

SoundnessReport check_soundness(const RewriteRule& rule, const SoundnessOptions& options) {
  if (options.samples < 1) throw std::invalid_argument("soundness check needs at least one sample");
  SoundnessReport report;
  report.rule = rule.id();
  report.provenance = rule.provenance;

  std::vector<Params> draws;
  if (rule.arity == 0) {
    draws.emplace_back();
  } else {
    for (Complex forced : {Complex(0.0), Complex(1.0), Complex(-1.0), kI}) {
      draws.emplace_back(static_cast<std::size_t>(rule.arity), forced);
    }
    std::mt19937_64 rng(options.seed ^ std::hash<std::string>{}(rule.id()));
    std::uniform_real_distribution<double> u(-options.radius, options.radius);
    for (int k = 0; k < options.samples; ++k) {
      Params p;
      while (static_cast<int>(p.size()) < rule.arity) {
        Complex z(u(rng), u(rng));
        if (std::abs(z) <= options.radius) p.push_back(z);
      }
      draws.push_back(std::move(p));
    }
  }

  for (const Params& p : draws) {
    auto [lhs, rhs] = instantiate(rule, p);
    ++report.draws;
    for (bool flipped : {false, true}) {
      const Matrix a = interpret(flipped ? flip(lhs) : lhs);
      const Matrix b = interpret(flipped ? flip(rhs) : rhs);
      const double dev = max_deviation(a, b);
      ++report.checks;
      report.max_deviation = std::max(report.max_deviation, dev);
      if (!(dev <= options.tol)) report.failures.push_back({p, flipped, dev});
    }
  }
  return report;
}

std::vector<SoundnessReport> check_catalog(const std::vector<RewriteRule>& rules,
                                           const SoundnessOptions& options) {
  std::vector<SoundnessReport> out;
  out.reserve(rules.size());
  for (const RewriteRule& r : rules) out.push_back(check_soundness(r, options));
  return out;
}

std::string format_reports(const std::vector<SoundnessReport>& reports) {
  std::ostringstream os;
  int failed = 0;
  for (const SoundnessReport& r : reports) {
    os << (r.passed() ? "ok   " : "FAIL ") << std::left << std::setw(58) << r.rule << " draws=" << std::setw(3)
       << r.draws << " max_dev=" << std::scientific << std::setprecision(2) << r.max_deviation
       << std::defaultfloat << "\n";
    for (const SoundnessFailure& f : r.failures) {
      os << "     params=(";
      for (std::size_t k = 0; k < f.params.size(); ++k) {
        os << (k ? ", " : "") << f.params[k].real() << (f.params[k].imag() < 0 ? "" : "+") << f.params[k].imag()
           << "i";
      }
      os << ")" << (f.flipped ? " flipped" : "") << " deviation=" << f.deviation << "\n";
    }
    failed += !r.passed();
  }
  os << reports.size() - static_cast<std::size_t>(failed) << "/" << reports.size() << " rules sound\n";
  return os.str();
}

}  // namespace zxel
