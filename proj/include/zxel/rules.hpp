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

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "zxel/diagram.hpp"
#include "zxel/semantics.hpp"

namespace zxel {

// A named equation between two diagrams with complex parameter slots. Several
// entries may share a name when a rule is a family (different arities or index
// sets); `variant` tells them apart.
struct RewriteRule {
  std::string name;
  std::string variant;
  std::string provenance;  // "base rule" or the lemma / proposition label
  bool derived = false;
  int arity = 0;
  std::function<std::pair<Diagram, Diagram>(const std::vector<Complex>&)> build;

  std::string id() const { return variant.empty() ? name : name + "[" + variant + "]"; }
};

// The algebraic rules the calculus is built on.
const std::vector<RewriteRule>& base_rules();
// Equalities derived from them, checked semantically.
const std::vector<RewriteRule>& derived_catalog();
// base_rules() followed by derived_catalog().
std::vector<RewriteRule> full_catalog();

// Every catalog entry whose name (or full id) matches.
std::vector<RewriteRule> find_rules(const std::string& name_or_id);
std::vector<std::string> rule_names(const std::vector<RewriteRule>& rules);

// Builds the LHS/RHS pair; throws ArityError when the parameter count differs.
std::pair<Diagram, Diagram> instantiate(const RewriteRule& rule, const std::vector<Complex>& params);

// The same rule with the first RHS parameter negated (RHS scaled by -1 for
// rules without parameters). Used to check the harness catches a broken rule.
RewriteRule corrupted(const RewriteRule& rule);

struct SoundnessFailure {
  std::vector<Complex> params;
  bool flipped = false;
  double deviation = 0.0;
};

struct SoundnessReport {
  std::string rule;  // RewriteRule::id()
  std::string provenance;
  int draws = 0;     // parameter assignments tried
  int checks = 0;    // matrix comparisons (draws x {plain, flipped})
  double max_deviation = 0.0;
  std::vector<SoundnessFailure> failures;

  bool passed() const { return failures.empty(); }
};

struct SoundnessOptions {
  int samples = 20;
  double tol = kDefaultTolerance;
  double radius = 2.0;
  std::uint64_t seed = 0x5eed;
};

// Forced draws 0, 1, -1 and i (every slot set to the same value), then
// `samples` uniform draws from the disk of the given radius. Each draw is
// checked on the rule and on its upside-down flip. Rules without parameters
// are checked once.
SoundnessReport check_soundness(const RewriteRule& rule, const SoundnessOptions& options = {});

std::vector<SoundnessReport> check_catalog(const std::vector<RewriteRule>& rules,
                                           const SoundnessOptions& options = {});

std::string format_reports(const std::vector<SoundnessReport>& reports);

}  // namespace zxel
