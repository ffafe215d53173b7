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
#include <string>
#include <vector>

#include "zxel/diagram.hpp"

namespace zxel {

class StaleSiteError : public DiagramError {
 public:
  using DiagramError::DiagramError;
};

class UnsupportedRuleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// One embedding of a rule's left-hand side. Pink spiders are matched in their
// expanded form (green spider with H on every leg).
struct MatchSite {
  std::string rule;
  std::vector<NodeId> nodes;   // matched nodes, anchor first
  std::vector<Complex> params;  // phases read off the matched nodes
  std::uint64_t fingerprint = 0;
};

// Rules with a matcher:
//   S1   green spiders joined by a plain edge fuse (phases multiply); a plain
//        self-loop on a green spider is dropped
//   S2   green spider with phase 1 and two legs becomes a wire
//   Hopf two green spiders joined by two H edges lose that pair of edges
//   B1   green phase-1 state through H into a spider of degree <= 2
//   B3   the same with a phase -1 state
//   H2   two adjacent H nodes become a wire times scalar 2
//   Sca  two scalar nodes merge
//   Inv  triangle followed by its inverse (either order) becomes a wire
const std::vector<std::string>& matchable_rules();

// Sites sorted by smallest matched node id, then by the full node list.
// Throws UnsupportedRuleError for a rule without a matcher.
std::vector<MatchSite> find_matches(const Diagram& d, const std::string& rule);

// Throws StaleSiteError when `d` is not the diagram the site was found in.
Diagram apply(const Diagram& d, const MatchSite& site);

struct TraceStep {
  std::string rule;
  std::vector<NodeId> nodes;
  std::size_t node_count = 0;  // after the step
};

struct SimplifyResult {
  Diagram diagram;
  std::vector<TraceStep> trace;
  bool budget_exhausted = false;  // stopped with matches left
};

// Applies the terminating subset {Sca, S1, S2, H2, Inv, Hopf, B1, B3} one
// site at a time (first rule in that order with a match, smallest site) until
// nothing matches or `budget` steps were taken.
SimplifyResult simplify(const Diagram& d, int budget);

}  // namespace zxel
