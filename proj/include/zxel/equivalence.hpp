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

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zxel/diagram.hpp"
#include "zxel/normalform.hpp"

namespace zxel {

class TypeMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The normal-form and matrix verdicts differ. Always a defect.
class InternalDisagreementError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class EquivalenceMethod { kNormalForm, kSemantic, kBoth };

std::string to_string(EquivalenceMethod method);

struct EquivalenceVerdict {
  bool equal = false;
  EquivalenceMethod method = EquivalenceMethod::kBoth;
  double max_deviation = 0.0;  // largest entry difference seen by any method run
  std::optional<std::pair<NormalForm, NormalForm>> nfs;
};

struct EquivalenceOptions {
  double tol = kDefaultTolerance;
  EquivalenceMethod method = EquivalenceMethod::kBoth;
  int wire_cap = kDefaultWireCap;
};

EquivalenceVerdict check_equivalent(const Diagram& d1, const Diagram& d2,
                                    const EquivalenceOptions& options = {});

// Checks every pair, spreading the work over hardware threads. The first
// exception thrown by any pair is rethrown.
std::vector<EquivalenceVerdict> check_equivalent_batch(
    const std::vector<std::pair<Diagram, Diagram>>& pairs, const EquivalenceOptions& options = {});

}  // namespace zxel
