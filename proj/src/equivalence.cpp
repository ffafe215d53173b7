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

#include "zxel/equivalence.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "zxel/kernels.hpp"

namespace zxel {

std::string to_string(EquivalenceMethod method) {
  switch (method) {
    case EquivalenceMethod::kNormalForm:
      return "normal-form";
    case EquivalenceMethod::kSemantic:
      return "semantic";
    case EquivalenceMethod::kBoth:
      return "both";
  }
  return "?";
}

EquivalenceVerdict check_equivalent(const Diagram& d1, const Diagram& d2,
                                    const EquivalenceOptions& options) {
  if (d1.num_inputs() != d2.num_inputs() || d1.num_outputs() != d2.num_outputs()) {
    std::ostringstream msg;
    msg << "type mismatch: " << d1.num_inputs() << " -> " << d1.num_outputs() << " vs "
        << d2.num_inputs() << " -> " << d2.num_outputs();
    throw TypeMismatchError(msg.str());
  }
  EquivalenceVerdict v;
  v.method = options.method;
  const bool use_nf = options.method != EquivalenceMethod::kSemantic;
  const bool use_matrix = options.method != EquivalenceMethod::kNormalForm;

  std::optional<bool> nf_equal_verdict, matrix_verdict;
  if (use_nf) {
    NormalForm a = normalize(d1, options.wire_cap);
    NormalForm b = normalize(d2, options.wire_cap);
    const double dev = kernels::max_abs_diff(a.coeffs, b.coeffs);
    nf_equal_verdict = nf_equal(a, b, options.tol);
    v.max_deviation = std::max(v.max_deviation, dev);
    v.nfs = std::make_pair(std::move(a), std::move(b));
  }
  if (use_matrix) {
    const ContractionOptions copt{options.wire_cap, ContractionOrder::kGreedy};
    const double dev = max_deviation(interpret(d1, copt), interpret(d2, copt));
    matrix_verdict = dev <= options.tol;
    v.max_deviation = std::max(v.max_deviation, dev);
  }
  if (nf_equal_verdict && matrix_verdict && *nf_equal_verdict != *matrix_verdict) {
    std::ostringstream msg;
    msg << "normal form says " << (*nf_equal_verdict ? "equal" : "different")
        << " but matrices say " << (*matrix_verdict ? "equal" : "different")
        << " (max deviation " << v.max_deviation << ")";
    throw InternalDisagreementError(msg.str());
  }
  v.equal = nf_equal_verdict ? *nf_equal_verdict : *matrix_verdict;
  return v;
}

std::vector<EquivalenceVerdict> check_equivalent_batch(
    const std::vector<std::pair<Diagram, Diagram>>& pairs, const EquivalenceOptions& options) {
  std::vector<EquivalenceVerdict> out(pairs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t k = next++; k < pairs.size(); k = next++) {
      try {
        out[k] = check_equivalent(pairs[k].first, pairs[k].second, options);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const unsigned threads =
      std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), pairs.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace zxel
