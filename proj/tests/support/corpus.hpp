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

// Random small diagrams for property tests: layered circuits of generators
// on at most `max_wires` wires.

#include <random>
#include <vector>

#include "support/oracles.hpp"
#include "zxel/diagram.hpp"

namespace corpus {

using zxel::Complex;
using zxel::Diagram;

inline Complex random_phase(std::mt19937_64& rng) {
  static const Complex kSpecial[] = {0.0, 1.0, -1.0, Complex(0.0, 1.0), 2.0};
  std::uniform_int_distribution<int> pick(0, 9);
  const int k = pick(rng);
  if (k < 5) return kSpecial[k];
  return oracle::random_complex(rng);
}

struct Generator {
  Diagram d;
  int in;
  int out;
};

inline Generator random_generator(std::mt19937_64& rng, int max_in, int max_out) {
  while (true) {
    std::uniform_int_distribution<int> kind(0, 9);
    std::uniform_int_distribution<int> arity(0, 2);
    switch (kind(rng)) {
      case 0:
      case 1: {
        const int n = std::min(arity(rng), max_in);
        const int m = std::min(arity(rng), max_out);
        return {zxel::z_spider(n, m, random_phase(rng)), n, m};
      }
      case 2:
        if (max_in >= 1 && max_out >= 1) return {zxel::hadamard(), 1, 1};
        break;
      case 3:
        if (max_in >= 1 && max_out >= 1) return {zxel::triangle(), 1, 1};
        break;
      case 4:
        if (max_in >= 1 && max_out >= 1) return {zxel::triangle_inv(), 1, 1};
        break;
      case 5:
        if (max_in >= 2 && max_out >= 2) return {zxel::swap_wires(), 2, 2};
        break;
      case 6:
        if (max_out >= 2) return {zxel::cap(), 0, 2};
        break;
      case 7:
        if (max_in >= 2) return {zxel::cup(), 2, 0};
        break;
      default: {
        const int n = std::min(arity(rng), max_in);
        const int m = std::min(arity(rng), max_out);
        const auto tau = std::bernoulli_distribution(0.5)(rng) ? zxel::XPhase::kPi : zxel::XPhase::kZero;
        return {zxel::x_spider(n, m, tau), n, m};
      }
    }
  }
}

// A diagram inputs -> outputs built from at most `max_gens` generators, never
// holding more than `max_wires` open wires between layers.
inline Diagram random_diagram(std::mt19937_64& rng, int inputs, int outputs, int max_gens,
                              int max_wires = 3) {
  std::uniform_int_distribution<int> count(1, std::max(1, max_gens - 1));
  const int gens = count(rng);
  Diagram acc = zxel::identity(inputs);
  int w = inputs;
  for (int g = 0; g < gens; ++g) {
    // Choose an offset and a generator that fits.
    Generator gen = random_generator(rng, w, max_wires);
    if (w - gen.in + gen.out > max_wires) continue;
    std::uniform_int_distribution<int> offset_dist(0, w - gen.in);
    const int offset = offset_dist(rng);
    const Diagram layer = zxel::tensor_all(
        {zxel::identity(offset), gen.d, zxel::identity(w - gen.in - offset)});
    acc = zxel::compose(acc, layer);
    w = w - gen.in + gen.out;
  }
  // Adjust the wire count with one spider on the left-most wires.
  if (w == outputs) return acc;
  if (w == 0) return zxel::tensor(acc, zxel::z_spider(0, outputs, random_phase(rng)));
  if (outputs == 0) return zxel::compose(acc, zxel::z_spider(w, 0, random_phase(rng)));
  if (w > outputs) {
    return zxel::compose(acc, zxel::tensor(zxel::z_spider(w - outputs + 1, 1, random_phase(rng)),
                                           zxel::identity(outputs - 1)));
  }
  return zxel::compose(acc, zxel::tensor(zxel::z_spider(1, outputs - w + 1, random_phase(rng)),
                                         zxel::identity(w - 1)));
}

// Random boundary split with inputs + outputs <= max_boundary.
inline std::pair<int, int> random_type(std::mt19937_64& rng, int max_boundary = 3) {
  std::uniform_int_distribution<int> total(0, max_boundary);
  const int t = total(rng);
  std::uniform_int_distribution<int> split(0, t);
  const int n = split(rng);
  return {n, t - n};
}

}  // namespace corpus
