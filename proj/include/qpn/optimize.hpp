// Copyright 2026 The qpn authors
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
#include <limits>
#include <vector>

#include "qpn/core.hpp"
#include "qpn/synth.hpp"

namespace qpn {

/// Gates grouped into layers of pairwise qubit-disjoint operations.
/// Each entry remembers its position in the source circuit, so flattening
/// can restore the exact original order.
struct LayeredGate {
  std::size_t index;
  Gate gate;
};

struct LayeredCircuit {
  int width;
  std::vector<std::vector<LayeredGate>> layers;

  std::size_t depth() const { return layers.size(); }
  std::size_t two_qubit_blocks() const;
};

/// Greedy as-soon-as-possible layering; deterministic, preserves the
/// per-qubit gate order. Throws if the circuit fails validate_circuit for
/// the given coupling.
LayeredCircuit schedule_layers(const Circuit& c, const CouplingGraph& g);

/// Rebuilds the sequential circuit a layering represents (gates sorted by
/// their original position).
Circuit flatten(const LayeredCircuit& lc);

struct CircuitStats {
  std::size_t rotations = 0;
  std::size_t cnot = 0;
  std::size_t cns = 0;
  std::size_t swap = 0;
  std::size_t hadamard = 0;
  std::size_t global_phase = 0;
  std::size_t two_qubit = 0;
  std::size_t total = 0;
  std::size_t depth = 0;
  std::size_t two_qubit_blocks = 0;
};

CircuitStats circuit_stats(const Circuit& c);
CircuitStats template_stats(const NetworkTemplate& t);

/// Search node of the block optimizer: current label assignment, the set of
/// conditions already rotated, and how many two-qubit blocks were spent.
struct SearchState {
  std::vector<ParityMask> labels;
  std::vector<bool> hit;  // indexed by mask value, entry 0 unused
  int blocks_used = 0;
};

struct SearchBudget {
  std::uint64_t max_nodes = 10'000'000;
  double max_seconds = std::numeric_limits<double>::infinity();
};

struct OptimizeResult {
  NetworkTemplate network;
  int blocks = 0;
  bool optimal = false;
  std::uint64_t nodes = 0;
  int lower_bound = 0;
};

/// Iterative-deepening search over sequences of two-qubit blocks (any set of
/// classical gates on disjoint coupled pairs fired together), with free
/// rotation phases between blocks. Returns the template with the fewest
/// blocks found; `optimal` is set only when every shallower depth was
/// exhausted within budget. A scheduled recursive construction seeds the
/// incumbent, so a feasible result exists even on a tiny budget.
OptimizeResult optimize_template(int width, const CouplingGraph& coupling,
                                 TwoQubitFlavor flavor,
                                 const SearchBudget& budget = {},
                                 int width_cap = 4);

enum class PerturbationMode { adversarial, random_uniform };

std::string to_string(PerturbationMode m);

struct SensitivityReport {
  int width = 0;
  double epsilon = 0.0;
  double worst_case_bound = 0.0;  // 2^{N-1} * epsilon
  double empirical_max = 0.0;
  double empirical_rms = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

/// How strongly knob errors |delta_phi| <= epsilon can distort the realized
/// phases. Adversarial mode aligns all knob errors with one basis state and
/// attains the worst case exactly; random mode samples uniform errors.
SensitivityReport angle_sensitivity(int width, double epsilon,
                                    PerturbationMode mode,
                                    std::uint64_t trials = 10'000,
                                    std::uint64_t seed = 0);

}  // namespace qpn
