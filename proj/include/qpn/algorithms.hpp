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

#include <optional>
#include <vector>

#include "qpn/core.hpp"
#include "qpn/optimize.hpp"
#include "qpn/simulate.hpp"
#include "qpn/synth.hpp"
#include "qpn/walsh.hpp"

namespace qpn {

Backend backend_from_string(const std::string& name);

/// Builds the programmable template a backend provides for `width` wires.
/// The optimized backend searches on a path coupling with the default
/// budget and is subject to the search width cap.
NetworkTemplate make_template(int width, Backend backend);

enum class BooleanClass { constant, balanced, neither };

std::string to_string(BooleanClass c);

/// constant iff all entries equal; balanced iff exactly half are one.
BooleanClass classify_boolean(const BooleanFunction& f);

struct DjResult {
  BooleanClass verdict;  // constant or balanced
  double prob_zero;
  CircuitStats stats;
};

/// Runs H^N . U_f . H^N on |0...0> with U_f programmed from theta = pi f.
/// The all-zeros outcome probability is 1 for constant f and 0 for balanced
/// f up to rounding. In strict mode (default) f must be constant or
/// balanced.
DjResult deutsch_jozsa(const BooleanFunction& f, Backend backend,
                       bool strict = true);

/// theta_0 = pi, zero elsewhere: conjugated by Hadamards this is the
/// inversion about the mean, up to a global -1.
PhaseSpec grover_diffusion_phases(int width);

/// floor(pi/4 sqrt(2^N / t)).
int default_grover_iterations(int width, std::size_t marked_count);

struct GroverResult {
  int iterations;
  double success_prob;
  std::vector<double> trajectory;  // entry k = success prob after k iterations
  CircuitStats stats;              // one oracle application
};

/// Oracle and diffusion both run through one and the same template, bound
/// to different angle settings. Marked entries are deduplicated; the set
/// must be nonempty and not the full basis.
GroverResult grover(int width, const std::vector<BasisIndex>& marked,
                    Backend backend, std::optional<int> iterations = {});

/// Flip of the last qubit controlled on an arbitrary condition h of the
/// other N-1 qubits: Hadamard-conjugates the phase network programmed with
/// theta_{(c,b)} = pi h(c) b, giving |c, b> -> |c, b xor h(c)> up to global
/// phase.
Circuit generalized_cnot(const BooleanFunction& condition,
                         Backend backend = Backend::recursive_cnot);

/// generalized_cnot with h = AND of `controls` bits, on controls+1 wires.
Circuit toffoli(int controls, Backend backend = Backend::recursive_cnot);

}  // namespace qpn
