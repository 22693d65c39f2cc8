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

#include "qpn/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace qpn {

Backend backend_from_string(const std::string& name) {
  if (name == "recursive-cnot") return Backend::recursive_cnot;
  if (name == "recursive-cns") return Backend::recursive_cns;
  if (name == "gray") return Backend::gray;
  if (name == "optimized") return Backend::optimized;
  throw std::invalid_argument("unknown backend '" + name + "'");
}

NetworkTemplate make_template(int width, Backend backend) {
  switch (backend) {
    case Backend::recursive_cnot:
      return recursive_template(width, TwoQubitFlavor::cnot);
    case Backend::recursive_cns:
      return recursive_template(width, TwoQubitFlavor::cns);
    case Backend::gray:
      return gray_code_template(width);
    case Backend::optimized:
      return optimize_template(width, CouplingGraph(Coupling::path, width),
                               TwoQubitFlavor::cnot)
          .network;
  }
  throw std::invalid_argument("unknown backend");
}

std::string to_string(BooleanClass c) {
  switch (c) {
    case BooleanClass::constant: return "constant";
    case BooleanClass::balanced: return "balanced";
    case BooleanClass::neither: return "neither";
  }
  return "?";
}

BooleanClass classify_boolean(const BooleanFunction& f) {
  const std::size_t ones = f.ones();
  if (ones == 0 || ones == f.table.size()) return BooleanClass::constant;
  if (2 * ones == f.table.size()) return BooleanClass::balanced;
  return BooleanClass::neither;
}

namespace {

void append_hadamard_wall(Circuit& c) {
  for (int q = 1; q <= c.width; ++q) c.append(Gate::hadamard(q));
}

}  // namespace

DjResult deutsch_jozsa(const BooleanFunction& f, Backend backend, bool strict) {
  const BooleanClass cls = classify_boolean(f);
  if (strict && cls == BooleanClass::neither)
    throw std::invalid_argument(
        "deutsch_jozsa: function is neither constant nor balanced");

  const NetworkTemplate t = make_template(f.width, backend);
  const Circuit oracle = bind_angles(t, phases_from_boolean(f),
                                     /*include_global_phase=*/true);

  Circuit circuit(f.width);
  append_hadamard_wall(circuit);
  circuit.extend(oracle);
  append_hadamard_wall(circuit);

  const StateVector out = run(circuit, StateVector::zero_state(f.width));
  const double prob_zero = std::norm(out.amps[0]);

  DjResult result{prob_zero >= 1.0 - 1e-9 ? BooleanClass::constant
                                          : BooleanClass::balanced,
                  prob_zero, circuit_stats(circuit)};
  return result;
}

PhaseSpec grover_diffusion_phases(int width) {
  PhaseSpec spec = PhaseSpec::zero(width);
  spec.theta[0] = kPi;
  return spec;
}

int default_grover_iterations(int width, std::size_t marked_count) {
  check_width(width);
  if (marked_count == 0)
    throw std::invalid_argument("default_grover_iterations: no marked items");
  const double total = std::ldexp(1.0, width);
  return static_cast<int>(
      std::floor(kPi / 4.0 * std::sqrt(total / static_cast<double>(marked_count))));
}

GroverResult grover(int width, const std::vector<BasisIndex>& marked,
                    Backend backend, std::optional<int> iterations) {
  check_width(width);
  std::set<std::uint32_t> marked_set;
  for (const BasisIndex& x : marked) {
    if (x.width != width)
      throw std::invalid_argument("grover: marked item width mismatch");
    marked_set.insert(x.bits);
  }
  const std::size_t total = std::size_t{1} << width;
  if (marked_set.empty())
    throw std::invalid_argument("grover: the marked set is empty");
  if (marked_set.size() >= total)
    throw std::invalid_argument("grover: the marked set is the whole basis");

  BooleanFunction g = BooleanFunction::constant(width, false);
  for (std::uint32_t x : marked_set) g.table[x] = 1;

  // One and the same network realizes both the oracle and the diffusion;
  // only the knob settings differ. The global-phase knob is kept as
  // bookkeeping so the trajectory matches the closed form exactly.
  const NetworkTemplate t = make_template(width, backend);
  const Circuit oracle = bind_angles(t, phases_from_boolean(g), true);
  const Circuit diffusion = bind_angles(t, grover_diffusion_phases(width), true);

  const int r = iterations.value_or(default_grover_iterations(width, marked_set.size()));
  if (r < 0) throw std::invalid_argument("grover: iterations must be >= 0");

  StateVector state = StateVector::zero_state(width);
  for (int q = 1; q <= width; ++q) apply_gate_inplace(state, Gate::hadamard(q));

  auto success = [&]() {
    double p = 0.0;
    for (std::uint32_t x : marked_set) p += std::norm(state.amps[x]);
    return p;
  };

  GroverResult result{r, 0.0, {}, circuit_stats(oracle)};
  result.trajectory.push_back(success());
  for (int k = 0; k < r; ++k) {
    state = run(oracle, std::move(state));
    for (int q = 1; q <= width; ++q) apply_gate_inplace(state, Gate::hadamard(q));
    state = run(diffusion, std::move(state));
    for (int q = 1; q <= width; ++q) apply_gate_inplace(state, Gate::hadamard(q));
    result.trajectory.push_back(success());
  }
  result.success_prob = result.trajectory.back();
  return result;
}

Circuit generalized_cnot(const BooleanFunction& condition, Backend backend) {
  const int width = condition.width + 1;
  check_width(width);

  // theta_{(c,b)} = pi h(c) b; on the target-qubit subspace this is
  // diag(1, -1) whenever h holds, and Hadamard conjugation turns that into
  // the flip.
  const Eigen::Index n = Eigen::Index{1} << width;
  Eigen::VectorXd theta = Eigen::VectorXd::Zero(n);
  for (Eigen::Index c = 0; c < (n >> 1); ++c)
    if (condition.table[static_cast<std::size_t>(c)]) theta[(c << 1) | 1] = kPi;

  const NetworkTemplate t = make_template(width, backend);
  const Circuit bound = bind_angles(t, PhaseSpec(width, std::move(theta)));

  Circuit circuit(width);
  circuit.append(Gate::hadamard(width));
  circuit.extend(bound);
  circuit.append(Gate::hadamard(width));
  return circuit;
}

Circuit toffoli(int controls, Backend backend) {
  if (controls < 1)
    throw std::invalid_argument("toffoli: needs at least one control");
  BooleanFunction all_ones = BooleanFunction::constant(controls, false);
  all_ones.table.back() = 1;
  return generalized_cnot(all_ones, backend);
}

}  // namespace qpn
