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

#include <Eigen/Core>
#include <complex>

#include "qpn/core.hpp"
#include "qpn/walsh.hpp"

namespace qpn {

// Dense state vectors stay cheap up to here; unitary extraction is capped
// separately (2^12 x 2^12 complex entries is already 256 MiB).
inline constexpr int kMaxStateWidth = 20;
inline constexpr int kDefaultUnitaryCap = 12;

/// 2^N complex amplitudes, indexed by basis value (x1 most significant).
struct StateVector {
  int width;
  Eigen::VectorXcd amps;

  StateVector(int width, Eigen::VectorXcd amps);

  static StateVector zero_state(int width);       // |0...0>
  static StateVector basis(const BasisIndex& x);  // |x>

  double norm() const { return amps.norm(); }
};

/// 2^N x 2^N matrix, column x = action on basis state |x>.
struct DenseUnitary {
  int width;
  Eigen::MatrixXcd entries;

  DenseUnitary(int width, Eigen::MatrixXcd entries);

  static DenseUnitary identity(int width);
};

void apply_gate_inplace(StateVector& s, const Gate& g);

StateVector apply_gate(StateVector s, const Gate& g);

/// Left-to-right application of the circuit's gates.
StateVector run(const Circuit& c, StateVector s);

DenseUnitary unitary_of(const Circuit& c, int width_cap = kDefaultUnitaryCap);

/// min over unit-modulus alpha of max|U - alpha V|, approximated by anchoring
/// alpha on the largest-magnitude entry of V and refining the phase by a
/// bounded one-dimensional search. Returns 0 iff U = alpha V.
double distance_up_to_global_phase(const DenseUnitary& u, const DenseUnitary& v);

/// diag(exp(-i theta_x)) as a dense matrix.
DenseUnitary diagonal_phase_unitary(const PhaseSpec& spec);

struct PhaseGateCheck {
  bool ok;
  double max_error;
};

/// Accepts iff the circuit's unitary is diag(exp(-i theta_x)) up to global
/// phase, within tol in entrywise max norm (off-diagonal weight included).
PhaseGateCheck verify_phase_gate(const Circuit& c, const PhaseSpec& spec,
                                 double tol = 1e-10,
                                 int width_cap = kDefaultUnitaryCap);

/// Entry x = |amp_x|^2.
Eigen::VectorXd measure_probabilities(const StateVector& s);

}  // namespace qpn
