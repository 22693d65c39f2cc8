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

#include "qpn/simulate.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace qpn {

using Complex = std::complex<double>;

namespace {

void check_state_width(int width) {
  check_width(width);
  if (width > kMaxStateWidth)
    throw std::invalid_argument("state vector width capped at " +
                                std::to_string(kMaxStateWidth));
}

// Amplitude-index bit of 1-based qubit q: qubit 1 is the most significant.
inline Eigen::Index qubit_mask(int width, int q) {
  return Eigen::Index{1} << (width - q);
}

}  // namespace

StateVector::StateVector(int width_, Eigen::VectorXcd amps_)
    : width(width_), amps(std::move(amps_)) {
  check_state_width(width);
  if (amps.size() != (Eigen::Index{1} << width))
    throw std::invalid_argument("state vector must have 2^width amplitudes");
}

StateVector StateVector::zero_state(int width) {
  check_state_width(width);
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(Eigen::Index{1} << width);
  amps[0] = Complex(1.0, 0.0);
  return StateVector(width, std::move(amps));
}

StateVector StateVector::basis(const BasisIndex& x) {
  check_state_width(x.width);
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(Eigen::Index{1} << x.width);
  amps[static_cast<Eigen::Index>(x.bits)] = Complex(1.0, 0.0);
  return StateVector(x.width, std::move(amps));
}

DenseUnitary::DenseUnitary(int width_, Eigen::MatrixXcd entries_)
    : width(width_), entries(std::move(entries_)) {
  check_width(width);
  const Eigen::Index n = Eigen::Index{1} << width;
  if (entries.rows() != n || entries.cols() != n)
    throw std::invalid_argument("unitary must be 2^width x 2^width");
}

DenseUnitary DenseUnitary::identity(int width) {
  check_width(width);
  const Eigen::Index n = Eigen::Index{1} << width;
  return DenseUnitary(width, Eigen::MatrixXcd::Identity(n, n));
}

namespace {

void apply_rz(StateVector& s, int q, double angle) {
  const Eigen::Index mask = qubit_mask(s.width, q);
  const Complex f0 = std::polar(1.0, -angle / 2.0);
  const Complex f1 = std::polar(1.0, angle / 2.0);
  const Eigen::Index n = s.amps.size();
  for (Eigen::Index i = 0; i < n; ++i) s.amps[i] *= (i & mask) ? f1 : f0;
}

void apply_hadamard(StateVector& s, int q) {
  const Eigen::Index mask = qubit_mask(s.width, q);
  const double inv_sqrt2 = 0.70710678118654752440;
  const Eigen::Index n = s.amps.size();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (i & mask) continue;
    const Complex a = s.amps[i];
    const Complex b = s.amps[i | mask];
    s.amps[i] = (a + b) * inv_sqrt2;
    s.amps[i | mask] = (a - b) * inv_sqrt2;
  }
}

// |control, target> -> |control, target xor control>: a pure permutation,
// applied as exact element swaps.
void apply_cnot(StateVector& s, int control, int target) {
  const Eigen::Index cm = qubit_mask(s.width, control);
  const Eigen::Index tm = qubit_mask(s.width, target);
  const Eigen::Index n = s.amps.size();
  for (Eigen::Index i = 0; i < n; ++i)
    if ((i & cm) && !(i & tm)) std::swap(s.amps[i], s.amps[i | tm]);
}

void apply_swap(StateVector& s, int a, int b) {
  const Eigen::Index am = qubit_mask(s.width, a);
  const Eigen::Index bm = qubit_mask(s.width, b);
  const Eigen::Index n = s.amps.size();
  for (Eigen::Index i = 0; i < n; ++i)
    if ((i & am) && !(i & bm)) std::swap(s.amps[i], s.amps[i ^ am ^ bm]);
}

}  // namespace

void apply_gate_inplace(StateVector& s, const Gate& g) {
  if (g.max_qubit() > s.width)
    throw std::invalid_argument("gate index out of range for state width");
  switch (g.kind) {
    case GateKind::rz:
      apply_rz(s, g.a, g.angle);
      break;
    case GateKind::hadamard:
      apply_hadamard(s, g.a);
      break;
    case GateKind::cnot:
      apply_cnot(s, g.a, g.b);
      break;
    case GateKind::swap:
      apply_swap(s, g.a, g.b);
      break;
    case GateKind::cns:
      apply_cnot(s, g.a, g.b);
      apply_swap(s, g.a, g.b);
      break;
    case GateKind::global_phase:
      s.amps *= std::polar(1.0, -g.angle / 2.0);
      break;
  }
}

StateVector apply_gate(StateVector s, const Gate& g) {
  apply_gate_inplace(s, g);
  return s;
}

StateVector run(const Circuit& c, StateVector s) {
  if (c.width != s.width)
    throw std::invalid_argument("run: circuit/state width mismatch");
  for (const Gate& g : c.gates) apply_gate_inplace(s, g);
  return s;
}

DenseUnitary unitary_of(const Circuit& c, int width_cap) {
  if (c.width > width_cap)
    throw std::invalid_argument("unitary extraction capped at width " +
                                std::to_string(width_cap));
  const Eigen::Index n = Eigen::Index{1} << c.width;
  Eigen::MatrixXcd m(n, n);
  StateVector column(c.width, Eigen::VectorXcd::Zero(n));
  for (Eigen::Index x = 0; x < n; ++x) {
    column.amps.setZero();
    column.amps[x] = Complex(1.0, 0.0);
    for (const Gate& g : c.gates) apply_gate_inplace(column, g);
    m.col(x) = column.amps;
  }
  return DenseUnitary(c.width, std::move(m));
}

namespace {

double max_abs_diff(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v,
                    Complex alpha) {
  double worst = 0.0;
  for (Eigen::Index j = 0; j < u.cols(); ++j)
    for (Eigen::Index i = 0; i < u.rows(); ++i)
      worst = std::max(worst, std::abs(u(i, j) - alpha * v(i, j)));
  return worst;
}

}  // namespace

double distance_up_to_global_phase(const DenseUnitary& u, const DenseUnitary& v) {
  if (u.width != v.width)
    throw std::invalid_argument("distance_up_to_global_phase: width mismatch");
  Eigen::Index ri = 0, rj = 0;
  double best_mag = -1.0;
  for (Eigen::Index j = 0; j < v.entries.cols(); ++j)
    for (Eigen::Index i = 0; i < v.entries.rows(); ++i)
      if (std::abs(v.entries(i, j)) > best_mag) {
        best_mag = std::abs(v.entries(i, j));
        ri = i;
        rj = j;
      }
  Complex alpha(1.0, 0.0);
  if (best_mag > 0.0) {
    const Complex ratio = u.entries(ri, rj) / v.entries(ri, rj);
    if (std::abs(ratio) > 0.0) alpha = ratio / std::abs(ratio);
  }
  double best = max_abs_diff(u.entries, v.entries, alpha);

  // Golden-section polish of the phase around the anchor. The anchor alone
  // is already correct up to a factor ~2; the polish tightens it and never
  // increases the reported distance.
  double lo = std::arg(alpha) - 0.5;
  double hi = std::arg(alpha) + 0.5;
  const double gr = 0.61803398874989485;
  double x1 = hi - gr * (hi - lo);
  double x2 = lo + gr * (hi - lo);
  double f1 = max_abs_diff(u.entries, v.entries, std::polar(1.0, x1));
  double f2 = max_abs_diff(u.entries, v.entries, std::polar(1.0, x2));
  for (int iter = 0; iter < 70; ++iter) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = max_abs_diff(u.entries, v.entries, std::polar(1.0, x1));
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = max_abs_diff(u.entries, v.entries, std::polar(1.0, x2));
    }
  }
  return std::min(best, std::min(f1, f2));
}

DenseUnitary diagonal_phase_unitary(const PhaseSpec& spec) {
  const Eigen::Index n = Eigen::Index{1} << spec.width;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index x = 0; x < n; ++x) m(x, x) = std::polar(1.0, -spec.theta[x]);
  return DenseUnitary(spec.width, std::move(m));
}

PhaseGateCheck verify_phase_gate(const Circuit& c, const PhaseSpec& spec,
                                 double tol, int width_cap) {
  if (c.width != spec.width)
    throw std::invalid_argument("verify_phase_gate: circuit/phase width mismatch");
  const DenseUnitary u = unitary_of(c, width_cap);
  const DenseUnitary target = diagonal_phase_unitary(spec);
  const double err = distance_up_to_global_phase(u, target);
  return {err <= tol, err};
}

Eigen::VectorXd measure_probabilities(const StateVector& s) {
  return s.amps.cwiseAbs2();
}

}  // namespace qpn
