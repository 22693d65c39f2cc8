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

#include <doctest.h>

#include <complex>
#include <random>

#include "helpers.hpp"
#include "qpn/simulate.hpp"
#include "qpn/synth.hpp"

using namespace qpn;
using Complex = std::complex<double>;
using qpn_test::uniform;

TEST_SUITE_BEGIN("simulate");

TEST_CASE("rz shifts |0> by -phi/2 and |1> by +phi/2") {
  const double phi = 0.8317;
  StateVector s0 = apply_gate(StateVector::basis(BasisIndex(0, 1)), Gate::rz(1, phi));
  StateVector s1 = apply_gate(StateVector::basis(BasisIndex(1, 1)), Gate::rz(1, phi));
  CHECK(std::abs(s0.amps[0] - std::polar(1.0, -phi / 2)) <= 1e-15);
  CHECK(std::abs(s1.amps[1] - std::polar(1.0, phi / 2)) <= 1e-15);
}

TEST_CASE("cnot maps |10> to |11> and matches the 4x4 matrix") {
  StateVector s = apply_gate(StateVector::basis(BasisIndex(0b10, 2)), Gate::cnot(1, 2));
  CHECK(std::abs(s.amps[0b11] - 1.0) <= 1e-15);

  Circuit c(2);
  c.append(Gate::cnot(1, 2));
  const DenseUnitary u = unitary_of(c);
  Eigen::MatrixXcd expected(4, 4);
  expected << 1, 0, 0, 0,
              0, 1, 0, 0,
              0, 0, 0, 1,
              0, 0, 1, 0;
  CHECK((u.entries - expected).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("cns acts as |a,b> -> |a xor b, a> on every basis state") {
  // Oracle: compose the cnot and swap permutation matrices.
  Eigen::Matrix4d cnot = Eigen::Matrix4d::Zero(), swp = Eigen::Matrix4d::Zero();
  cnot(0, 0) = cnot(1, 1) = cnot(3, 2) = cnot(2, 3) = 1.0;
  swp(0, 0) = swp(2, 1) = swp(1, 2) = swp(3, 3) = 1.0;
  const Eigen::Matrix4d expected = swp * cnot;

  Circuit c(2);
  c.append(Gate::cns(1, 2));
  const DenseUnitary u = unitary_of(c);
  CHECK((u.entries.real() - expected).cwiseAbs().maxCoeff() == 0.0);
  CHECK(u.entries.imag().cwiseAbs().maxCoeff() == 0.0);

  for (std::uint32_t x = 0; x < 4; ++x) {
    const int a = static_cast<int>(x >> 1), b = static_cast<int>(x & 1);
    const std::uint32_t image = static_cast<std::uint32_t>(((a ^ b) << 1) | a);
    StateVector s = apply_gate(StateVector::basis(BasisIndex(x, 2)), Gate::cns(1, 2));
    CHECK(std::abs(s.amps[image] - 1.0) == 0.0);
  }
}

TEST_CASE("hadamard and global phase") {
  Circuit c(1);
  c.append(Gate::hadamard(1));
  const DenseUnitary u = unitary_of(c);
  const double s = 0.70710678118654752440;
  Eigen::MatrixXcd expected(2, 2);
  expected << s, s, s, -s;
  CHECK((u.entries - expected).cwiseAbs().maxCoeff() <= 1e-16);

  StateVector sv = StateVector::zero_state(2);
  apply_gate_inplace(sv, Gate::global_phase(1.3));
  CHECK(std::abs(sv.amps[0] - std::polar(1.0, -0.65)) <= 1e-15);
}

TEST_CASE("run applies gates left to right") {
  SUBCASE("empty circuit is the identity") {
    const StateVector s = run(Circuit(2), StateVector::basis(BasisIndex(0b01, 2)));
    CHECK(std::abs(s.amps[0b01] - 1.0) == 0.0);
  }
  SUBCASE("two-qubit network phase on |11>") {
    const double p10 = 0.37, p01 = -1.21, p11 = 2.05;
    Circuit c(2);
    c.append(Gate::rz(1, p10));
    c.append(Gate::rz(2, p01));
    c.append(Gate::cnot(1, 2));
    c.append(Gate::rz(2, p11));
    c.append(Gate::cnot(1, 2));
    const StateVector s = run(c, StateVector::basis(BasisIndex(0b11, 2)));
    // x1 = x2 = 1, x1 xor x2 = 0: phases +p10/2, +p01/2, -p11/2.
    const Complex expected = std::polar(1.0, -(-p10 - p01 + p11) / 2.0);
    CHECK(std::abs(s.amps[0b11] - expected) <= 1e-15);
  }
  SUBCASE("width mismatch throws") {
    CHECK_THROWS_AS(run(Circuit(3), StateVector::zero_state(2)),
                    std::invalid_argument);
  }
}

TEST_CASE("unitary_of basics and cap") {
  const DenseUnitary id = unitary_of(Circuit(2));
  CHECK((id.entries - Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(unitary_of(Circuit(13)), std::invalid_argument);
}

TEST_CASE("distance up to global phase") {
  Circuit c(2);
  c.append(Gate::rz(1, 0.4));
  c.append(Gate::cnot(1, 2));
  c.append(Gate::hadamard(2));
  const DenseUnitary u = unitary_of(c);

  SUBCASE("identical matrices") { CHECK(distance_up_to_global_phase(u, u) <= 1e-15); }
  SUBCASE("negated matrix is a pure global phase") {
    DenseUnitary v(u.width, -u.entries);
    CHECK(distance_up_to_global_phase(u, v) <= 1e-12);
  }
  SUBCASE("one perturbed phase is detected at its own size") {
    DenseUnitary v = DenseUnitary::identity(2);
    DenseUnitary w = DenseUnitary::identity(2);
    w.entries(2, 2) *= std::polar(1.0, 1e-3);
    const double d = distance_up_to_global_phase(w, v);
    CHECK(d >= 3e-4);
    CHECK(d <= 1.5e-3);
  }
  SUBCASE("width mismatch throws") {
    CHECK_THROWS_AS(
        distance_up_to_global_phase(DenseUnitary::identity(1), DenseUnitary::identity(2)),
        std::invalid_argument);
  }
}

TEST_CASE("verify_phase_gate accepts bound networks and rejects corruption") {
  std::mt19937_64 rng(32);
  SUBCASE("two-qubit network at 1e-12") {
    const NetworkTemplate t = compact_two_qubit_template();
    Eigen::VectorXd theta(4);
    for (int i = 0; i < 4; ++i) theta[i] = uniform(rng, -kPi, kPi);
    const PhaseSpec spec(2, theta);
    const Circuit bound = bind_angles(t, spec, true);
    const PhaseGateCheck check = verify_phase_gate(bound, spec, 1e-12);
    CHECK(check.ok);
  }
  SUBCASE("recursive backends at 1e-10 for N = 1..6") {
    for (int n = 1; n <= 6; ++n) {
      for (TwoQubitFlavor flavor : {TwoQubitFlavor::cnot, TwoQubitFlavor::cns}) {
        const NetworkTemplate t = recursive_template(n, flavor);
        for (int rep = 0; rep < 3; ++rep) {
          Eigen::VectorXd theta(Eigen::Index{1} << n);
          for (Eigen::Index i = 0; i < theta.size(); ++i)
            theta[i] = uniform(rng, -kPi, kPi);
          const PhaseSpec spec(n, theta);
          const PhaseGateCheck check = verify_phase_gate(bind_angles(t, spec), spec);
          CHECK(check.ok);
        }
      }
    }
  }
  SUBCASE("a corrupted slot angle is rejected") {
    const NetworkTemplate t = compact_two_qubit_template();
    Eigen::VectorXd theta(4);
    for (int i = 0; i < 4; ++i) theta[i] = uniform(rng, -kPi, kPi);
    const PhaseSpec spec(2, theta);
    Circuit bound = bind_angles(t, spec);
    bound.gates[0].angle += 0.1;
    const PhaseGateCheck check = verify_phase_gate(bound, spec);
    CHECK(!check.ok);
    CHECK(check.max_error >= 0.04);
    CHECK(check.max_error <= 0.11);
  }
  SUBCASE("width mismatch throws") {
    CHECK_THROWS_AS(verify_phase_gate(Circuit(2), PhaseSpec::zero(3)),
                    std::invalid_argument);
  }
}

TEST_CASE("measure_probabilities") {
  CHECK(measure_probabilities(StateVector::zero_state(3))[0] == 1.0);
  StateVector s = StateVector::zero_state(2);
  apply_gate_inplace(s, Gate::hadamard(1));
  apply_gate_inplace(s, Gate::hadamard(2));
  const Eigen::VectorXd p = measure_probabilities(s);
  for (int i = 0; i < 4; ++i) CHECK(p[i] == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(p.sum() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("norm is preserved over long random gate sequences") {
  std::mt19937_64 rng(33);
  StateVector s = StateVector::zero_state(5);
  for (int q = 1; q <= 5; ++q) apply_gate_inplace(s, Gate::hadamard(q));
  const Circuit c = qpn_test::random_circuit(rng, 5, 10'000);
  s = run(c, std::move(s));
  CHECK(std::abs(s.norm() - 1.0) <= 1e-9);
}

TEST_CASE("classical circuits permute basis states exactly") {
  std::mt19937_64 rng(34);
  const Circuit c = qpn_test::random_circuit(rng, 4, 60, /*classical_only=*/true);
  const DenseUnitary u = unitary_of(c);
  for (Eigen::Index j = 0; j < u.entries.cols(); ++j) {
    int ones = 0;
    for (Eigen::Index i = 0; i < u.entries.rows(); ++i) {
      const Complex v = u.entries(i, j);
      const bool is_zero = v == Complex(0.0, 0.0);
      const bool is_one = v == Complex(1.0, 0.0);
      CHECK((is_zero || is_one));
      ones += is_one ? 1 : 0;
    }
    CHECK(ones == 1);
  }
}

TEST_CASE("simulation agrees with the label algebra on all basis states") {
  // Exhaustive: every classical gate kind, every ordered wire pair, every
  // basis input, widths up to 6.
  for (int n = 2; n <= 6; ++n) {
    for (int a = 1; a <= n; ++a) {
      for (int b = 1; b <= n; ++b) {
        if (a == b) continue;
        for (GateKind kind : {GateKind::cnot, GateKind::cns, GateKind::swap}) {
          const Gate g = kind == GateKind::cnot  ? Gate::cnot(a, b)
                         : kind == GateKind::cns ? Gate::cns(a, b)
                                                 : Gate::swap(a, b);
          const auto labels = classical_label_action(g, identity_labels(n));
          for (std::uint32_t x = 0; x < (1u << n); ++x) {
            std::uint32_t image = 0;
            for (int j = 1; j <= n; ++j)
              if (inner_product_mod2(BasisIndex(x, n),
                                     labels[static_cast<std::size_t>(j - 1)]))
                image |= 1u << (n - j);
            StateVector s = apply_gate(StateVector::basis(BasisIndex(x, n)), g);
            CHECK(std::abs(s.amps[image] - 1.0) == 0.0);
          }
        }
      }
    }
  }
}

TEST_CASE("state vector invariants") {
  CHECK_THROWS_AS(StateVector(2, Eigen::VectorXcd::Zero(3)), std::invalid_argument);
  CHECK_THROWS_AS(StateVector::zero_state(21), std::invalid_argument);
  CHECK_THROWS_AS(apply_gate(StateVector::zero_state(2), Gate::rz(3, 0.1)),
                  std::invalid_argument);
}

TEST_SUITE_END();
