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
#include <stdexcept>

#include "qpn/core.hpp"

namespace qpn {

inline constexpr double kPi = 3.14159265358979323846;

inline bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

/// In-place unnormalized Walsh-Hadamard transform,
///   v'[x] = sum_y (-1)^{popcount(x & y)} v[y].
/// Iterative butterfly with ascending stride; the summation order is fixed,
/// so results are bit-identical across runs. Applying it twice multiplies
/// the input by its length.
template <typename Scalar>
void wht_inplace(Eigen::Ref<Eigen::Vector<Scalar, Eigen::Dynamic>> v) {
  const Eigen::Index n = v.size();
  if (!is_power_of_two(n))
    throw std::invalid_argument("wht_inplace: length must be a power of two");
  for (Eigen::Index h = 1; h < n; h <<= 1) {
    for (Eigen::Index i = 0; i < n; i += h << 1) {
      for (Eigen::Index j = i; j < i + h; ++j) {
        const Scalar a = v[j];
        const Scalar b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
    }
  }
}

/// Out-of-place convenience wrapper around wht_inplace.
template <typename Derived>
Eigen::Vector<typename Derived::Scalar, Eigen::Dynamic> wht(
    const Eigen::MatrixBase<Derived>& v) {
  Eigen::Vector<typename Derived::Scalar, Eigen::Dynamic> out = v;
  wht_inplace<typename Derived::Scalar>(out);
  return out;
}

/// Target phases theta_x of the diagonal gate |x> -> exp(-i theta_x)|x>,
/// indexed by basis value x.
struct PhaseSpec {
  int width;
  Eigen::VectorXd theta;

  PhaseSpec(int width, Eigen::VectorXd theta);
  static PhaseSpec zero(int width);
};

/// Rotation angles phi_y, one per parity condition y. Entry y = 0 is the
/// global-phase knob; the remaining 2^N - 1 entries program the network.
struct AngleSpec {
  int width;
  Eigen::VectorXd phi;

  AngleSpec(int width, Eigen::VectorXd phi);
  static AngleSpec zero(int width);
};

/// phi = H theta / 2^{N-1}. Entries are left unreduced (no mod 2 pi).
AngleSpec angles_from_phases(const PhaseSpec& spec);

/// theta_x = (1/2) sum_y (-1)^{x.y} phi_y.
PhaseSpec phases_from_angles(const AngleSpec& spec);

/// theta_x = scale * f(x); scale defaults to pi, the oracle convention.
PhaseSpec phases_from_boolean(const BooleanFunction& f, double scale = kPi);

/// Reduce an angle to (-pi, pi]. Serialization helper only; the transform
/// operations above never reduce.
double normalize_angle(double a);

}  // namespace qpn
