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

#include "qpn/walsh.hpp"

#include <cmath>

namespace qpn {

namespace {

void check_vector(int width, const Eigen::VectorXd& v, const char* what) {
  check_width(width);
  if (v.size() != (Eigen::Index{1} << width))
    throw std::invalid_argument(std::string(what) + " must have 2^width entries");
  if (!v.allFinite())
    throw std::invalid_argument(std::string(what) + " entries must be finite");
}

}  // namespace

PhaseSpec::PhaseSpec(int width_, Eigen::VectorXd theta_)
    : width(width_), theta(std::move(theta_)) {
  check_vector(width, theta, "phase vector");
}

PhaseSpec PhaseSpec::zero(int width) {
  check_width(width);
  return PhaseSpec(width, Eigen::VectorXd::Zero(Eigen::Index{1} << width));
}

AngleSpec::AngleSpec(int width_, Eigen::VectorXd phi_)
    : width(width_), phi(std::move(phi_)) {
  check_vector(width, phi, "angle vector");
}

AngleSpec AngleSpec::zero(int width) {
  check_width(width);
  return AngleSpec(width, Eigen::VectorXd::Zero(Eigen::Index{1} << width));
}

AngleSpec angles_from_phases(const PhaseSpec& spec) {
  Eigen::VectorXd phi = spec.theta;
  wht_inplace<double>(phi);
  phi *= std::ldexp(1.0, -(spec.width - 1));  // exact power-of-two scale
  return AngleSpec(spec.width, std::move(phi));
}

PhaseSpec phases_from_angles(const AngleSpec& spec) {
  Eigen::VectorXd theta = spec.phi;
  wht_inplace<double>(theta);
  theta *= 0.5;
  return PhaseSpec(spec.width, std::move(theta));
}

PhaseSpec phases_from_boolean(const BooleanFunction& f, double scale) {
  if (!std::isfinite(scale))
    throw std::invalid_argument("phases_from_boolean: scale must be finite");
  const Eigen::Index n = Eigen::Index{1} << f.width;
  Eigen::VectorXd theta(n);
  for (Eigen::Index x = 0; x < n; ++x)
    theta[x] = scale * static_cast<double>(f.table[static_cast<std::size_t>(x)]);
  return PhaseSpec(f.width, std::move(theta));
}

double normalize_angle(double a) {
  if (!std::isfinite(a)) throw std::invalid_argument("cannot normalize a non-finite angle");
  double r = std::remainder(a, 2.0 * kPi);  // (-pi, pi] up to the boundary case
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

}  // namespace qpn
