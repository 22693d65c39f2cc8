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

#include "qpn/core.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qpn {

void check_width(int width) {
  if (width < 1 || width > kMaxWidth)
    throw std::invalid_argument("width must be in [1, " +
                                std::to_string(kMaxWidth) + "], got " +
                                std::to_string(width));
}

namespace {

void check_bits(std::uint32_t bits, int width, const char* what) {
  if (width < 32 && bits >= (1u << width))
    throw std::invalid_argument(std::string(what) + " out of range for width " +
                                std::to_string(width));
}

void check_qubit(int qubit, int width) {
  if (qubit < 1 || qubit > width)
    throw std::invalid_argument("qubit index " + std::to_string(qubit) +
                                " out of range [1, " + std::to_string(width) + "]");
}

std::string binary_string(std::uint32_t bits, int width) {
  std::string s(static_cast<std::size_t>(width), '0');
  for (int j = 0; j < width; ++j)
    if (bits >> (width - 1 - j) & 1u) s[static_cast<std::size_t>(j)] = '1';
  return s;
}

}  // namespace

ParityMask::ParityMask(std::uint32_t bits_, int width_) : bits(bits_), width(width_) {
  check_width(width);
  check_bits(bits, width, "parity mask");
}

ParityMask ParityMask::unit(int qubit, int width) {
  check_width(width);
  check_qubit(qubit, width);
  return ParityMask(1u << (width - qubit), width);
}

int ParityMask::bit(int qubit) const {
  check_qubit(qubit, width);
  return static_cast<int>(bits >> (width - qubit) & 1u);
}

std::string ParityMask::to_binary() const { return binary_string(bits, width); }

ParityMask operator^(const ParityMask& lhs, const ParityMask& rhs) {
  if (lhs.width != rhs.width)
    throw std::invalid_argument("parity mask width mismatch");
  return ParityMask(lhs.bits ^ rhs.bits, lhs.width);
}

BasisIndex::BasisIndex(std::uint32_t bits_, int width_) : bits(bits_), width(width_) {
  check_width(width);
  check_bits(bits, width, "basis index");
}

int BasisIndex::bit(int qubit) const {
  check_qubit(qubit, width);
  return static_cast<int>(bits >> (width - qubit) & 1u);
}

std::string BasisIndex::to_binary() const { return binary_string(bits, width); }

int inner_product_mod2(const BasisIndex& x, const ParityMask& y) {
  if (x.width != y.width)
    throw std::invalid_argument("inner_product_mod2: width mismatch");
  return std::popcount(x.bits & y.bits) & 1;
}

std::string to_string(GateKind k) {
  switch (k) {
    case GateKind::rz: return "rz";
    case GateKind::cnot: return "cnot";
    case GateKind::cns: return "cns";
    case GateKind::swap: return "swap";
    case GateKind::hadamard: return "h";
    case GateKind::global_phase: return "gphase";
  }
  return "?";
}

namespace {

void check_angle(double angle) {
  if (!std::isfinite(angle))
    throw std::invalid_argument("gate angle must be finite");
}

void check_pair(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("qubit indices are 1-based");
  if (a == b)
    throw std::invalid_argument("two-qubit gate needs distinct qubits");
}

}  // namespace

Gate Gate::rz(int qubit, double angle) {
  if (qubit < 1) throw std::invalid_argument("qubit indices are 1-based");
  check_angle(angle);
  return Gate{GateKind::rz, qubit, 0, angle};
}

Gate Gate::cnot(int control, int target) {
  check_pair(control, target);
  return Gate{GateKind::cnot, control, target, 0.0};
}

Gate Gate::cns(int control, int target) {
  check_pair(control, target);
  return Gate{GateKind::cns, control, target, 0.0};
}

Gate Gate::swap(int a, int b) {
  check_pair(a, b);
  return Gate{GateKind::swap, a, b, 0.0};
}

Gate Gate::hadamard(int qubit) {
  if (qubit < 1) throw std::invalid_argument("qubit indices are 1-based");
  return Gate{GateKind::hadamard, qubit, 0, 0.0};
}

Gate Gate::global_phase(double angle) {
  check_angle(angle);
  return Gate{GateKind::global_phase, 0, 0, angle};
}

bool Gate::is_two_qubit() const {
  return kind == GateKind::cnot || kind == GateKind::cns || kind == GateKind::swap;
}

bool Gate::is_classical() const { return is_two_qubit(); }

bool Gate::touches(int qubit) const {
  if (kind == GateKind::global_phase) return false;
  if (is_two_qubit()) return a == qubit || b == qubit;
  return a == qubit;
}

int Gate::max_qubit() const {
  if (kind == GateKind::global_phase) return 0;
  return is_two_qubit() ? std::max(a, b) : a;
}

Circuit::Circuit(int width_) : width(width_) { check_width(width); }

Circuit& Circuit::append(const Gate& g) {
  if (g.max_qubit() > width)
    throw std::invalid_argument("gate touches qubit " +
                                std::to_string(g.max_qubit()) +
                                " beyond circuit width " + std::to_string(width));
  gates.push_back(g);
  return *this;
}

Circuit& Circuit::extend(const Circuit& other) {
  if (other.width != width)
    throw std::invalid_argument("cannot extend with a circuit of different width");
  for (const Gate& g : other.gates) gates.push_back(g);
  return *this;
}

std::string to_string(Coupling c) {
  switch (c) {
    case Coupling::path: return "path";
    case Coupling::ring: return "ring";
    case Coupling::full: return "full";
  }
  return "?";
}

CouplingGraph::CouplingGraph(Coupling kind_, int width_) : kind(kind_), width(width_) {
  check_width(width);
}

bool CouplingGraph::has_edge(int a, int b) const {
  if (a < 1 || b < 1 || a > width || b > width || a == b) return false;
  const int lo = std::min(a, b), hi = std::max(a, b);
  switch (kind) {
    case Coupling::path: return hi - lo == 1;
    case Coupling::ring: return hi - lo == 1 || (lo == 1 && hi == width && width > 2);
    case Coupling::full: return true;
  }
  return false;
}

std::vector<std::pair<int, int>> CouplingGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= width; ++a)
    for (int b = a + 1; b <= width; ++b)
      if (has_edge(a, b)) out.emplace_back(a, b);
  return out;
}

BooleanFunction::BooleanFunction(int width_, std::vector<std::uint8_t> table_)
    : width(width_), table(std::move(table_)) {
  check_width(width);
  if (table.size() != (std::size_t{1} << width))
    throw std::invalid_argument("truth table must have 2^width entries");
  for (std::uint8_t v : table)
    if (v > 1) throw std::invalid_argument("truth table entries must be 0 or 1");
}

BooleanFunction BooleanFunction::constant(int width, bool value) {
  check_width(width);
  return BooleanFunction(width, std::vector<std::uint8_t>(
                                    std::size_t{1} << width, value ? 1 : 0));
}

std::size_t BooleanFunction::ones() const {
  std::size_t n = 0;
  for (std::uint8_t v : table) n += v;
  return n;
}

std::vector<ParityMask> identity_labels(int width) {
  check_width(width);
  std::vector<ParityMask> labels;
  labels.reserve(static_cast<std::size_t>(width));
  for (int j = 1; j <= width; ++j) labels.push_back(ParityMask::unit(j, width));
  return labels;
}

void apply_label_action(const Gate& g, std::vector<ParityMask>& labels) {
  if (!g.is_classical())
    throw std::invalid_argument("gate '" + to_string(g.kind) +
                                "' has no classical label action");
  const std::size_t ia = static_cast<std::size_t>(g.a - 1);
  const std::size_t ib = static_cast<std::size_t>(g.b - 1);
  if (ia >= labels.size() || ib >= labels.size())
    throw std::invalid_argument("label sequence shorter than gate indices");
  switch (g.kind) {
    case GateKind::cnot:
      labels[ib] = labels[ia] ^ labels[ib];
      break;
    case GateKind::swap:
      std::swap(labels[ia], labels[ib]);
      break;
    case GateKind::cns: {
      const ParityMask old_a = labels[ia];
      labels[ia] = old_a ^ labels[ib];
      labels[ib] = old_a;
      break;
    }
    default:
      break;
  }
}

std::vector<ParityMask> classical_label_action(const Gate& g,
                                               std::vector<ParityMask> labels) {
  apply_label_action(g, labels);
  return labels;
}

ValidityReport validate_circuit(const Circuit& c, const CouplingGraph& g) {
  if (c.width != g.width)
    throw std::invalid_argument("validate_circuit: circuit/coupling width mismatch");
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& gate = c.gates[i];
    if (gate.max_qubit() > c.width)
      return {false, i, "gate " + std::to_string(i) + " touches qubit " +
                            std::to_string(gate.max_qubit()) + " beyond width"};
    if (gate.is_two_qubit() && !g.has_edge(gate.a, gate.b))
      return {false, i,
              "gate " + std::to_string(i) + " (" + to_string(gate.kind) + " " +
                  std::to_string(gate.a) + "," + std::to_string(gate.b) +
                  ") is not an edge of the " + to_string(g.kind) + " coupling"};
  }
  return {};
}

}  // namespace qpn
