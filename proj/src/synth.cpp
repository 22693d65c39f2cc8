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

#include "qpn/synth.hpp"

#include <bit>
#include <stdexcept>

namespace qpn {

std::string to_string(TwoQubitFlavor f) {
  return f == TwoQubitFlavor::cnot ? "cnot" : "cns";
}

std::string to_string(Backend b) {
  switch (b) {
    case Backend::recursive_cnot: return "recursive-cnot";
    case Backend::recursive_cns: return "recursive-cns";
    case Backend::gray: return "gray";
    case Backend::optimized: return "optimized";
  }
  return "?";
}

namespace {

std::vector<RotationSlot> slots_from_trace(const Circuit& skeleton) {
  return trace_conditions(skeleton);
}

NetworkTemplate finish_template(Circuit skeleton, Backend backend,
                                CouplingGraph coupling) {
  std::vector<RotationSlot> slots = slots_from_trace(skeleton);
  return NetworkTemplate{std::move(skeleton), std::move(slots), backend, coupling};
}

}  // namespace

NetworkTemplate recursive_template(int width, TwoQubitFlavor flavor) {
  check_width(width);

  // Invariant maintained by the extension step: the n-wire circuit has all
  // rotations on wire n, conditions 1 .. 2^n - 1 in order, and restores the
  // identity label assignment.
  Circuit circuit(1);
  circuit.append(Gate::rz(1, 0.0));

  for (int n = 1; n < width; ++n) {
    Circuit next(n + 1);
    // The new last wire contributes the condition x_{n+1} alone, which is
    // the integer 1; it must come first.
    next.append(Gate::rz(n + 1, 0.0));
    for (const Gate& g : circuit.gates) {
      if (g.kind != GateKind::rz) {
        next.append(g);
        continue;
      }
      // Replace the rotation with condition v on wire n by rotations with
      // conditions 2v and 2v+1 on wire n+1, then undo the label shuffle so
      // the rest of the old circuit is unaffected.
      if (flavor == TwoQubitFlavor::cnot) {
        next.append(Gate::swap(n, n + 1));      // wire n+1 now carries v0 = 2v
        next.append(Gate::rz(n + 1, 0.0));
        next.append(Gate::cnot(n, n + 1));      // 2v xor e_{n+1} = 2v + 1
        next.append(Gate::rz(n + 1, 0.0));
        next.append(Gate::cnot(n, n + 1));
        next.append(Gate::swap(n, n + 1));
      } else {
        // cns cycles (L_n, L_{n+1}) with period three, which makes the
        // replacement three gates instead of four.
        next.append(Gate::cns(n, n + 1));       // wire n+1 carries 2v
        next.append(Gate::rz(n + 1, 0.0));
        next.append(Gate::cns(n, n + 1));       // wire n+1 carries 2v + 1
        next.append(Gate::rz(n + 1, 0.0));
        next.append(Gate::cns(n, n + 1));       // back to the pre-block labels
      }
    }
    circuit = std::move(next);
  }

  const Backend backend = flavor == TwoQubitFlavor::cnot
                              ? Backend::recursive_cnot
                              : Backend::recursive_cns;
  return finish_template(std::move(circuit), backend,
                         CouplingGraph(Coupling::path, width));
}

NetworkTemplate compact_two_qubit_template() {
  Circuit circuit(2);
  circuit.append(Gate::rz(1, 0.0));   // condition 10
  circuit.append(Gate::rz(2, 0.0));   // condition 01
  circuit.append(Gate::cnot(1, 2));   // wire 2 carries x1 xor x2
  circuit.append(Gate::rz(2, 0.0));   // condition 11
  circuit.append(Gate::cnot(1, 2));   // restore
  return finish_template(std::move(circuit), Backend::recursive_cnot,
                         CouplingGraph(Coupling::path, 2));
}

NetworkTemplate gray_code_template(int width) {
  check_width(width);
  Circuit circuit(width);

  // Walk y_k = k xor (k >> 1) over the nonzero masks. The rotation for y_k
  // goes on the wire of its most significant bit; that wire accumulates the
  // condition, every other involved wire still carries its own basis label,
  // so each step costs exactly one cnot. The accumulator drains back to its
  // own basis label just before the walk promotes the next wire, which is
  // why no explicit fix-up is needed.
  std::vector<ParityMask> labels = identity_labels(width);
  auto wire_of_bit = [width](std::uint32_t single_bit) {
    return width - std::countr_zero(single_bit);
  };

  const std::uint32_t count = 1u << width;
  for (std::uint32_t k = 1; k < count; ++k) {
    const std::uint32_t y = k ^ (k >> 1);
    const int wire = wire_of_bit(std::uint32_t{1}
                                 << (31 - std::countl_zero(y)));
    const std::uint32_t need = y ^ labels[static_cast<std::size_t>(wire - 1)].bits;
    if (need != 0) {
      if (std::popcount(need) != 1)
        throw std::logic_error("gray walk lost its single-toggle invariant");
      const int control = wire_of_bit(need);
      const Gate g = Gate::cnot(control, wire);
      circuit.append(g);
      apply_label_action(g, labels);
    }
    circuit.append(Gate::rz(wire, 0.0));
  }

  return finish_template(std::move(circuit), Backend::gray,
                         CouplingGraph(Coupling::full, width));
}

ConditionTrace trace_conditions(const Circuit& c) {
  std::vector<ParityMask> labels = identity_labels(c.width);
  ConditionTrace trace;
  for (std::size_t pos = 0; pos < c.gates.size(); ++pos) {
    const Gate& g = c.gates[pos];
    switch (g.kind) {
      case GateKind::rz:
        trace.push_back({pos, g.a, labels[static_cast<std::size_t>(g.a - 1)]});
        break;
      case GateKind::hadamard:
        throw std::invalid_argument(
            "trace_conditions: labels are undefined past a hadamard");
      case GateKind::global_phase:
        break;  // label-neutral
      default:
        apply_label_action(g, labels);
        break;
    }
  }
  return trace;
}

ProgrammabilityReport check_programmable(const NetworkTemplate& t) {
  const int n = t.width();
  const std::size_t expected = (std::size_t{1} << n) - 1;

  std::vector<int> seen(expected + 1, 0);
  for (const RotationSlot& s : t.slots) {
    if (s.condition.is_zero())
      return {false, ProgrammabilityClause::condition_coverage,
              "slot with zero condition is not programmable"};
    seen[s.condition.bits] += 1;
  }
  if (t.slots.size() != expected)
    return {false, ProgrammabilityClause::condition_coverage,
            "expected " + std::to_string(expected) + " slots, found " +
                std::to_string(t.slots.size())};
  for (std::size_t y = 1; y <= expected; ++y)
    if (seen[y] != 1)
      return {false, ProgrammabilityClause::condition_coverage,
              "condition " + ParityMask(static_cast<std::uint32_t>(y), n).to_binary() +
                  (seen[y] == 0 ? " missing" : " duplicated")};

  ConditionTrace trace;
  try {
    trace = trace_conditions(t.skeleton);
  } catch (const std::exception& e) {
    return {false, ProgrammabilityClause::trace_mismatch, e.what()};
  }
  if (trace.size() != t.slots.size())
    return {false, ProgrammabilityClause::trace_mismatch,
            "skeleton has " + std::to_string(trace.size()) +
                " rz sites but the template declares " +
                std::to_string(t.slots.size())};
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const RotationSlot& declared = t.slots[i];
    const RotationSlot& traced = trace[i];
    if (declared.position != traced.position || declared.qubit != traced.qubit ||
        !(declared.condition == traced.condition))
      return {false, ProgrammabilityClause::trace_mismatch,
              "slot " + std::to_string(i) + " declares condition " +
                  declared.condition.to_binary() + " but the trace gives " +
                  traced.condition.to_binary()};
  }

  std::vector<ParityMask> labels = identity_labels(n);
  for (const Gate& g : t.skeleton.gates)
    if (g.is_classical()) apply_label_action(g, labels);
  for (int j = 1; j <= n; ++j)
    if (!(labels[static_cast<std::size_t>(j - 1)] == ParityMask::unit(j, n)))
      return {false, ProgrammabilityClause::final_labels,
              "wire " + std::to_string(j) + " ends with label " +
                  labels[static_cast<std::size_t>(j - 1)].to_binary()};

  const ValidityReport validity = validate_circuit(t.skeleton, t.coupling);
  if (!validity.ok)
    return {false, ProgrammabilityClause::coupling, validity.message};

  return {};
}

Circuit bind_angles(const NetworkTemplate& t, const PhaseSpec& theta,
                    bool include_global_phase) {
  if (t.width() != theta.width)
    throw std::invalid_argument("bind_angles: template/phase width mismatch");
  const ProgrammabilityReport report = check_programmable(t);
  if (!report.ok)
    throw std::invalid_argument("bind_angles: template is not programmable: " +
                                report.message);

  const AngleSpec angles = angles_from_phases(theta);
  std::vector<Gate> gates = t.skeleton.gates;
  for (const RotationSlot& s : t.slots)
    gates[s.position].angle = angles.phi[static_cast<Eigen::Index>(s.condition.bits)];

  Circuit bound(t.width());
  if (include_global_phase) bound.append(Gate::global_phase(angles.phi[0]));
  for (const Gate& g : gates) bound.append(g);
  return bound;
}

}  // namespace qpn
