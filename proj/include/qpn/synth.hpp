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

#include <string>
#include <vector>

#include "qpn/core.hpp"
#include "qpn/walsh.hpp"

namespace qpn {

/// Which classical two-qubit gate family a construction builds on.
enum class TwoQubitFlavor { cnot, cns };

enum class Backend { recursive_cnot, recursive_cns, gray, optimized };

std::string to_string(TwoQubitFlavor f);
std::string to_string(Backend b);

/// One programmable rotation site: the rz at skeleton position `position`
/// acts on `qubit`, whose label there equals `condition`.
struct RotationSlot {
  std::size_t position;
  int qubit;
  ParityMask condition;
};

using ConditionTrace = std::vector<RotationSlot>;

/// A programmable phase network: a fixed skeleton of classical gates and
/// placeholder rz sites, one per nonzero parity condition. Binding angles
/// to the slots selects the diagonal gate the skeleton realizes.
struct NetworkTemplate {
  Circuit skeleton;  // rz angles are 0.0 placeholders
  std::vector<RotationSlot> slots;
  Backend backend;
  CouplingGraph coupling;

  int width() const { return skeleton.width; }
};

/// Nearest-neighbor construction on a path: the one-qubit network is a
/// single rz; going from N to N+1 wires adds an rz on the new last wire and
/// replaces every rotation of the old last wire by a two-rotation block on
/// the new one. Slot conditions come out as the integers 1, 2, ..., 2^N - 1
/// in order.
NetworkTemplate recursive_template(int width, TwoQubitFlavor flavor);

/// The compact hand-built two-qubit network: rz on each wire, then a
/// cnot-conjugated rz picking up the xor condition. Slot conditions
/// (10, 01, 11); exactly two cnots.
NetworkTemplate compact_two_qubit_template();

/// All-to-all construction: conditions follow the binary-reflected Gray
/// sequence k xor (k >> 1), k = 1 .. 2^N - 1, starting at 1. The rotation
/// for each condition sits on the wire of its most significant bit, and
/// exactly one cnot separates consecutive rotations (2^N - 2 in total).
NetworkTemplate gray_code_template(int width);

/// Replays the classical label algebra through the circuit and records
/// (position, qubit, label) at every rz site. Throws on hadamard, whose
/// action has no label description; global_phase is label-neutral and is
/// skipped.
ConditionTrace trace_conditions(const Circuit& c);

enum class ProgrammabilityClause {
  ok,
  condition_coverage,  // some nonzero mask missing or duplicated
  trace_mismatch,      // declared slot condition differs from the traced label
  final_labels,        // skeleton does not restore the identity assignment
  coupling,            // a two-qubit gate is off the declared coupling graph
};

struct ProgrammabilityReport {
  bool ok = true;
  ProgrammabilityClause clause = ProgrammabilityClause::ok;
  std::string message;
};

/// A template is programmable iff its slots cover every nonzero condition
/// exactly once, the traced labels match the declared slot conditions, the
/// final labels are the identity assignment, and the skeleton respects the
/// declared coupling.
ProgrammabilityReport check_programmable(const NetworkTemplate& t);

/// Programs the template: slot with condition y receives angle phi_y from
/// the Walsh transform of theta. The global knob phi_0 is either emitted as
/// a leading global_phase element or discarded (default), it never becomes
/// a hardware gate.
Circuit bind_angles(const NetworkTemplate& t, const PhaseSpec& theta,
                    bool include_global_phase = false);

}  // namespace qpn
