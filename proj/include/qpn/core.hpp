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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qpn {

// Widths beyond this make the dense index arithmetic pointless anyway.
inline constexpr int kMaxWidth = 24;

void check_width(int width);

/// Parity mask y naming an XOR control condition over N qubit lines.
///
/// Bit convention used everywhere in this library: qubit 1 is the most
/// significant bit, so the bit for qubit j is 1 << (width - j) and the
/// integer value of the mask reads as the binary string y1 y2 ... yN.
struct ParityMask {
  std::uint32_t bits;
  int width;

  ParityMask(std::uint32_t bits, int width);

  static ParityMask zero(int width) { return ParityMask(0u, width); }
  /// Basis vector e_qubit (the condition "qubit j alone").
  static ParityMask unit(int qubit, int width);

  int bit(int qubit) const;
  bool is_zero() const { return bits == 0; }
  std::string to_binary() const;

  friend bool operator==(const ParityMask&, const ParityMask&) = default;
};

ParityMask operator^(const ParityMask& lhs, const ParityMask& rhs);

/// Computational-basis label |x1 ... xN>, same bit convention as ParityMask.
struct BasisIndex {
  std::uint32_t bits;
  int width;

  BasisIndex(std::uint32_t bits, int width);

  int bit(int qubit) const;
  std::string to_binary() const;

  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
};

/// Inner product modulo two, x1*y1 xor ... xor xN*yN.
int inner_product_mod2(const BasisIndex& x, const ParityMask& y);

enum class GateKind { rz, cnot, cns, swap, hadamard, global_phase };

std::string to_string(GateKind k);

/// One circuit element. Qubit indices are 1-based.
///
/// cns is fixed as "cnot(a->b) then swap(a,b)", i.e. the classical map
/// |x_a, x_b> -> |x_a xor x_b, x_a>.
/// global_phase(angle) multiplies every amplitude by exp(-i*angle/2), the
/// same half-angle convention as rz.
struct Gate {
  GateKind kind;
  int a;         // qubit for rz/hadamard, control for cnot/cns, first wire for swap
  int b;         // target / second wire; 0 when the gate has no second wire
  double angle;  // rz and global_phase only

  static Gate rz(int qubit, double angle);
  static Gate cnot(int control, int target);
  static Gate cns(int control, int target);
  static Gate swap(int a, int b);
  static Gate hadamard(int qubit);
  static Gate global_phase(double angle);

  bool is_two_qubit() const;
  bool is_classical() const;  // cnot, cns or swap
  bool touches(int qubit) const;
  int max_qubit() const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// An ordered gate list over a fixed number of wires. append() bounds-checks
/// so a constructed circuit always satisfies the index invariants.
struct Circuit {
  int width;
  std::vector<Gate> gates;

  explicit Circuit(int width);

  Circuit& append(const Gate& g);
  Circuit& extend(const Circuit& other);
  std::size_t size() const { return gates.size(); }
};

enum class Coupling { path, ring, full };

std::string to_string(Coupling c);

/// Which wire pairs admit two-qubit gates.
struct CouplingGraph {
  Coupling kind;
  int width;

  CouplingGraph(Coupling kind, int width);

  bool has_edge(int a, int b) const;
  /// Edges as (a, b) with a < b, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;
};

/// Truth table of f: {0,1}^N -> {0,1}; entry x is f(x) with the usual
/// x1-most-significant indexing.
struct BooleanFunction {
  int width;
  std::vector<std::uint8_t> table;

  BooleanFunction(int width, std::vector<std::uint8_t> table);

  static BooleanFunction constant(int width, bool value);

  std::uint8_t value(std::uint32_t x) const { return table.at(x); }
  std::size_t ones() const;
};

/// The identity label assignment: wire j carries e_j.
std::vector<ParityMask> identity_labels(int width);

/// Label transport of a classical gate. Wire labels are GF(2)-linear
/// functions of the circuit inputs, tracked as parity masks:
///   cnot(a->b): L_b <- L_a xor L_b
///   swap(a,b):  exchange L_a, L_b
///   cns(a->b):  (L_a, L_b) <- (L_a xor L_b, L_a)
/// Throws for gates without a classical label action (rz, hadamard,
/// global_phase).
std::vector<ParityMask> classical_label_action(const Gate& g,
                                               std::vector<ParityMask> labels);

/// In-place variant of classical_label_action.
void apply_label_action(const Gate& g, std::vector<ParityMask>& labels);

struct ValidityReport {
  bool ok = true;
  std::size_t gate_index = 0;  // first offending gate when !ok
  std::string message;
};

/// Accepts iff all gate indices are in range and every two-qubit gate acts
/// on an edge of g. Never throws for in-range widths; failures are reported.
ValidityReport validate_circuit(const Circuit& c, const CouplingGraph& g);

}  // namespace qpn
