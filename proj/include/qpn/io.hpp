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

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "qpn/core.hpp"
#include "qpn/synth.hpp"
#include "qpn/walsh.hpp"

namespace qpn {

/// Malformed input files and streams.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Phase/angle vector file: header "n <N>", then 2^N decimal radian values,
/// one per line, in basis-index order.
PhaseSpec read_phase_file(std::istream& in);
PhaseSpec read_phase_file(const std::string& path);
void write_phase_file(std::ostream& out, const PhaseSpec& spec);

/// Truth table file: header "n <N>", then one line of 2^N characters from
/// {0,1}; position x is f(x).
BooleanFunction read_truth_table_file(std::istream& in);
BooleanFunction read_truth_table_file(const std::string& path);
void write_truth_table_file(std::ostream& out, const BooleanFunction& f);

/// Circuit file: header "qubits <N>", then one gate per line:
///   rz <q> <angle> | cnot <c> <t> | cns <c> <t> | swap <a> <b> |
///   h <q> | gphase <angle>
/// Full-line '#' comments and blank lines are skipped. Angles are printed
/// with 17 significant digits, so canonical files round-trip bit-exactly.
Circuit read_circuit_file(std::istream& in);
Circuit read_circuit_file(const std::string& path);
void write_circuit_file(std::ostream& out, const Circuit& c);
void write_circuit_file(const std::string& path, const Circuit& c);

/// Circuit file of a template skeleton, with slot conditions recorded as
/// comment lines (parsers ignore them).
void write_template_file(std::ostream& out, const NetworkTemplate& t);

std::string format_angle(double value);        // %.17g
std::string format_probability(double value);  // %#.12g

}  // namespace qpn
