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

#include "qpn/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qpn {

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return in;
}

int parse_header_int(std::istream& in, const std::string& keyword,
                     const char* what) {
  std::string line;
  if (!std::getline(in, line))
    throw ParseError(std::string(what) + ": missing '" + keyword + "' header");
  std::istringstream ls(line);
  std::string key;
  long long value = 0;
  if (!(ls >> key >> value) || key != keyword)
    throw ParseError(std::string(what) + ": expected '" + keyword +
                     " <N>', got '" + line + "'");
  std::string trailing;
  if (ls >> trailing)
    throw ParseError(std::string(what) + ": trailing tokens in header");
  if (value < 1 || value > kMaxWidth)
    throw ParseError(std::string(what) + ": width " + std::to_string(value) +
                     " out of range");
  return static_cast<int>(value);
}

double parse_double(const std::string& token, const char* what) {
  std::size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &consumed);
  } catch (const std::exception&) {
    throw ParseError(std::string(what) + ": not a number: '" + token + "'");
  }
  if (consumed != token.size())
    throw ParseError(std::string(what) + ": trailing characters in '" + token + "'");
  if (!std::isfinite(value))
    throw ParseError(std::string(what) + ": value must be finite");
  return value;
}

}  // namespace

std::string format_angle(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string format_probability(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%#.12g", value);
  return buf;
}

PhaseSpec read_phase_file(std::istream& in) {
  const int width = parse_header_int(in, "n", "phase file");
  const Eigen::Index count = Eigen::Index{1} << width;
  Eigen::VectorXd values(count);
  std::string line;
  for (Eigen::Index i = 0; i < count; ++i) {
    if (!std::getline(in, line))
      throw ParseError("phase file: expected " + std::to_string(count) +
                       " values, got " + std::to_string(i));
    values[i] = parse_double(line, "phase file");
  }
  if (std::getline(in, line) && !line.empty())
    throw ParseError("phase file: trailing content after " +
                     std::to_string(count) + " values");
  return PhaseSpec(width, std::move(values));
}

PhaseSpec read_phase_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_phase_file(in);
}

void write_phase_file(std::ostream& out, const PhaseSpec& spec) {
  out << "n " << spec.width << "\n";
  for (Eigen::Index i = 0; i < spec.theta.size(); ++i)
    out << format_angle(spec.theta[i]) << "\n";
}

BooleanFunction read_truth_table_file(std::istream& in) {
  const int width = parse_header_int(in, "n", "truth table file");
  const std::size_t count = std::size_t{1} << width;
  std::string line;
  if (!std::getline(in, line))
    throw ParseError("truth table file: missing value line");
  if (line.size() != count)
    throw ParseError("truth table file: expected " + std::to_string(count) +
                     " characters, got " + std::to_string(line.size()));
  std::vector<std::uint8_t> table(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (line[i] != '0' && line[i] != '1')
      throw ParseError("truth table file: invalid character '" +
                       std::string(1, line[i]) + "'");
    table[i] = static_cast<std::uint8_t>(line[i] - '0');
  }
  if (std::getline(in, line) && !line.empty())
    throw ParseError("truth table file: trailing content");
  return BooleanFunction(width, std::move(table));
}

BooleanFunction read_truth_table_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_truth_table_file(in);
}

void write_truth_table_file(std::ostream& out, const BooleanFunction& f) {
  out << "n " << f.width << "\n";
  for (std::uint8_t v : f.table) out << static_cast<char>('0' + v);
  out << "\n";
}

namespace {

bool skippable(const std::string& line) {
  for (char ch : line) {
    if (ch == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;  // blank
}

int parse_qubit(std::istringstream& ls, int width, const std::string& line) {
  long long q = 0;
  if (!(ls >> q) || q < 1 || q > width)
    throw ParseError("circuit file: bad qubit index in '" + line + "'");
  return static_cast<int>(q);
}

}  // namespace

Circuit read_circuit_file(std::istream& in) {
  std::string line;
  int width = -1;
  while (std::getline(in, line)) {
    if (skippable(line)) continue;
    std::istringstream ls(line);
    std::string key;
    long long value = 0;
    if (!(ls >> key >> value) || key != "qubits")
      throw ParseError("circuit file: expected 'qubits <N>', got '" + line + "'");
    if (value < 1 || value > kMaxWidth)
      throw ParseError("circuit file: width " + std::to_string(value) +
                       " out of range");
    width = static_cast<int>(value);
    break;
  }
  if (width < 0) throw ParseError("circuit file: missing 'qubits <N>' header");

  Circuit c(width);
  while (std::getline(in, line)) {
    if (skippable(line)) continue;
    std::istringstream ls(line);
    std::string op;
    ls >> op;
    try {
      if (op == "rz") {
        const int q = parse_qubit(ls, width, line);
        std::string angle;
        if (!(ls >> angle)) throw ParseError("circuit file: rz needs an angle");
        c.append(Gate::rz(q, parse_double(angle, "circuit file")));
      } else if (op == "cnot" || op == "cns" || op == "swap") {
        const int a = parse_qubit(ls, width, line);
        const int b = parse_qubit(ls, width, line);
        if (op == "cnot") c.append(Gate::cnot(a, b));
        else if (op == "cns") c.append(Gate::cns(a, b));
        else c.append(Gate::swap(a, b));
      } else if (op == "h") {
        c.append(Gate::hadamard(parse_qubit(ls, width, line)));
      } else if (op == "gphase") {
        std::string angle;
        if (!(ls >> angle)) throw ParseError("circuit file: gphase needs an angle");
        c.append(Gate::global_phase(parse_double(angle, "circuit file")));
      } else {
        throw ParseError("circuit file: unknown gate '" + op + "'");
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError("circuit file: " + std::string(e.what()) + " in '" + line + "'");
    }
    std::string trailing;
    if (ls >> trailing)
      throw ParseError("circuit file: trailing tokens in '" + line + "'");
  }
  return c;
}

Circuit read_circuit_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_circuit_file(in);
}

namespace {

void write_gate_line(std::ostream& out, const Gate& g) {
  switch (g.kind) {
    case GateKind::rz:
      out << "rz " << g.a << " " << format_angle(g.angle);
      break;
    case GateKind::cnot:
    case GateKind::cns:
    case GateKind::swap:
      out << to_string(g.kind) << " " << g.a << " " << g.b;
      break;
    case GateKind::hadamard:
      out << "h " << g.a;
      break;
    case GateKind::global_phase:
      out << "gphase " << format_angle(g.angle);
      break;
  }
}

}  // namespace

void write_circuit_file(std::ostream& out, const Circuit& c) {
  out << "qubits " << c.width << "\n";
  for (const Gate& g : c.gates) {
    write_gate_line(out, g);
    out << "\n";
  }
}

void write_circuit_file(const std::string& path, const Circuit& c) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  write_circuit_file(out, c);
}

void write_template_file(std::ostream& out, const NetworkTemplate& t) {
  out << "# template backend=" << to_string(t.backend)
      << " coupling=" << to_string(t.coupling.kind) << "\n";
  for (const RotationSlot& s : t.slots)
    out << "# slot position=" << s.position << " qubit=" << s.qubit
        << " condition=" << s.condition.to_binary() << "\n";
  write_circuit_file(out, t.skeleton);
}

}  // namespace qpn
