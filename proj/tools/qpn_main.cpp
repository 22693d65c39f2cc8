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

// Command-line front end. Exit codes: 0 success / verified, 1 semantic
// failure (verification or classification), 2 malformed input or usage.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qpn/algorithms.hpp"
#include "qpn/io.hpp"
#include "qpn/optimize.hpp"
#include "qpn/simulate.hpp"
#include "qpn/synth.hpp"
#include "qpn/walsh.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

void print_stats(const qpn::CircuitStats& s) {
  std::cout << "rotations: " << s.rotations << "\n"
            << "cnot: " << s.cnot << "\n"
            << "cns: " << s.cns << "\n"
            << "swap: " << s.swap << "\n"
            << "h: " << s.hadamard << "\n"
            << "gphase: " << s.global_phase << "\n"
            << "two_qubit_gates: " << s.two_qubit << "\n"
            << "gates: " << s.total << "\n"
            << "depth: " << s.depth << "\n"
            << "two_qubit_blocks: " << s.two_qubit_blocks << "\n";
}

qpn::Coupling coupling_from_string(const std::string& name) {
  if (name == "path") return qpn::Coupling::path;
  if (name == "ring") return qpn::Coupling::ring;
  if (name == "full") return qpn::Coupling::full;
  throw std::invalid_argument("unknown coupling '" + name + "'");
}

std::string default_coupling_for(qpn::Backend backend) {
  return backend == qpn::Backend::gray ? "full" : "path";
}

// gray needs all-to-all cnots; the recursive constructions are built for a
// chain and also fit its closure into a ring.
void check_backend_coupling(qpn::Backend backend, qpn::Coupling coupling) {
  switch (backend) {
    case qpn::Backend::gray:
      if (coupling != qpn::Coupling::full)
        throw std::invalid_argument("backend 'gray' requires coupling 'full'");
      break;
    case qpn::Backend::recursive_cnot:
    case qpn::Backend::recursive_cns:
      if (coupling == qpn::Coupling::full)
        throw std::invalid_argument(
            "recursive backends target coupling 'path' or 'ring'");
      break;
    case qpn::Backend::optimized:
      break;
  }
}

struct CompileArgs {
  std::string phases_path;
  std::string backend = "recursive-cnot";
  std::string coupling = "auto";
  std::string out_path;
  bool include_global_phase = false;
  int expect_width = 0;
};

int cmd_compile(const CompileArgs& args) {
  const qpn::PhaseSpec theta = qpn::read_phase_file(args.phases_path);
  if (args.expect_width > 0 && args.expect_width != theta.width)
    throw std::invalid_argument("--n disagrees with the phase file header");

  const qpn::Backend backend = qpn::backend_from_string(args.backend);
  const qpn::Coupling coupling =
      coupling_from_string(args.coupling == "auto" ? default_coupling_for(backend)
                                                   : args.coupling);
  check_backend_coupling(backend, coupling);

  qpn::NetworkTemplate t =
      backend == qpn::Backend::optimized
          ? qpn::optimize_template(theta.width,
                                   qpn::CouplingGraph(coupling, theta.width),
                                   qpn::TwoQubitFlavor::cnot)
                .network
          : qpn::make_template(theta.width, backend);
  t.coupling = qpn::CouplingGraph(coupling, theta.width);
  const qpn::Circuit bound =
      qpn::bind_angles(t, theta, args.include_global_phase);

  qpn::write_circuit_file(args.out_path, bound);

  std::cout << "backend: " << qpn::to_string(backend) << "\n"
            << "coupling: " << qpn::to_string(coupling) << "\n"
            << "qubits: " << theta.width << "\n";
  print_stats(qpn::circuit_stats(bound));
  std::cout << "wrote: " << args.out_path << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& circuit_path, const std::string& phases_path,
               double tol) {
  const qpn::Circuit c = qpn::read_circuit_file(circuit_path);
  const qpn::PhaseSpec theta = qpn::read_phase_file(phases_path);
  if (c.width != theta.width)
    throw std::invalid_argument("circuit and phase file widths disagree");

  const qpn::PhaseGateCheck check = qpn::verify_phase_gate(c, theta, tol);
  std::cout << "qubits: " << c.width << "\n"
            << "tolerance: " << qpn::format_angle(tol) << "\n"
            << "max_error: " << qpn::format_angle(check.max_error) << "\n"
            << "verdict: " << (check.ok ? "ok" : "mismatch") << "\n";
  return check.ok ? kExitOk : kExitFailure;
}

int cmd_dj(const std::string& truth_path, const std::string& backend_name,
           bool lenient) {
  const qpn::BooleanFunction f = qpn::read_truth_table_file(truth_path);
  const qpn::BooleanClass cls = qpn::classify_boolean(f);
  if (cls == qpn::BooleanClass::neither && !lenient)
    throw std::invalid_argument(
        "truth table is neither constant nor balanced (use --lenient to run anyway)");

  const qpn::DjResult result =
      qpn::deutsch_jozsa(f, qpn::backend_from_string(backend_name), !lenient);
  std::cout << "n: " << f.width << "\n"
            << "backend: " << backend_name << "\n"
            << "classification: " << qpn::to_string(cls) << "\n"
            << "verdict: " << qpn::to_string(result.verdict) << "\n"
            << "prob_zero: " << qpn::format_probability(result.prob_zero) << "\n";
  print_stats(result.stats);
  return kExitOk;
}

int cmd_grover(int width, const std::vector<std::uint32_t>& marked,
               const std::string& backend_name, std::optional<int> iterations) {
  std::vector<qpn::BasisIndex> items;
  items.reserve(marked.size());
  for (std::uint32_t m : marked) items.emplace_back(m, width);

  const qpn::GroverResult result =
      qpn::grover(width, items, qpn::backend_from_string(backend_name), iterations);

  std::cout << "n: " << width << "\n"
            << "backend: " << backend_name << "\n"
            << "marked_count: " << std::set<std::uint32_t>(marked.begin(), marked.end()).size()
            << "\n"
            << "iterations: " << result.iterations << "\n"
            << "success_prob: " << qpn::format_probability(result.success_prob) << "\n";
  for (std::size_t k = 0; k < result.trajectory.size(); ++k)
    std::cout << "prob_iter_" << k << ": "
              << qpn::format_probability(result.trajectory[k]) << "\n";
  return kExitOk;
}

int cmd_gcx(const std::string& truth_path, const std::string& backend_name,
            const std::string& out_path) {
  const qpn::BooleanFunction h = qpn::read_truth_table_file(truth_path);
  const qpn::Circuit circuit =
      qpn::generalized_cnot(h, qpn::backend_from_string(backend_name));
  const int width = circuit.width;

  // Cross-check against the permutation |c, b> -> |c, b xor h(c)>.
  const qpn::DenseUnitary u = qpn::unitary_of(circuit);
  const Eigen::Index n = Eigen::Index{1} << width;
  Eigen::MatrixXcd target = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index x = 0; x < n; ++x) {
    const Eigen::Index c = x >> 1;
    const Eigen::Index flipped = x ^ Eigen::Index{h.table[static_cast<std::size_t>(c)]};
    target(flipped, x) = 1.0;
  }
  const double err =
      qpn::distance_up_to_global_phase(u, qpn::DenseUnitary(width, std::move(target)));
  const bool ok = err <= 1e-10;

  std::cout << "n: " << width << "\n"
            << "backend: " << backend_name << "\n"
            << "max_error: " << qpn::format_angle(err) << "\n"
            << "verdict: " << (ok ? "ok" : "mismatch") << "\n";
  print_stats(qpn::circuit_stats(circuit));
  if (!out_path.empty()) {
    qpn::write_circuit_file(out_path, circuit);
    std::cout << "wrote: " << out_path << "\n";
  }
  return ok ? kExitOk : kExitFailure;
}

int cmd_optimize(int width, const std::string& coupling_name,
                 const std::string& gate_set, std::uint64_t max_nodes,
                 double max_seconds, const std::string& out_path) {
  const qpn::CouplingGraph coupling(coupling_from_string(coupling_name), width);
  const qpn::TwoQubitFlavor flavor = gate_set == "cns" ? qpn::TwoQubitFlavor::cns
                                                       : qpn::TwoQubitFlavor::cnot;
  if (gate_set != "cnot" && gate_set != "cns")
    throw std::invalid_argument("gate set must be 'cnot' or 'cns'");

  qpn::SearchBudget budget;
  budget.max_nodes = max_nodes;
  budget.max_seconds = max_seconds;
  const qpn::OptimizeResult result =
      qpn::optimize_template(width, coupling, flavor, budget);

  std::ofstream out(out_path);
  if (!out) throw qpn::ParseError("cannot write '" + out_path + "'");
  qpn::write_template_file(out, result.network);

  std::cout << "n: " << width << "\n"
            << "coupling: " << coupling_name << "\n"
            << "gate_set: " << gate_set << "\n"
            << "blocks: " << result.blocks << "\n"
            << "optimal: " << (result.optimal ? "true" : "false") << "\n"
            << "lower_bound: " << result.lower_bound << "\n"
            << "nodes: " << result.nodes << "\n"
            << "slots: " << result.network.slots.size() << "\n"
            << "wrote: " << out_path << "\n";
  return kExitOk;
}

int cmd_schedule(const std::string& circuit_path, const std::string& coupling_name) {
  const qpn::Circuit c = qpn::read_circuit_file(circuit_path);
  const qpn::CouplingGraph coupling(coupling_from_string(coupling_name), c.width);
  const qpn::LayeredCircuit lc = qpn::schedule_layers(c, coupling);

  std::cout << "qubits: " << c.width << "\n"
            << "gates: " << c.size() << "\n"
            << "depth: " << lc.depth() << "\n"
            << "two_qubit_blocks: " << lc.two_qubit_blocks() << "\n";
  for (std::size_t k = 0; k < lc.layers.size(); ++k) {
    std::cout << "layer_" << k << ":";
    for (const qpn::LayeredGate& lg : lc.layers[k]) {
      const qpn::Gate& g = lg.gate;
      std::cout << " " << qpn::to_string(g.kind);
      if (g.kind == qpn::GateKind::rz)
        std::cout << "(" << g.a << "," << qpn::format_angle(g.angle) << ")";
      else if (g.kind == qpn::GateKind::global_phase)
        std::cout << "(" << qpn::format_angle(g.angle) << ")";
      else if (g.is_two_qubit())
        std::cout << "(" << g.a << "," << g.b << ")";
      else
        std::cout << "(" << g.a << ")";
    }
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_sensitivity(int width, double epsilon, const std::string& mode_name,
                    std::uint64_t trials, std::uint64_t seed) {
  qpn::PerturbationMode mode;
  if (mode_name == "adversarial") mode = qpn::PerturbationMode::adversarial;
  else if (mode_name == "random") mode = qpn::PerturbationMode::random_uniform;
  else throw std::invalid_argument("mode must be 'adversarial' or 'random'");

  const qpn::SensitivityReport report =
      qpn::angle_sensitivity(width, epsilon, mode, trials, seed);

  std::cout << "n: " << report.width << "\n"
            << "epsilon: " << qpn::format_angle(report.epsilon) << "\n"
            << "mode: " << qpn::to_string(mode) << "\n"
            << "trials: " << report.trials << "\n"
            << "seed: " << report.seed << "\n"
            << "worst_case_bound: " << qpn::format_angle(report.worst_case_bound) << "\n"
            << "empirical_max: " << qpn::format_angle(report.empirical_max) << "\n"
            << "empirical_rms: " << qpn::format_angle(report.empirical_rms) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"programmable phase-shift network compiler"};
  app.require_subcommand(1);

  // compile
  CompileArgs compile_args;
  auto* compile = app.add_subcommand("compile", "bind a phase vector into a network");
  compile->add_option("--phases", compile_args.phases_path, "phase file")->required();
  compile->add_option("--backend", compile_args.backend,
                      "recursive-cnot | recursive-cns | gray | optimized");
  compile->add_option("--coupling", compile_args.coupling, "path | ring | full | auto");
  compile->add_option("--out", compile_args.out_path, "output circuit file")->required();
  compile->add_flag("--include-global-phase", compile_args.include_global_phase,
                    "emit the global-phase knob as a gphase element");
  compile->add_option("--n", compile_args.expect_width, "expected qubit count");

  // verify
  std::string verify_circuit, verify_phases;
  double verify_tol = 1e-10;
  auto* verify = app.add_subcommand("verify", "check a circuit against a phase vector");
  verify->add_option("--circuit", verify_circuit, "circuit file")->required();
  verify->add_option("--phases", verify_phases, "phase file")->required();
  verify->add_option("--tol", verify_tol, "acceptance tolerance");

  // dj
  std::string dj_truth, dj_backend = "recursive-cnot";
  bool dj_lenient = false;
  auto* dj = app.add_subcommand("dj", "run Deutsch-Jozsa on a truth table");
  dj->add_option("--truth", dj_truth, "truth table file")->required();
  dj->add_option("--backend", dj_backend, "network backend");
  dj->add_flag("--lenient", dj_lenient, "allow tables that are neither class");

  // grover
  int grover_n = 0;
  std::vector<std::uint32_t> grover_marked;
  std::string grover_backend = "recursive-cnot";
  int grover_iterations = -1;
  auto* grover = app.add_subcommand("grover", "run Grover search");
  grover->add_option("--n", grover_n, "qubit count")->required();
  grover->add_option("--marked", grover_marked, "marked basis index (repeatable)")
      ->required();
  grover->add_option("--backend", grover_backend, "network backend");
  grover->add_option("--iterations", grover_iterations, "override iteration count");

  // gcx
  std::string gcx_truth, gcx_backend = "recursive-cnot", gcx_out;
  auto* gcx = app.add_subcommand("gcx", "generalized controlled-not from a condition table");
  gcx->add_option("--truth", gcx_truth, "truth table of the control condition")->required();
  gcx->add_option("--backend", gcx_backend, "network backend");
  gcx->add_option("--out", gcx_out, "optional output circuit file");

  // optimize
  int opt_n = 0;
  std::string opt_coupling = "path", opt_gate_set = "cnot", opt_out;
  std::uint64_t opt_nodes = 10'000'000;
  double opt_seconds = std::numeric_limits<double>::infinity();
  auto* optimize = app.add_subcommand("optimize", "search for a minimal-block template");
  optimize->add_option("--n", opt_n, "qubit count")->required();
  optimize->add_option("--coupling", opt_coupling, "path | ring | full");
  optimize->add_option("--gate-set", opt_gate_set, "cnot | cns");
  optimize->add_option("--max-nodes", opt_nodes, "search node budget");
  optimize->add_option("--max-seconds", opt_seconds, "optional wall-clock cap");
  optimize->add_option("--out", opt_out, "output template file")->required();

  // schedule
  std::string sched_circuit, sched_coupling = "full";
  auto* schedule = app.add_subcommand("schedule", "layer a circuit for parallel execution");
  schedule->add_option("--circuit", sched_circuit, "circuit file")->required();
  schedule->add_option("--coupling", sched_coupling, "path | ring | full");

  // sensitivity
  int sens_n = 0;
  double sens_eps = 0.0;
  std::string sens_mode = "adversarial";
  std::uint64_t sens_trials = 10'000, sens_seed = 0;
  auto* sensitivity = app.add_subcommand("sensitivity", "knob-error propagation analysis");
  sensitivity->add_option("--n", sens_n, "qubit count")->required();
  sensitivity->add_option("--epsilon", sens_eps, "knob error bound (radians)")->required();
  sensitivity->add_option("--mode", sens_mode, "adversarial | random");
  sensitivity->add_option("--trials", sens_trials, "random-mode trial count");
  sensitivity->add_option("--seed", sens_seed, "random-mode seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (compile->parsed()) return cmd_compile(compile_args);
    if (verify->parsed()) return cmd_verify(verify_circuit, verify_phases, verify_tol);
    if (dj->parsed()) return cmd_dj(dj_truth, dj_backend, dj_lenient);
    if (grover->parsed())
      return cmd_grover(grover_n, grover_marked, grover_backend,
                        grover_iterations < 0
                            ? std::nullopt
                            : std::optional<int>(grover_iterations));
    if (gcx->parsed()) return cmd_gcx(gcx_truth, gcx_backend, gcx_out);
    if (optimize->parsed())
      return cmd_optimize(opt_n, opt_coupling, opt_gate_set, opt_nodes, opt_seconds,
                          opt_out);
    if (schedule->parsed()) return cmd_schedule(sched_circuit, sched_coupling);
    if (sensitivity->parsed())
      return cmd_sensitivity(sens_n, sens_eps, sens_mode, sens_trials, sens_seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
