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

// Golden-file tests that drive the installed binary end to end.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "qpn/io.hpp"

#ifdef _WIN32
#error "the cli test driver assumes a POSIX shell"
#endif
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

fs::path work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("qpn_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  out << content;
}

CliResult run_cli(const std::string& args) {
  const fs::path out_path = work_dir() / "stdout.txt";
  const std::string cmd = std::string(QPN_CLI_PATH) + " " + args + " > " +
                          out_path.string() + " 2> " +
                          (work_dir() / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, slurp(out_path)};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("compile writes the expected two-qubit circuit byte for byte") {
  const fs::path phases = work_dir() / "theta2.txt";
  spit(phases, "n 2\n0\n0\n0\n3.1415926535897931\n");
  const fs::path out = work_dir() / "c2.qc";

  const CliResult r = run_cli("compile --phases " + phases.string() +
                              " --backend recursive-cnot --out " + out.string());
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "rotations: 3"));

  const std::string golden =
      "qubits 2\n"
      "rz 2 -1.5707963267948966\n"
      "swap 1 2\n"
      "rz 2 -1.5707963267948966\n"
      "cnot 1 2\n"
      "rz 2 1.5707963267948966\n"
      "cnot 1 2\n"
      "swap 1 2\n";
  CHECK(slurp(out) == golden);
}

TEST_CASE("compile then verify round-trips, and corruption is caught") {
  const fs::path phases = work_dir() / "theta3.txt";
  std::ostringstream content;
  content << "n 3\n";
  for (int i = 0; i < 8; ++i) content << qpn::format_angle(0.3 * i - 1.1) << "\n";
  spit(phases, content.str());
  const fs::path circuit = work_dir() / "c3.qc";

  CHECK(run_cli("compile --phases " + phases.string() + " --backend recursive-cns" +
                " --out " + circuit.string())
            .exit_code == 0);

  SUBCASE("clean verify exits 0") {
    const CliResult v = run_cli("verify --circuit " + circuit.string() +
                                " --phases " + phases.string());
    CHECK(v.exit_code == 0);
    CHECK(contains(v.out, "verdict: ok"));
  }
  SUBCASE("a corrupted angle exits 1") {
    qpn::Circuit c = qpn::read_circuit_file(circuit.string());
    for (qpn::Gate& g : c.gates)
      if (g.kind == qpn::GateKind::rz) {
        g.angle += 0.25;
        break;
      }
    const fs::path bad = work_dir() / "c3_bad.qc";
    qpn::write_circuit_file(bad.string(), c);
    const CliResult v =
        run_cli("verify --circuit " + bad.string() + " --phases " + phases.string());
    CHECK(v.exit_code == 1);
    CHECK(contains(v.out, "verdict: mismatch"));
  }
  SUBCASE("a wrong-width phase file exits 2") {
    const fs::path narrow = work_dir() / "theta2b.txt";
    spit(narrow, "n 2\n0\n0\n0\n0\n");
    const CliResult v = run_cli("verify --circuit " + circuit.string() +
                                " --phases " + narrow.string());
    CHECK(v.exit_code == 2);
  }
}

TEST_CASE("incompatible backend and coupling exits 2") {
  const fs::path phases = work_dir() / "theta2c.txt";
  spit(phases, "n 2\n0\n0\n0\n0\n");
  const CliResult r = run_cli("compile --phases " + phases.string() +
                              " --backend gray --coupling path --out " +
                              (work_dir() / "never.qc").string());
  CHECK(r.exit_code == 2);
}

TEST_CASE("missing and malformed inputs exit 2") {
  CHECK(run_cli("compile --phases /nonexistent.txt --out " +
                (work_dir() / "x.qc").string())
            .exit_code == 2);
  const fs::path bad = work_dir() / "bad.txt";
  spit(bad, "m 2\n0\n0\n0\n0\n");
  CHECK(run_cli("compile --phases " + bad.string() + " --out " +
                (work_dir() / "x.qc").string())
            .exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("circuit files round-trip bit-exactly") {
  const fs::path phases = work_dir() / "theta4.txt";
  std::ostringstream content;
  content << "n 2\n";
  for (int i = 0; i < 4; ++i) content << qpn::format_angle(0.7851 * i) << "\n";
  spit(phases, content.str());
  const fs::path circuit = work_dir() / "c4.qc";
  REQUIRE(run_cli("compile --phases " + phases.string() +
                  " --include-global-phase --out " + circuit.string())
              .exit_code == 0);

  const qpn::Circuit parsed = qpn::read_circuit_file(circuit.string());
  std::ostringstream emitted;
  qpn::write_circuit_file(emitted, parsed);
  CHECK(emitted.str() == slurp(circuit));
}

TEST_CASE("dj reports a constant verdict with pinned formatting") {
  const fs::path truth = work_dir() / "const.tt";
  spit(truth, "n 3\n11111111\n");
  const CliResult r = run_cli("dj --truth " + truth.string());
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "verdict: constant"));
  CHECK(contains(r.out, "prob_zero: 1.00000000000"));

  const fs::path balanced = work_dir() / "bal.tt";
  spit(balanced, "n 3\n00001111\n");
  const CliResult rb = run_cli("dj --truth " + balanced.string() + " --backend gray");
  CHECK(rb.exit_code == 0);
  CHECK(contains(rb.out, "verdict: balanced"));

  const fs::path neither = work_dir() / "neither.tt";
  spit(neither, "n 2\n0100\n");
  CHECK(run_cli("dj --truth " + neither.string()).exit_code == 2);
}

TEST_CASE("grover prints the trajectory and the closed-form optimum") {
  const CliResult r = run_cli("grover --n 4 --marked 5");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "iterations: 3"));
  CHECK(contains(r.out, "success_prob: 0.96131"));
  CHECK(contains(r.out, "prob_iter_0: 0.0625"));
  CHECK(contains(r.out, "prob_iter_3:"));
}

TEST_CASE("gcx verifies the generalized controlled-not") {
  const fs::path truth = work_dir() / "and2.tt";
  spit(truth, "n 2\n0001\n");
  const CliResult r = run_cli("gcx --truth " + truth.string() + " --out " +
                              (work_dir() / "toffoli.qc").string());
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "verdict: ok"));
  CHECK(fs::exists(work_dir() / "toffoli.qc"));
}

TEST_CASE("optimize writes a parsable template file") {
  const fs::path tpl = work_dir() / "opt2.qc";
  const CliResult r = run_cli("optimize --n 2 --out " + tpl.string());
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "blocks: 2"));
  CHECK(contains(r.out, "optimal: true"));
  CHECK(contains(r.out, "slots: 3"));

  const qpn::Circuit skeleton = qpn::read_circuit_file(tpl.string());
  CHECK(skeleton.width == 2);
  CHECK(skeleton.size() == 5);  // comments are skipped
}

TEST_CASE("schedule reports depth and blocks") {
  const fs::path circuit = work_dir() / "sched.qc";
  spit(circuit, "qubits 3\nrz 1 0.5\nrz 2 0.25\ncnot 1 2\nrz 3 0.125\n");
  const CliResult r = run_cli("schedule --circuit " + circuit.string());
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "gates: 4"));
  CHECK(contains(r.out, "depth: 2"));
  CHECK(contains(r.out, "two_qubit_blocks: 1"));
  CHECK(contains(r.out, "layer_0:"));
}

TEST_CASE("sensitivity reports the exact adversarial bound") {
  const CliResult r = run_cli("sensitivity --n 3 --epsilon 1e-3 --mode adversarial");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "worst_case_bound: 0.004"));
  CHECK(contains(r.out, "empirical_max: 0.004"));
}

TEST_CASE("reports are byte-identical across repeated runs") {
  const std::string args = "sensitivity --n 4 --epsilon 1e-3 --mode random"
                           " --trials 500 --seed 12345";
  const CliResult a = run_cli(args);
  const CliResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  const CliResult c = run_cli("grover --n 3 --marked 6 --backend gray");
  const CliResult d = run_cli("grover --n 3 --marked 6 --backend gray");
  CHECK(c.out == d.out);
}

TEST_SUITE_END();
