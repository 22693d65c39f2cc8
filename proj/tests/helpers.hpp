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

// Test-only oracles. Everything here recomputes expectations from first
// principles (bit-level replay, dense matrices, Gaussian elimination) and
// stays independent of the library's parity-mask algebra.

#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "qpn/core.hpp"

namespace qpn_test {

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

struct ReplaySlot {
  std::size_t position;
  int qubit;
  std::uint32_t condition;
};

struct ReplayResult {
  std::vector<ReplaySlot> slots;
  std::vector<std::uint32_t> final_labels;  // wire j-1 as a parity mask
};

/// Runs the circuit's classical gates on every basis input at the raw bit
/// level, reads off the wire value at each rz site, and solves for the
/// parity mask that generates it (verifying linearity over all inputs).
inline ReplayResult replay_conditions(const qpn::Circuit& c) {
  const int n = c.width;
  const std::uint32_t count = 1u << n;

  std::vector<std::size_t> rz_positions;
  for (std::size_t i = 0; i < c.gates.size(); ++i)
    if (c.gates[i].kind == qpn::GateKind::rz) rz_positions.push_back(i);

  std::vector<std::vector<int>> bits_at(rz_positions.size(),
                                        std::vector<int>(count, 0));
  std::vector<std::vector<int>> final_bits(static_cast<std::size_t>(n),
                                           std::vector<int>(count, 0));

  for (std::uint32_t x = 0; x < count; ++x) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) w[j - 1] = static_cast<int>(x >> (n - j) & 1u);
    std::size_t site = 0;
    for (const qpn::Gate& g : c.gates) {
      switch (g.kind) {
        case qpn::GateKind::rz:
          bits_at[site++][x] = w[static_cast<std::size_t>(g.a - 1)];
          break;
        case qpn::GateKind::cnot:
          w[static_cast<std::size_t>(g.b - 1)] ^= w[static_cast<std::size_t>(g.a - 1)];
          break;
        case qpn::GateKind::swap:
          std::swap(w[static_cast<std::size_t>(g.a - 1)],
                    w[static_cast<std::size_t>(g.b - 1)]);
          break;
        case qpn::GateKind::cns: {
          const int old_a = w[static_cast<std::size_t>(g.a - 1)];
          w[static_cast<std::size_t>(g.a - 1)] ^= w[static_cast<std::size_t>(g.b - 1)];
          w[static_cast<std::size_t>(g.b - 1)] = old_a;
          break;
        }
        case qpn::GateKind::global_phase:
          break;
        default:
          throw std::runtime_error("replay: non-classical gate in skeleton");
      }
    }
    for (int j = 1; j <= n; ++j) final_bits[j - 1][x] = w[j - 1];
  }

  auto solve_mask = [&](const std::vector<int>& values) {
    std::uint32_t mask = 0;
    for (int j = 1; j <= n; ++j)
      if (values[1u << (n - j)]) mask |= 1u << (n - j);
    for (std::uint32_t x = 0; x < count; ++x)
      if (values[x] != (std::popcount(x & mask) & 1))
        throw std::runtime_error("replay: wire value is not linear in the inputs");
    return mask;
  };

  ReplayResult result;
  for (std::size_t s = 0; s < rz_positions.size(); ++s)
    result.slots.push_back({rz_positions[s], c.gates[rz_positions[s]].a,
                            solve_mask(bits_at[s])});
  for (int j = 0; j < n; ++j)
    result.final_labels.push_back(solve_mask(final_bits[static_cast<std::size_t>(j)]));
  return result;
}

inline int gf2_rank(std::vector<std::uint32_t> rows) {
  int rank = 0;
  for (int bit = 31; bit >= 0; --bit) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows.size() && !(rows[pivot] >> bit & 1u)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[static_cast<std::size_t>(rank)], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != static_cast<std::size_t>(rank) && (rows[r] >> bit & 1u))
        rows[r] ^= rows[static_cast<std::size_t>(rank)];
    ++rank;
  }
  return rank;
}

/// Dense Walsh-Hadamard matrix straight from the definition.
inline Eigen::MatrixXd dense_wht_matrix(int width) {
  const Eigen::Index n = Eigen::Index{1} << width;
  Eigen::MatrixXd h(n, n);
  for (Eigen::Index x = 0; x < n; ++x)
    for (Eigen::Index y = 0; y < n; ++y)
      h(x, y) = (std::popcount(static_cast<std::uint32_t>(x & y)) & 1) ? -1.0 : 1.0;
  return h;
}

inline qpn::Circuit random_circuit(std::mt19937_64& rng, int width,
                                   std::size_t gate_count,
                                   bool classical_only = false) {
  qpn::Circuit c(width);
  auto wire = [&]() { return 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(width)); };
  for (std::size_t i = 0; i < gate_count; ++i) {
    const int kind = static_cast<int>(rng() % (classical_only ? 3u : 6u));
    if (kind >= 3 || width == 1) {
      switch (width == 1 ? 3 + static_cast<int>(rng() % 3u) : kind) {
        case 3: c.append(qpn::Gate::rz(wire(), uniform(rng, -3.0, 3.0))); break;
        case 4: c.append(qpn::Gate::hadamard(wire())); break;
        default: c.append(qpn::Gate::global_phase(uniform(rng, -3.0, 3.0))); break;
      }
      continue;
    }
    int a = wire(), b = wire();
    while (b == a) b = wire();
    switch (kind) {
      case 0: c.append(qpn::Gate::cnot(a, b)); break;
      case 1: c.append(qpn::Gate::cns(a, b)); break;
      default: c.append(qpn::Gate::swap(a, b)); break;
    }
  }
  return c;
}

}  // namespace qpn_test
