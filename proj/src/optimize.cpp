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

#include "qpn/optimize.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "qpn/walsh.hpp"

namespace qpn {

std::size_t LayeredCircuit::two_qubit_blocks() const {
  std::size_t n = 0;
  for (const auto& layer : layers)
    for (const LayeredGate& lg : layer)
      if (lg.gate.is_two_qubit()) {
        ++n;
        break;
      }
  return n;
}

namespace {

LayeredCircuit asap_layers(const Circuit& c) {
  LayeredCircuit out{c.width, {}};
  std::vector<std::size_t> next_free(static_cast<std::size_t>(c.width) + 1, 0);
  for (std::size_t idx = 0; idx < c.gates.size(); ++idx) {
    const Gate& g = c.gates[idx];
    std::size_t level = 0;
    for (int q = 1; q <= c.width; ++q)
      if (g.touches(q)) level = std::max(level, next_free[static_cast<std::size_t>(q)]);
    if (level == out.layers.size()) out.layers.emplace_back();
    out.layers[level].push_back({idx, g});
    for (int q = 1; q <= c.width; ++q)
      if (g.touches(q)) next_free[static_cast<std::size_t>(q)] = level + 1;
  }
  return out;
}

}  // namespace

LayeredCircuit schedule_layers(const Circuit& c, const CouplingGraph& g) {
  const ValidityReport report = validate_circuit(c, g);
  if (!report.ok)
    throw std::invalid_argument("schedule_layers: invalid circuit: " + report.message);
  return asap_layers(c);
}

Circuit flatten(const LayeredCircuit& lc) {
  std::vector<LayeredGate> all;
  for (const auto& layer : lc.layers)
    for (const LayeredGate& lg : layer) all.push_back(lg);
  std::sort(all.begin(), all.end(),
            [](const LayeredGate& a, const LayeredGate& b) { return a.index < b.index; });
  Circuit c(lc.width);
  for (const LayeredGate& lg : all) c.append(lg.gate);
  return c;
}

CircuitStats circuit_stats(const Circuit& c) {
  CircuitStats s;
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::rz: ++s.rotations; break;
      case GateKind::cnot: ++s.cnot; break;
      case GateKind::cns: ++s.cns; break;
      case GateKind::swap: ++s.swap; break;
      case GateKind::hadamard: ++s.hadamard; break;
      case GateKind::global_phase: ++s.global_phase; break;
    }
    if (g.is_two_qubit()) ++s.two_qubit;
  }
  s.total = c.gates.size();
  const LayeredCircuit lc = asap_layers(c);
  s.depth = lc.depth();
  s.two_qubit_blocks = lc.two_qubit_blocks();
  return s;
}

CircuitStats template_stats(const NetworkTemplate& t) {
  return circuit_stats(t.skeleton);
}

// ---------------------------------------------------------------------------
// Block optimizer
// ---------------------------------------------------------------------------

namespace {

struct Block {
  std::vector<Gate> gates;
  std::vector<int> encoding;  // (edge index, choice) pairs, flattened
};

// All nonempty sets of classical gates on pairwise disjoint coupled pairs.
// Per edge (a < b): choice 0 = family gate a->b, 1 = family gate b->a,
// 2 = swap. Sorted by gate count, then by encoding; this is the canonical
// enumeration order of the search.
std::vector<Block> enumerate_blocks(const CouplingGraph& coupling,
                                    TwoQubitFlavor flavor) {
  const auto edges = coupling.edges();
  std::vector<Block> blocks;

  std::vector<std::pair<int, int>> chosen;  // (edge index, choice)
  auto make_gate = [&](int edge_idx, int choice) {
    const auto [a, b] = edges[static_cast<std::size_t>(edge_idx)];
    if (choice == 2) return Gate::swap(a, b);
    const int control = choice == 0 ? a : b;
    const int target = choice == 0 ? b : a;
    return flavor == TwoQubitFlavor::cnot ? Gate::cnot(control, target)
                                          : Gate::cns(control, target);
  };
  auto disjoint_with_chosen = [&](int edge_idx) {
    const auto [a, b] = edges[static_cast<std::size_t>(edge_idx)];
    for (const auto& [ei, choice] : chosen) {
      (void)choice;
      const auto [x, y] = edges[static_cast<std::size_t>(ei)];
      if (a == x || a == y || b == x || b == y) return false;
    }
    return true;
  };

  auto emit = [&]() {
    Block b;
    for (const auto& [ei, choice] : chosen) {
      b.gates.push_back(make_gate(ei, choice));
      b.encoding.push_back(ei);
      b.encoding.push_back(choice);
    }
    blocks.push_back(std::move(b));
  };

  // Depth-first over edges in index order; every nonempty prefix set is a
  // block in its own right.
  auto rec = [&](auto&& self, std::size_t from) -> void {
    for (std::size_t ei = from; ei < edges.size(); ++ei) {
      if (!disjoint_with_chosen(static_cast<int>(ei))) continue;
      for (int choice = 0; choice < 3; ++choice) {
        chosen.emplace_back(static_cast<int>(ei), choice);
        emit();
        self(self, ei + 1);
        chosen.pop_back();
      }
    }
  };
  rec(rec, 0);

  std::sort(blocks.begin(), blocks.end(), [](const Block& x, const Block& y) {
    if (x.gates.size() != y.gates.size()) return x.gates.size() < y.gates.size();
    return x.encoding < y.encoding;
  });
  return blocks;
}

// Wire permutations preserving the coupling graph, as maps j -> sigma[j-1].
std::vector<std::vector<int>> coupling_automorphisms(const CouplingGraph& g) {
  const int n = g.width;
  std::vector<std::vector<int>> out;
  std::vector<int> perm(static_cast<std::size_t>(n));

  auto push_perm = [&]() { out.push_back(perm); };

  switch (g.kind) {
    case Coupling::path:
      for (int j = 1; j <= n; ++j) perm[static_cast<std::size_t>(j - 1)] = j;
      push_perm();
      for (int j = 1; j <= n; ++j) perm[static_cast<std::size_t>(j - 1)] = n + 1 - j;
      push_perm();
      break;
    case Coupling::ring:
      if (n <= 2) {
        for (int j = 1; j <= n; ++j) perm[static_cast<std::size_t>(j - 1)] = j;
        push_perm();
        if (n == 2) {
          perm = {2, 1};
          push_perm();
        }
        break;
      }
      for (int shift = 0; shift < n; ++shift) {
        for (int j = 1; j <= n; ++j)
          perm[static_cast<std::size_t>(j - 1)] = (j - 1 + shift) % n + 1;
        push_perm();
        for (int j = 1; j <= n; ++j)
          perm[static_cast<std::size_t>(j - 1)] = (n - j + shift) % n + 1;
        push_perm();
      }
      break;
    case Coupling::full: {
      for (int j = 1; j <= n; ++j) perm[static_cast<std::size_t>(j - 1)] = j;
      std::sort(perm.begin(), perm.end());
      do {
        push_perm();
      } while (std::next_permutation(perm.begin(), perm.end()));
      break;
    }
  }
  return out;
}

struct Searcher {
  int n;
  std::uint32_t full_hit;  // all nonzero masks
  CouplingGraph coupling;
  std::vector<Block> blocks;
  std::vector<std::vector<std::uint32_t>> auto_mask_maps;  // per automorphism
  std::vector<std::vector<int>> autos;

  std::uint64_t nodes = 0;
  std::uint64_t max_nodes;
  std::chrono::steady_clock::time_point t0;
  double max_seconds;
  bool out_of_budget = false;

  std::unordered_map<std::uint64_t, int> memo;

  // Current path and best solution at the depth under interrogation.
  std::vector<int> path;
  bool have_solution = false;
  std::vector<int> best_path;
  std::size_t best_gates = 0;

  Searcher(int n_, const CouplingGraph& coupling_, TwoQubitFlavor flavor,
           const SearchBudget& budget)
      : n(n_),
        full_hit((std::uint32_t{1} << ((std::uint32_t{1} << n_) - 1)) - 1u),
        coupling(coupling_),
        blocks(enumerate_blocks(coupling_, flavor)),
        max_nodes(budget.max_nodes),
        t0(std::chrono::steady_clock::now()),
        max_seconds(budget.max_seconds) {
    autos = coupling_automorphisms(coupling);
    const std::uint32_t m = std::uint32_t{1} << n;
    for (const auto& perm : autos) {
      std::vector<std::uint32_t> map(m, 0);
      for (std::uint32_t mask = 0; mask < m; ++mask) {
        std::uint32_t image = 0;
        for (int j = 1; j <= n; ++j)
          if (mask >> (n - j) & 1u)
            image |= std::uint32_t{1} << (n - perm[static_cast<std::size_t>(j - 1)]);
        map[mask] = image;
      }
      auto_mask_maps.push_back(std::move(map));
    }
  }

  // hit is a bitset over nonzero masks: bit (y-1) marks condition y.
  static std::uint32_t hit_bit(std::uint32_t y) { return std::uint32_t{1} << (y - 1); }

  bool budget_ok() {
    if (nodes >= max_nodes) {
      out_of_budget = true;
      return false;
    }
    if ((nodes & 1023u) == 0 && std::isfinite(max_seconds)) {
      const double elapsed =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (elapsed > max_seconds) {
        out_of_budget = true;
        return false;
      }
    }
    return true;
  }

  std::uint64_t canonical_key(const std::vector<std::uint32_t>& labels,
                              std::uint32_t hit) const {
    std::uint64_t best = ~std::uint64_t{0};
    for (std::size_t a = 0; a < autos.size(); ++a) {
      const auto& perm = autos[a];
      const auto& mask_map = auto_mask_maps[a];
      std::uint64_t key = 0;
      // Wire sigma(j) carries the bit-permuted label of wire j.
      for (int j = 1; j <= n; ++j) {
        const std::uint32_t lab = mask_map[labels[static_cast<std::size_t>(j - 1)]];
        const int dest = perm[static_cast<std::size_t>(j - 1)];
        key |= static_cast<std::uint64_t>(lab) << (n * (dest - 1));
      }
      std::uint32_t hit_image = 0;
      for (std::uint32_t y = 1; y < (std::uint32_t{1} << n); ++y)
        if (hit & hit_bit(y)) hit_image |= hit_bit(mask_map[y]);
      key |= static_cast<std::uint64_t>(hit_image) << (n * n);
      best = std::min(best, key);
    }
    return best;
  }

  static std::uint32_t rotate_unhit(const std::vector<std::uint32_t>& labels,
                                    std::uint32_t hit) {
    for (std::uint32_t lab : labels)
      if (lab != 0 && !(hit & hit_bit(lab))) hit |= hit_bit(lab);
    return hit;
  }

  bool is_goal(const std::vector<std::uint32_t>& labels, std::uint32_t hit) const {
    if (hit != full_hit) return false;
    for (int j = 1; j <= n; ++j)
      if (labels[static_cast<std::size_t>(j - 1)] != std::uint32_t{1} << (n - j))
        return false;
    return true;
  }

  int remaining_lower_bound(std::uint32_t hit) const {
    const int remaining = std::popcount(full_hit & ~hit);
    return (remaining + n - 1) / n;
  }

  void apply_block(const Block& b, std::vector<std::uint32_t>& labels) const {
    for (const Gate& g : b.gates) {
      const std::size_t ia = static_cast<std::size_t>(g.a - 1);
      const std::size_t ib = static_cast<std::size_t>(g.b - 1);
      switch (g.kind) {
        case GateKind::cnot: labels[ib] ^= labels[ia]; break;
        case GateKind::swap: std::swap(labels[ia], labels[ib]); break;
        case GateKind::cns: {
          const std::uint32_t old_a = labels[ia];
          labels[ia] ^= labels[ib];
          labels[ib] = old_a;
          break;
        }
        default: break;
      }
    }
  }

  // `collect` false: existence check, prune on revisits with >= blocks used.
  // `collect` true: enumerate all solutions at this depth, track the best by
  // (total gates, enumeration order); revisits prune on (state, used, gates).
  bool dfs(std::vector<std::uint32_t>& labels, std::uint32_t hit, int used, int depth,
           std::size_t gates_so_far, bool collect) {
    if (!budget_ok()) return false;
    ++nodes;

    hit = rotate_unhit(labels, hit);
    if (is_goal(labels, hit)) {
      if (!collect) {
        best_path = path;
        best_gates = gates_so_far;
        have_solution = true;
        return true;
      }
      if (!have_solution || gates_so_far < best_gates) {
        best_path = path;
        best_gates = gates_so_far;
        have_solution = true;
      }
      return false;  // keep enumerating siblings for the gate tie-break
    }
    if (used + remaining_lower_bound(hit) > depth) return false;
    if (used == depth) return false;

    const std::uint64_t key = canonical_key(labels, hit);
    auto [it, inserted] = memo.try_emplace(key, used);
    if (!inserted) {
      if (!collect) {
        if (it->second <= used) return false;
        it->second = used;
      } else {
        // Gate totals can differ at equal block depth, so only strictly
        // deeper revisits are discarded here.
        if (it->second < used) return false;
        it->second = used;
      }
    }

    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
      std::vector<std::uint32_t> next = labels;
      apply_block(blocks[bi], next);
      path.push_back(static_cast<int>(bi));
      const bool found = dfs(next, hit, used + 1, depth,
                             gates_so_far + blocks[bi].gates.size(), collect);
      path.pop_back();
      if (found && !collect) return true;
      if (out_of_budget) return false;
    }
    return false;
  }

  bool search_depth(int depth, bool collect) {
    memo.clear();
    path.clear();
    std::vector<std::uint32_t> labels(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j)
      labels[static_cast<std::size_t>(j - 1)] = std::uint32_t{1} << (n - j);
    return dfs(labels, 0, 0, depth, 0, collect);
  }
};

NetworkTemplate replay_solution(int n, const CouplingGraph& coupling,
                                const std::vector<Block>& blocks,
                                const std::vector<int>& block_ids) {
  Circuit skeleton(n);
  SearchState state{identity_labels(n),
                    std::vector<bool>(std::size_t{1} << n, false), 0};

  auto rotate_phase = [&]() {
    for (int j = 1; j <= n; ++j) {
      const ParityMask& lab = state.labels[static_cast<std::size_t>(j - 1)];
      if (!lab.is_zero() && !state.hit[lab.bits]) {
        state.hit[lab.bits] = true;
        skeleton.append(Gate::rz(j, 0.0));
      }
    }
  };

  rotate_phase();
  for (int bi : block_ids) {
    for (const Gate& g : blocks[static_cast<std::size_t>(bi)].gates) {
      skeleton.append(g);
      apply_label_action(g, state.labels);
    }
    state.blocks_used += 1;
    rotate_phase();
  }

  std::vector<RotationSlot> slots = trace_conditions(skeleton);
  return NetworkTemplate{std::move(skeleton), std::move(slots), Backend::optimized,
                         coupling};
}

}  // namespace

OptimizeResult optimize_template(int width, const CouplingGraph& coupling,
                                 TwoQubitFlavor flavor, const SearchBudget& budget,
                                 int width_cap) {
  check_width(width);
  if (width_cap > 5) width_cap = 5;  // state packing limit
  if (width > width_cap)
    throw std::invalid_argument(
        "optimize_template: width " + std::to_string(width) +
        " exceeds the search cap " + std::to_string(width_cap) +
        "; use a synthesis backend instead");
  if (coupling.width != width)
    throw std::invalid_argument("optimize_template: coupling width mismatch");
  if (budget.max_nodes == 0)
    throw std::invalid_argument("optimize_template: budget must be positive");

  // A scheduled recursive construction seeds the incumbent: the search can
  // then only improve on it, and a feasible template exists from node zero.
  NetworkTemplate incumbent = recursive_template(width, flavor);
  incumbent.coupling = coupling;
  int incumbent_blocks = static_cast<int>(
      asap_layers(incumbent.skeleton).two_qubit_blocks());

  Searcher searcher(width, coupling, flavor, budget);

  bool exhausted_below = true;
  bool improved = false;
  std::vector<int> winning_path;
  int winning_depth = incumbent_blocks;
  std::vector<std::uint32_t> start_labels(static_cast<std::size_t>(width));
  for (int j = 1; j <= width; ++j)
    start_labels[static_cast<std::size_t>(j - 1)] = std::uint32_t{1} << (width - j);
  int lower_bound =
      searcher.remaining_lower_bound(Searcher::rotate_unhit(start_labels, 0));

  for (int depth = lower_bound; depth < incumbent_blocks; ++depth) {
    const bool found = searcher.search_depth(depth, /*collect=*/false);
    if (searcher.out_of_budget) {
      exhausted_below = false;
      if (found || searcher.have_solution) {
        improved = true;
        winning_path = searcher.best_path;
        winning_depth = depth;
      }
      break;
    }
    if (found) {
      improved = true;
      winning_path = searcher.best_path;
      winning_depth = depth;
      // Polish pass: enumerate all solutions at the winning depth and keep
      // the one with the fewest gates (earliest in enumeration order on a
      // tie). Budget permitting; the provisional solution stands otherwise.
      searcher.have_solution = false;
      searcher.search_depth(depth, /*collect=*/true);
      if (searcher.have_solution) winning_path = searcher.best_path;
      break;
    }
    lower_bound = depth + 1;
  }

  OptimizeResult result{std::move(incumbent), incumbent_blocks, false, 0, 0};
  if (improved) {
    result.network =
        replay_solution(width, coupling, searcher.blocks, winning_path);
    result.blocks = winning_depth;
  }
  result.optimal = exhausted_below;
  result.nodes = searcher.nodes;
  result.lower_bound = std::min(lower_bound, result.blocks);

  const ProgrammabilityReport report = check_programmable(result.network);
  if (!report.ok)
    throw std::logic_error("optimizer produced a non-programmable template: " +
                           report.message);
  return result;
}

std::string to_string(PerturbationMode m) {
  return m == PerturbationMode::adversarial ? "adversarial" : "random";
}

SensitivityReport angle_sensitivity(int width, double epsilon, PerturbationMode mode,
                                    std::uint64_t trials, std::uint64_t seed) {
  check_width(width);
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon))
    throw std::invalid_argument("angle_sensitivity: epsilon must be >= 0");

  const Eigen::Index n = Eigen::Index{1} << width;
  SensitivityReport report;
  report.width = width;
  report.epsilon = epsilon;
  report.worst_case_bound = std::ldexp(epsilon, width - 1);
  report.seed = seed;

  if (mode == PerturbationMode::adversarial) {
    // Align every knob error with the basis state x* = 0: delta_y = eps for
    // all y drives delta_theta_0 to the triangle-inequality limit exactly.
    Eigen::VectorXd delta = Eigen::VectorXd::Constant(n, epsilon);
    wht_inplace<double>(delta);
    delta *= 0.5;
    report.empirical_max = delta.cwiseAbs().maxCoeff();
    report.empirical_rms = std::sqrt(delta.squaredNorm() / static_cast<double>(n));
    report.trials = 1;
    return report;
  }

  if (trials == 0)
    throw std::invalid_argument("angle_sensitivity: random mode needs trials >= 1");
  std::mt19937_64 rng(seed);
  // Explicit uniform doubles: distribution classes are not portable across
  // standard library implementations.
  auto uniform_pm = [&rng, epsilon]() {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return epsilon * (2.0 * u - 1.0);
  };

  double max_err = 0.0;
  double sum_sq = 0.0;
  Eigen::VectorXd delta(n);
  for (std::uint64_t t = 0; t < trials; ++t) {
    for (Eigen::Index i = 0; i < n; ++i) delta[i] = uniform_pm();
    wht_inplace<double>(delta);
    delta *= 0.5;
    max_err = std::max(max_err, delta.cwiseAbs().maxCoeff());
    sum_sq += delta.squaredNorm();
  }
  report.empirical_max = max_err;
  report.empirical_rms =
      std::sqrt(sum_sq / (static_cast<double>(trials) * static_cast<double>(n)));
  report.trials = trials;
  return report;
}

}  // namespace qpn
