// Copyright 2026 Bonsai Toolkit Contributors
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
//
// Acceptance suite: one self-contained check per release criterion, each
// printing exactly one "criterion N: PASS|FAIL" line (plus indented detail
// on failure). Run with a criterion number 1-11 to run just that one, or
// with no arguments to run them all. Exit status 0 iff everything run
// passed. Time budgets are asserted where the criterion carries one.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bonsai/classic.hpp"
#include "bonsai/grow.hpp"
#include "bonsai/mapping.hpp"
#include "bonsai/metrics.hpp"
#include "bonsai/pauli.hpp"
#include "bonsai/serialize.hpp"
#include "bonsai/topology.hpp"
#include "bonsai/tree.hpp"
#include "bonsai/verify.hpp"
#include "golden_table.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// A uniform-ish random ternary tree on n qubits with random link labels:
/// each new node attaches to a random earlier node through a random free
/// link.
bonsai::QubitTree random_tree(std::mt19937_64& rng, int n) {
  std::vector<bonsai::TreeEdge> edges;
  std::vector<std::vector<bonsai::Pauli>> free_links(
      static_cast<std::size_t>(n),
      {bonsai::Pauli::X, bonsai::Pauli::Y, bonsai::Pauli::Z});
  for (int v = 1; v < n; ++v) {
    while (true) {
      std::uniform_int_distribution<int> pick_parent(0, v - 1);
      const int p = pick_parent(rng);
      auto& links = free_links[static_cast<std::size_t>(p)];
      if (links.empty()) continue;
      std::uniform_int_distribution<std::size_t> pick_link(0, links.size() - 1);
      const std::size_t slot = pick_link(rng);
      edges.push_back({p, v, links[slot]});
      links.erase(links.begin() + static_cast<std::ptrdiff_t>(slot));
      break;
    }
  }
  return bonsai::QubitTree(n, 0, edges);
}

bool criterion_1() {
  const auto start = Clock::now();
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> size(1, 200);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = size(rng);
    const auto tree = random_tree(rng, n);
    if (static_cast<int>(tree.legs().size()) != 2 * n + 1) {
      std::printf("  tree with %d nodes produced %zu legs, want %d\n", n,
                  tree.legs().size(), 2 * n + 1);
      return false;
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 5.0) {
    std::printf("  took %.1f s, budget 5 s\n", elapsed);
    return false;
  }
  return true;
}

bool criterion_2() {
  const auto start = Clock::now();
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<int> size(1, 64);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = size(rng);
    const auto tree = random_tree(rng, n);
    const auto all = tree.all_strings();
    const auto& strings = all.strings;
    for (std::size_t i = 0; i < strings.size(); ++i) {
      for (std::size_t j = i + 1; j < strings.size(); ++j) {
        if (strings[i].commutes_with(strings[j])) {
          std::printf("  legs %zu and %zu of a %d-node tree commute\n", i, j,
                      n);
          return false;
        }
      }
    }
    // The 2N+1 strings live in a 2N-dimensional binary symplectic space, so
    // one dependency is forced; the criterion demands it be the whole set,
    // which makes every 2N-subset independent.
    const auto witness = bonsai::gf2_dependency(strings);
    if (!witness.has_value() ||
        static_cast<int>(witness->size()) != 2 * n + 1) {
      std::printf("  dependency of a %d-node tree is not the full set\n", n);
      return false;
    }
    std::uniform_int_distribution<std::size_t> drop(0, strings.size() - 1);
    for (int check = 0; check < 3; ++check) {
      auto subset = strings;
      subset.erase(subset.begin() +
                   static_cast<std::ptrdiff_t>(drop(rng)));
      if (bonsai::gf2_dependency(subset).has_value()) {
        std::printf("  a 2N-subset of a %d-node tree is dependent\n", n);
        return false;
      }
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 30.0) {
    std::printf("  took %.1f s, budget 30 s\n", elapsed);
    return false;
  }
  return true;
}

bool criterion_3() {
  const auto start = Clock::now();
  const auto check = [](const bonsai::MajoranaMapping& m, const char* what) {
    const auto report = bonsai::oracle_check(m);
    if (!report.ok()) {
      std::printf("  %s: car %d vacuum %d fock %d residual %.3g\n", what,
                  report.car_ok, report.vacuum_ok, report.fock_ok,
                  report.max_car_residual);
      return false;
    }
    return true;
  };
  for (const auto kind :
       {bonsai::MappingKind::JordanWigner, bonsai::MappingKind::Parity,
        bonsai::MappingKind::BravyiKitaev,
        bonsai::MappingKind::BalancedTernary}) {
    for (int n = 1; n <= 4; ++n) {
      if (!check(bonsai::classic_mapping(kind, n), "classic mapping")) {
        return false;
      }
    }
  }
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> size(1, 4);
    const int n = size(rng);
    // A random connected device on <= 4 qubits.
    std::set<std::pair<int, int>> edge_set;
    for (int v = 1; v < n; ++v) {
      std::uniform_int_distribution<int> parent(0, v - 1);
      const int p = parent(rng);
      edge_set.insert({std::min(p, v), std::max(p, v)});
    }
    const bonsai::HardwareGraph g(
        n,
        std::vector<std::pair<int, int>>(edge_set.begin(), edge_set.end()));
    bonsai::GrowthConfig cfg;
    cfg.seed = static_cast<std::uint64_t>(trial);
    cfg.labelling = trial % 2 == 0 ? bonsai::Labelling::Homogeneous
                                   : bonsai::Labelling::Heterogeneous;
    if (!check(bonsai::bonsai(g, cfg), "grown mapping")) return false;
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 60.0) {
    std::printf("  took %.1f s, budget 60 s\n", elapsed);
    return false;
  }
  return true;
}

bool criterion_4() {
  for (int n = 1; n <= 16; ++n) {
    const auto jw =
        bonsai::classic_mapping(bonsai::MappingKind::JordanWigner, n);
    for (int j = 0; j < n; ++j) {
      std::string prefix;
      for (int q = 0; q < j; ++q) {
        prefix += "Z" + std::to_string(q) + " ";
      }
      if (jw.even[static_cast<std::size_t>(j)].str() !=
              prefix + "X" + std::to_string(j) ||
          jw.odd[static_cast<std::size_t>(j)].str() !=
              prefix + "Y" + std::to_string(j)) {
        std::printf("  ladder strings differ at n=%d mode %d\n", n, j);
        return false;
      }
    }
    const auto parity = bonsai::classic_mapping(bonsai::MappingKind::Parity, n);
    for (int j = 0; j < n; ++j) {
      const int want = j + 1 < n ? 1 : 0;
      if (bonsai::delocalisation(parity, j) != want) {
        std::printf("  prefix-sum delocalisation differs at n=%d mode %d\n", n,
                    j);
        return false;
      }
    }
  }
  for (int n = 1; n <= 200; ++n) {
    int levels = 0;
    for (long long power = 1; power < 2LL * n + 1; power *= 3) ++levels;
    const auto tree =
        bonsai::classic_tree(bonsai::MappingKind::BalancedTernary, n);
    if (tree.depth() + 1 != levels) {
      std::printf("  balanced ternary depth at n=%d is %d, want %d levels\n",
                  n, tree.depth() + 1, levels);
      return false;
    }
  }
  return true;
}

bool criterion_5() {
  std::mt19937_64 rng(55);
  std::uniform_int_distribution<int> size(1, 60);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = size(rng);
    const auto tree = random_tree(rng, n);
    const auto m = bonsai::pair_modes(tree);
    int sum = 0;
    for (int j = 0; j < n; ++j) sum += bonsai::delocalisation(m, j);
    const int h_z = bonsai::report(m).h_z;
    if (sum != n - h_z) {
      std::printf("  tree with %d nodes: sum D = %d but N - h_Z = %d\n", n,
                  sum, n - h_z);
      return false;
    }
    // Relabelling the same structure with either strategy keeps the same
    // all-Z path, so the average delocalisation must agree.
    const auto hom = bonsai::pair_modes(
        bonsai::label_tree(tree, bonsai::Labelling::Homogeneous));
    const auto het = bonsai::pair_modes(
        bonsai::label_tree(tree, bonsai::Labelling::Heterogeneous));
    int hom_sum = 0, het_sum = 0;
    for (int j = 0; j < n; ++j) {
      hom_sum += bonsai::delocalisation(hom, j);
      het_sum += bonsai::delocalisation(het, j);
    }
    if (hom_sum != het_sum) {
      std::printf("  labelling strategies disagree on a %d-node tree: %d vs %d\n",
                  n, hom_sum, het_sum);
      return false;
    }
  }
  return true;
}

bool criterion_6() {
  const auto grown =
      bonsai::fixture_structure(bonsai::FixtureKind::HeavyHex37Tree);
  bool ok = true;
  for (const auto strategy :
       {bonsai::Labelling::Homogeneous, bonsai::Labelling::Heterogeneous}) {
    const bool hom = strategy == bonsai::Labelling::Homogeneous;
    const auto m = bonsai::pair_modes(bonsai::label_tree(grown, strategy));
    const auto rep = bonsai::report(m);
    int local = 0;
    for (int j = 0; j < 37; ++j) {
      if (rep.deloc[static_cast<std::size_t>(j)] == 0) ++local;
    }
    const int want_local = hom ? 16 : 27;
    if (local != want_local) {
      std::printf("  %s labelling: %d local modes, want %d\n",
                  hom ? "homogeneous" : "heterogeneous", local, want_local);
      ok = false;
    }
    if (!hom && rep.deloc[0] != 14) {
      std::printf("  heterogeneous root mode spreads over %d qubits, want 14\n",
                  rep.deloc[0]);
      ok = false;
    }
    if (rep.weight_max != 8) {
      std::printf("  max weight %d, want 8\n", rep.weight_max);
      ok = false;
    }
    if (rep.h_z != 8) {
      std::printf("  h_Z %d, want 8\n", rep.h_z);
      ok = false;
    }
    if (std::abs(rep.deloc_mean - 29.0 / 37.0) > 1e-12) {
      std::printf("  mean delocalisation %.6f, want %.6f\n", rep.deloc_mean,
                  29.0 / 37.0);
      ok = false;
    }
  }
  return ok;
}

bool criterion_7() {
  const auto start = Clock::now();
  const auto g = bonsai::heavy_hexagon(1);
  for (const auto strategy :
       {bonsai::Labelling::Homogeneous, bonsai::Labelling::Heterogeneous}) {
    bonsai::GrowthConfig cfg;
    cfg.labelling = strategy;
    const auto m = bonsai::bonsai(g, cfg);
    if (!m.virtual_edges.empty()) {
      std::printf("  growth used %zu virtual edges\n", m.virtual_edges.size());
      return false;
    }
    long long total = 0;
    for (int i = 0; i < 37; ++i) {
      for (int j = i + 1; j < 37; ++j) {
        total += bonsai::excitation_cost(m, g, {i, j}).total_overhead;
      }
    }
    if (total != 0) {
      std::printf("  single-excitation overhead totals %lld, want 0\n", total);
      return false;
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 120.0) {
    std::printf("  took %.1f s, budget 120 s\n", elapsed);
    return false;
  }
  return true;
}

bool criterion_8() {
  // The reference figure shows this worst case for the homogeneous
  // labelling; the heterogeneous one behaves identically here.
  const auto m = bonsai::pair_modes(bonsai::label_tree(
      bonsai::fixture_structure(bonsai::FixtureKind::HeavyHex37Tree),
      bonsai::Labelling::Homogeneous));
  const auto g = bonsai::heavy_hexagon(1);
  const auto cost = bonsai::excitation_cost(m, g, {27, 34, 35, 36});
  const int want = 2;

  int max_per_string = 0;
  std::set<int> union_support;
  for (const auto& entry : cost.per_string) {
    max_per_string = std::max(max_per_string, entry.overhead);
    union_support.insert(entry.support.begin(), entry.support.end());
  }
  const auto union_cost = bonsai::steiner_cost(
      g, std::vector<int>(union_support.begin(), union_support.end()));
  if (union_cost.overhead == want) return true;

  // Not reproduced; report what the documented proxy actually measures.
  std::printf("  all %zu product strings share one %zu-qubit support"
              " (one third of the device),\n",
              cost.per_string.size(), union_support.size());
  std::printf("  split into two regions separated by a single qubit:"
              " bridge 3 (25 and 29 work too)\n");
  std::printf("  bridging-qubit counts: %d per product string, %d for the"
              " union, %d summed; want %d\n",
              max_per_string, union_cost.overhead, cost.total_overhead, want);
  std::printf("  crossing one bridging qubit takes two SWAP gates, so the"
              " reference count 2 is a gate\n");
  std::printf("  count, twice the bridging-qubit count this proxy is defined"
              " to report\n");
  return false;
}

bool criterion_9() {
  const auto start = Clock::now();
  std::vector<double> log_n, log_depth;
  for (int k = 1; k <= 5; ++k) {
    const auto g = bonsai::heavy_hexagon(k);
    const auto tree = bonsai::grow_tree(g);
    log_n.push_back(std::log(static_cast<double>(g.n_vertices())));
    log_depth.push_back(std::log(static_cast<double>(tree.depth())));
  }
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < log_n.size(); ++i) {
    mean_x += log_n[i];
    mean_y += log_depth[i];
  }
  mean_x /= static_cast<double>(log_n.size());
  mean_y /= static_cast<double>(log_n.size());
  double cov = 0.0, var = 0.0;
  for (std::size_t i = 0; i < log_n.size(); ++i) {
    cov += (log_n[i] - mean_x) * (log_depth[i] - mean_y);
    var += (log_n[i] - mean_x) * (log_n[i] - mean_x);
  }
  const double slope = cov / var;
  const double elapsed = seconds_since(start);
  if (slope < 0.35 || slope > 0.65) {
    std::printf("  log-log depth slope %.3f outside [0.35, 0.65]\n", slope);
    for (std::size_t i = 0; i < log_n.size(); ++i) {
      std::printf("  size %.0f depth %.0f\n", std::exp(log_n[i]),
                  std::exp(log_depth[i]));
    }
    return false;
  }
  if (elapsed >= 60.0) {
    std::printf("  took %.1f s, budget 60 s\n", elapsed);
    return false;
  }
  return true;
}

bool criterion_10() {
  const auto three = bonsai::fixture_mapping(bonsai::FixtureKind::Exotic3NTO);
  const auto one =
      bonsai::fixture_mapping(bonsai::FixtureKind::Exotic1NTONonTree);
  bool ok = true;
  if (bonsai::classify_nto(three) != 3) {
    std::printf("  first exotic mapping classifies as %d, want 3\n",
                bonsai::classify_nto(three));
    ok = false;
  }
  if (bonsai::classify_nto(one) != 1) {
    std::printf("  second exotic mapping classifies as %d, want 1\n",
                bonsai::classify_nto(one));
    ok = false;
  }
  for (const auto* m : {&three, &one}) {
    const auto criteria = bonsai::check_mapping(*m);
    if (!criteria.a_ok || !criteria.b_ok || !criteria.c_ok) {
      std::printf("  exotic mapping fails shape/anticommutation/completeness:"
                  " %d %d %d\n",
                  criteria.a_ok, criteria.b_ok, criteria.c_ok);
      ok = false;
    }
  }
  return ok;
}

bool criterion_11() {
  const auto grown =
      bonsai::fixture_structure(bonsai::FixtureKind::HeavyHex37Tree);
  bool ok = true;
  for (const auto strategy :
       {bonsai::Labelling::Homogeneous, bonsai::Labelling::Heterogeneous}) {
    const bool hom = strategy == bonsai::Labelling::Homogeneous;
    const auto m = bonsai::pair_modes(bonsai::label_tree(grown, strategy));
    const auto& rows = hom ? golden::kHomRows : golden::kHetRows;
    const auto& errata = hom ? golden::kHomErrata : golden::kHetErrata;
    for (int mode = 0; mode < 37; ++mode) {
      const std::string rendered = bonsai::mode_operator_row(m, mode);
      // The rendering must match the corrected reference row everywhere.
      if (rendered != rows[static_cast<std::size_t>(mode)]) {
        std::printf("  %s row %d renders \"%s\", reference \"%s\"\n",
                    hom ? "homogeneous" : "heterogeneous", mode,
                    rendered.c_str(), rows[static_cast<std::size_t>(mode)]);
        ok = false;
      }
      // Outside the errata list the as-printed reference is identical to the
      // corrected row; on the errata list it must genuinely differ.
      const auto it = errata.find(mode);
      if (it != errata.end() && it->second == rendered) {
        std::printf("  %s row %d is on the errata list but matches anyway\n",
                    hom ? "homogeneous" : "heterogeneous", mode);
        ok = false;
      }
    }
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  using Criterion = bool (*)();
  const Criterion criteria[11] = {
      criterion_1, criterion_2, criterion_3, criterion_4,  criterion_5,
      criterion_6, criterion_7, criterion_8, criterion_9, criterion_10,
      criterion_11};
  int first = 1, last = 11;
  if (argc > 1) {
    const int index = std::atoi(argv[1]);
    if (index < 1 || index > 11) {
      std::fprintf(stderr, "usage: %s [criterion 1-11]\n", argv[0]);
      return 2;
    }
    first = last = index;
  }
  bool all_ok = true;
  for (int index = first; index <= last; ++index) {
    const bool ok = criteria[index - 1]();
    std::printf("criterion %d: %s\n", index, ok ? "PASS" : "FAIL");
    if (!ok) all_ok = false;
  }
  return all_ok ? 0 : 1;
}
