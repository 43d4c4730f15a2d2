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

#pragma once

#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "bonsai/mapping.hpp"

namespace bonsai {

/// Undirected, simple, connected device graph over vertices 0..n-1 with unit
/// edge weights. Immutable after construction. Distance data is computed on
/// first use behind a thread-safe once-initialisation and shared between
/// copies; every query afterwards is read-only.
class HardwareGraph {
 public:
  /// Throws std::invalid_argument for out-of-range endpoints, self-loops,
  /// duplicate edges, or a disconnected graph.
  HardwareGraph(int n_vertices, std::vector<std::pair<int, int>> edge_list);

  int n_vertices() const { return n_; }
  /// Normalised edges (u < v), sorted ascending.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  /// Neighbours of v, ascending.
  const std::vector<int>& neighbours(int v) const;
  int degree(int v) const;
  bool has_edge(int u, int v) const;

  /// BFS distances from v to every vertex.
  std::vector<int> distances_from(int v) const;
  int distance(int u, int v) const;
  const std::vector<int>& eccentricities() const;
  int radius() const;
  int diameter() const;
  /// Vertices of minimum eccentricity, ascending.
  std::vector<int> center() const;
  /// One shortest path realising the diameter, deterministic: of all
  /// diameter pairs the lexicographically smallest (a, b) with a < b is
  /// chosen, and the walk from a to b takes the lowest-index neighbour that
  /// still shortens the distance at every step.
  const std::vector<int>& diameter_path() const;

 private:
  struct Metrics {
    std::vector<std::vector<int>> dist;  // all-pairs shortest paths
    std::vector<int> ecc;
    std::vector<int> path;  // the canonical diameter path
  };
  struct Cache {
    std::once_flag once;
    std::unique_ptr<Metrics> data;
  };
  const Metrics& metrics() const;

  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  std::shared_ptr<Cache> cache_;
};

// --- Generators ----------------------------------------------------------

/// Heavy-hexagon device family. k = 1 is the published 37-qubit instance:
/// three hexagonal sub-units around a central degree-3 qubit, every
/// corner-corner link subdivided by an edge qubit, plus three boundary stub
/// qubits. k >= 2 are planar honeycomb patches grown as k-1 cell rings
/// around the same three-cell core, with corner-corner links subdivided and
/// boundary corner slots filled with stub qubits.
HardwareGraph heavy_hexagon(int k);
/// Path 0-1-...-n-1.
HardwareGraph linear_chain(int n);
/// Hub 0 joined to spokes 1..n-1.
HardwareGraph star_graph(int n);
/// rows x cols lattice; vertex (r, c) is r*cols + c.
HardwareGraph grid_graph(int rows, int cols);
/// All-to-all coupling.
HardwareGraph complete_graph(int n);

// --- Steiner / SWAP-cost estimation --------------------------------------

/// A connected subgraph spanning a terminal set, with the extra-node count
/// used as the SWAP proxy (one SWAP per bridging qubit).
struct SteinerResult {
  std::vector<int> terminals;  // deduplicated, ascending
  std::vector<int> nodes;      // tree node set, ascending; includes terminals
  int overhead = 0;            // |nodes| - |terminals|
};

/// Steiner tree of `support` in g. Up to 10 terminals the result is exact
/// (dynamic programming over terminal subsets); above that a 2-approximation
/// via the metric-closure spanning tree is used. Deterministic tie-breaking
/// throughout. Throws std::invalid_argument for an empty or out-of-range
/// support.
SteinerResult steiner_cost(const HardwareGraph& g,
                           const std::vector<int>& support);

/// Cost entry for one reduced operator product.
struct StringCost {
  PauliString op;
  std::vector<int> support;
  std::vector<int> steiner_nodes;
  int overhead = 0;
};

struct SwapCost {
  std::vector<StringCost> per_string;
  int total_overhead = 0;
};

/// SWAP-overhead estimate for a fermionic excitation between the given modes
/// (2 modes: single excitation, 4 products of the modes' Majorana strings;
/// 4 modes: double excitation, 16 products). Each product is reduced
/// exactly, then costed via steiner_cost on its support. Throws
/// std::invalid_argument for repeated or out-of-range modes or a
/// graph/mapping size mismatch.
SwapCost excitation_cost(const MajoranaMapping& mapping,
                         const HardwareGraph& g,
                         const std::vector<int>& modes);

}  // namespace bonsai
