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

#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bonsai/pauli.hpp"

namespace bonsai {

/// A labelled edge of a ternary tree: parent -> child via link `label`.
struct TreeEdge {
  int parent;
  int child;
  Pauli label;  // X, Y or Z (never I)
};

/// An open link of a ternary tree: node `node` has no child on link `label`.
struct Leg {
  int node;
  Pauli label;

  bool operator==(const Leg& other) const {
    return node == other.node && label == other.label;
  }
};

/// Structural problems found in raw tree data; empty means valid.
std::vector<std::string> validate_tree(int n_qubits, int root,
                                       const std::vector<TreeEdge>& edges);

/// A ternary tree whose nodes are exactly the qubits 0..n-1. Every node has
/// three links (X, Y, Z); each link either leads to a child or is an open
/// leg. The tree has n-1 labelled edges and 2n+1 legs.
class QubitTree {
 public:
  QubitTree(int n_qubits, int root, const std::vector<TreeEdge>& edges);

  int n_qubits() const { return n_qubits_; }
  int root() const { return root_; }

  /// Child on the given link, or std::nullopt when that link is a leg.
  std::optional<int> child(int node, Pauli label) const;

  /// (parent, link label) for a non-root node; std::nullopt for the root.
  std::optional<std::pair<int, Pauli>> parent_edge(int node) const;

  /// Children of a node in link order X, Y, Z (skipping legs).
  std::vector<std::pair<Pauli, int>> children(int node) const;

  /// Edge list in (parent ascending, label X<Y<Z) order.
  std::vector<TreeEdge> edges() const;

  /// Distance from the root (root has depth 0).
  int node_depth(int node) const;

  /// Maximum node depth.
  int depth() const;

  /// All 2n+1 legs, ordered by (node ascending, label X<Y<Z).
  std::vector<Leg> legs() const;

  /// Product of link labels along the root-to-leg path: one factor per edge,
  /// placed at the edge's parent, plus the leg's label at the leg's node.
  PauliString leg_string(const Leg& leg) const;

  struct AllStrings {
    std::vector<PauliString> strings;  // one per leg, in legs() order
    std::size_t all_z_index;           // index of the single all-Z string
  };

  /// Strings of all 2n+1 legs plus the index of the all-Z string (the leg
  /// reached from the root by Z links only), which a Majorana pairing
  /// discards.
  AllStrings all_strings() const;

 private:
  int n_qubits_;
  int root_;
  // children_[node][label-1] = child index or -1 when the link is a leg.
  std::vector<std::array<int, 3>> children_;
  std::vector<int> parent_;        // -1 for the root
  std::vector<Pauli> parent_label_;  // I for the root
  std::vector<int> depth_;
};

/// An unlabelled rooted tree on qubits 0..n-1, at most three children per
/// node, as produced by growing a spanning tree over a hardware graph.
/// `virtual_edges` records attachments that are not edges of the source
/// graph (used when a degree-saturated frontier forces a remote attachment).
struct GrownTree {
  int n_qubits = 0;
  int root = 0;
  std::vector<int> parent;                        // -1 for the root
  std::vector<std::vector<int>> children;         // ascending within a node
  std::vector<std::pair<int, int>> virtual_edges;  // (parent, child)

  int depth() const;
  std::vector<std::string> validate() const;  // empty means structurally valid
};

}  // namespace bonsai
