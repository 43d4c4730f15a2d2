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

#include "bonsai/classic.hpp"

#include <stdexcept>
#include <vector>

namespace bonsai {

namespace {

QubitTree path_tree(int n, Pauli link) {
  std::vector<TreeEdge> edges;
  edges.reserve(n > 0 ? n - 1 : 0);
  for (int u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1, link});
  return QubitTree(n, 0, edges);
}

QubitTree complete_binary_tree(int n) {
  std::vector<TreeEdge> edges;
  for (int u = 0; u < n; ++u) {
    if (2 * u + 1 < n) edges.push_back({u, 2 * u + 1, Pauli::X});
    if (2 * u + 2 < n) edges.push_back({u, 2 * u + 2, Pauli::Y});
  }
  return QubitTree(n, 0, edges);
}

QubitTree complete_ternary_tree(int n) {
  std::vector<TreeEdge> edges;
  for (int u = 0; u < n; ++u) {
    if (3 * u + 1 < n) edges.push_back({u, 3 * u + 1, Pauli::X});
    if (3 * u + 2 < n) edges.push_back({u, 3 * u + 2, Pauli::Y});
    if (3 * u + 3 < n) edges.push_back({u, 3 * u + 3, Pauli::Z});
  }
  return QubitTree(n, 0, edges);
}

}  // namespace

QubitTree classic_tree(MappingKind kind, int n) {
  if (n < 1) throw std::invalid_argument("classic_tree requires n >= 1");
  switch (kind) {
    case MappingKind::JordanWigner: return path_tree(n, Pauli::Z);
    case MappingKind::Parity: return path_tree(n, Pauli::X);
    case MappingKind::BravyiKitaev: return complete_binary_tree(n);
    case MappingKind::BalancedTernary: return complete_ternary_tree(n);
  }
  throw std::invalid_argument("unknown mapping kind");
}

MajoranaMapping classic_mapping(MappingKind kind, int n, bool real_variant) {
  return pair_modes(classic_tree(kind, n), std::nullopt, real_variant);
}

QubitTree fixture_tree(FixtureKind kind) {
  if (kind != FixtureKind::ExampleTree11) {
    throw std::invalid_argument(
        "fixture_tree is only available for ExampleTree11; use "
        "fixture_structure for HeavyHex37Tree");
  }
  const std::vector<TreeEdge> edges = {
      {0, 1, Pauli::X}, {0, 2, Pauli::Y}, {0, 3, Pauli::Z},
      {1, 4, Pauli::X}, {1, 5, Pauli::Y},
      {2, 6, Pauli::X}, {2, 7, Pauli::Y}, {2, 8, Pauli::Z},
      {8, 9, Pauli::X}, {8, 10, Pauli::Z},
  };
  return QubitTree(11, 0, edges);
}

GrownTree fixture_structure(FixtureKind kind) {
  if (kind != FixtureKind::HeavyHex37Tree) {
    throw std::invalid_argument("fixture_structure is only available for HeavyHex37Tree");
  }
  // Spanning tree of the 37-qubit heavy-hexagon device, rooted at the
  // central qubit; three structurally identical branches.
  const std::vector<std::pair<int, std::vector<int>>> child_map = {
      {0, {1, 2, 3}},   {1, {4}},    {2, {5}},    {3, {6}},
      {4, {7, 8}},      {5, {9, 10}}, {6, {11, 12}},
      {7, {13}},        {8, {14}},   {9, {15}},   {10, {16}},
      {11, {17}},       {12, {18}},
      {13, {19, 20}},   {14, {21, 22}}, {15, {23, 24}},
      {16, {25, 26}},   {17, {27, 28}}, {18, {29, 30}},
      {22, {31}},       {26, {32}},  {30, {33}},
      {31, {34}},       {32, {35}},  {33, {36}},
  };
  GrownTree t;
  t.n_qubits = 37;
  t.root = 0;
  t.parent.assign(37, -1);
  t.children.assign(37, {});
  for (const auto& [u, kids] : child_map) {
    t.children[u] = kids;
    for (int c : kids) t.parent[c] = u;
  }
  return t;
}

namespace {

MajoranaMapping strings_mapping(int n_qubits,
                                const std::vector<std::pair<const char*, const char*>>& pairs) {
  MajoranaMapping m;
  m.n_modes = static_cast<int>(pairs.size());
  for (const auto& [even_text, odd_text] : pairs) {
    m.even.push_back(PauliString::parse(even_text, n_qubits));
    m.odd.push_back(PauliString::parse(odd_text, n_qubits));
  }
  m.mode_to_qubit.resize(m.n_modes);
  for (int j = 0; j < m.n_modes; ++j) m.mode_to_qubit[j] = j;
  return m;
}

}  // namespace

MajoranaMapping fixture_mapping(FixtureKind kind) {
  switch (kind) {
    case FixtureKind::ExampleTree11:
      return pair_modes(fixture_tree(kind));
    case FixtureKind::HeavyHex37Tree:
      throw std::invalid_argument(
          "HeavyHex37Tree is an unlabelled structure; label it with a "
          "strategy and pair the result");
    case FixtureKind::Exotic3NTO:
      // Valid 4-mode mapping whose string pairs overlap non-trivially on up
      // to three sites; no ternary tree produces it.
      return strings_mapping(4, {
          {"X1 X2 X3", "Y1 Y2 Y3"},
          {"X0 Z1 Y2 Y3", "Y0 Z1 X2 X3"},
          {"Y0 Y1 X3", "X0 X1 Y3"},
          {"X0 X1 X2 Z3", "Y0 Y1 Y2 Z3"},
      });
    case FixtureKind::Exotic1NTONonTree:
      // Pairwise-anticommuting, independent, strictly 1-NTO, yet its string
      // set differs from every labelled-tree mapping on three qubits.
      return strings_mapping(3, {
          {"X0 Z1", "Y0 Z1"},
          {"Z0 X2", "Z0 Y2"},
          {"X1 Z2", "Y1 Z2"},
      });
  }
  throw std::invalid_argument("unknown fixture kind");
}

}  // namespace bonsai
