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

#include "bonsai/mapping.hpp"

#include <algorithm>
#include <stdexcept>

namespace bonsai {

int MajoranaMapping::n_qubits() const {
  if (!even.empty()) return static_cast<int>(even[0].n_qubits());
  return 0;
}

std::vector<PauliString> MajoranaMapping::flat_strings() const {
  std::vector<PauliString> out;
  out.reserve(2 * even.size());
  for (std::size_t j = 0; j < even.size(); ++j) {
    out.push_back(even[j]);
    out.push_back(odd[j]);
  }
  return out;
}

namespace {

// Leg string reached from `u` by one `first` link followed by Z links.
PauliString descend(const QubitTree& tree, int u, Pauli first) {
  int v = u;
  Pauli label = first;
  while (auto c = tree.child(v, label)) {
    v = *c;
    label = Pauli::Z;
  }
  return tree.leg_string({v, label});
}

}  // namespace

MajoranaMapping pair_modes(const QubitTree& tree,
                           const std::optional<std::vector<int>>& qubit_of_mode,
                           bool real_variant) {
  const int n = tree.n_qubits();
  std::vector<int> qubit(n);
  if (qubit_of_mode) {
    if (qubit_of_mode->size() != static_cast<std::size_t>(n)) {
      throw std::invalid_argument("qubit_of_mode must list one qubit per mode");
    }
    std::vector<bool> used(n, false);
    for (int q : *qubit_of_mode) {
      if (q < 0 || q >= n || used[q]) {
        throw std::invalid_argument("qubit_of_mode must be a bijection onto 0..n-1");
      }
      used[q] = true;
    }
    qubit = *qubit_of_mode;
  } else {
    for (int j = 0; j < n; ++j) qubit[j] = j;
  }

  MajoranaMapping m;
  m.n_modes = n;
  m.mode_to_qubit = qubit;
  m.even.reserve(n);
  m.odd.reserve(n);
  for (int j = 0; j < n; ++j) {
    const int u = qubit[j];
    PauliString s_x = descend(tree, u, Pauli::X);
    PauliString s_y = descend(tree, u, Pauli::Y);
    if (real_variant && s_x.y_count() % 2 == 1) std::swap(s_x, s_y);
    m.even.push_back(std::move(s_x));
    m.odd.push_back(std::move(s_y));
  }
  m.discarded = descend(tree, tree.root(), Pauli::Z);
  m.source_tree = tree;
  return m;
}

BitVec fock_to_bits(const MajoranaMapping& mapping,
                    const std::vector<int>& occupied_modes) {
  if (!mapping.source_tree) {
    throw std::runtime_error("fock_to_bits requires a mapping with a source tree");
  }
  const QubitTree& tree = *mapping.source_tree;
  BitVec bits(static_cast<std::size_t>(tree.n_qubits()));
  for (int j : occupied_modes) {
    if (j < 0 || j >= mapping.n_modes) {
      throw std::invalid_argument("occupied mode index out of range");
    }
    const int u = mapping.mode_to_qubit[j];
    bits.flip(static_cast<std::size_t>(u));
    // Ancestors act on the state through the link label they carry toward u:
    // X and Y links flip the ancestor's qubit, Z links only contribute sign.
    int v = u;
    while (auto pe = tree.parent_edge(v)) {
      const auto [p, label] = *pe;
      if (label == Pauli::X || label == Pauli::Y) bits.flip(static_cast<std::size_t>(p));
      v = p;
    }
  }
  return bits;
}

std::vector<int> z_set(const MajoranaMapping& mapping, int mode) {
  if (mode < 0 || mode >= mapping.n_modes) {
    throw std::invalid_argument("mode index out of range");
  }
  const PauliString product = mapping.even[mode] * mapping.odd[mode];
  std::vector<int> out;
  for (std::size_t u : product.support()) out.push_back(static_cast<int>(u));
  return out;
}

int delocalisation(const MajoranaMapping& mapping, int mode) {
  const auto zs = z_set(mapping, mode);
  if (zs.empty()) {
    throw std::runtime_error("degenerate mode: even*odd has empty support");
  }
  return static_cast<int>(zs.size()) - 1;
}

}  // namespace bonsai
