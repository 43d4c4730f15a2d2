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

#include <optional>
#include <vector>

#include "bonsai/pauli.hpp"
#include "bonsai/tree.hpp"

namespace bonsai {

/// A fermion-to-qubit mapping: for each mode j, the qubit images of its two
/// Majorana operators. With a = (even + i*odd)/2 per mode, the mode's
/// creation operator maps to (even - i*odd)/2.
struct MajoranaMapping {
  int n_modes = 0;
  std::vector<PauliString> even;   // one per mode
  std::vector<PauliString> odd;    // one per mode
  std::vector<int> mode_to_qubit;  // bijection onto 0..n-1 for tree mappings
  std::optional<PauliString> discarded;  // the unused all-Z string, if known
  std::optional<QubitTree> source_tree;
  /// Tree edges that are not edges of the hardware graph the tree was grown
  /// on (empty for classic mappings and connected growths).
  std::vector<std::pair<int, int>> virtual_edges;

  int n_qubits() const;
  /// Strings in the flat order [even_0, odd_0, even_1, odd_1, ...].
  std::vector<PauliString> flat_strings() const;
};

/// Pair the legs of a labelled ternary tree into Majorana operators, one
/// (even, odd) pair per qubit:
///   even(u) follows u's X link and then Z links down to a leg;
///   odd(u)  follows u's Y link and then Z links down to a leg.
/// The all-Z string is discarded. `qubit_of_mode` optionally reassigns which
/// mode index each qubit's pair receives (identity by default).
/// With `real_variant`, pairs whose even string has an odd number of Y
/// factors are swapped, so every even string has even Y parity.
MajoranaMapping pair_modes(
    const QubitTree& tree,
    const std::optional<std::vector<int>>& qubit_of_mode = std::nullopt,
    bool real_variant = false);

/// Qubit bit-flips realising a Fock basis state: the image of the product of
/// creation operators over `occupied_modes` applied to the all-zeros state.
/// Occupying mode j flips j's qubit and every ancestor whose downward link
/// on the path to that qubit is labelled X or Y. Requires a source tree.
BitVec fock_to_bits(const MajoranaMapping& mapping,
                    const std::vector<int>& occupied_modes);

/// Support of i * even_j * odd_j, ascending. For a tree mapping this is the
/// mode's qubit plus the Z tails of its two strings; the mode's number
/// operator maps to (I - prod_{q in z_set} Z_q) / 2.
std::vector<int> z_set(const MajoranaMapping& mapping, int mode);

/// |z_set(mode)| - 1: the number of qubits beyond its own that the mode's
/// occupation number is spread over.
int delocalisation(const MajoranaMapping& mapping, int mode);

}  // namespace bonsai
